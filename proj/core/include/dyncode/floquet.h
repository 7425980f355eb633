// Copyright 2026 The dyncode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dyncode/code.h"
#include "dyncode/pauli.h"

namespace dyncode {

/// Snapshots of the stabilizer group while a measurement sequence is repeated
/// from the empty group.
struct CycleTrace {
    size_t n = 0;
    std::vector<PauliOperator> prefix;
    std::vector<PauliOperator> sequence;
    /// groups[j][i]: generators after measurement i of cycle j+1 (both 0-based in storage).
    std::vector<std::vector<std::vector<PauliOperator>>> groups;
    /// ranks[j][i] = rank of groups[j][i].
    std::vector<std::vector<size_t>> ranks;
    /// Group and rank after the prefix, before the first cycle.
    std::vector<PauliOperator> prefix_group;
    size_t prefix_rank = 0;
    /// First cycle j (1-based) whose groups equal those of cycle j+1 at every index.
    std::optional<size_t> fixpoint;

    size_t num_cycles() const {
        return groups.size();
    }
    /// Rank at the end of cycle j (1-based); j = 0 gives prefix_rank.
    size_t end_rank(size_t j) const {
        return j == 0 ? prefix_rank : ranks[j - 1].back();
    }
};

/// Repeats sequence after measuring prefix once, stopping one cycle after the
/// fixpoint or after max_cycles.
CycleTrace iterate_cycles(
    const std::vector<PauliOperator> &sequence,
    size_t num_qubits,
    size_t max_cycles,
    const std::vector<PauliOperator> &prefix = {});

/// The code's prefix rounds and cycle, flattened. S0 is ignored: initialization
/// starts from the empty group.
CycleTrace iterate_cycles(const DynamicalCode &code, size_t max_cycles);

struct MonotonicityViolation {
    /// The group after measurement index of cycle is not contained in the group
    /// at the same index of cycle + 1.
    size_t cycle;
    size_t index;
};

std::vector<MonotonicityViolation> check_subset_monotonicity(const CycleTrace &trace);

struct GrowthReport {
    /// Per cycle (1-based storage index j-1): end_rank(j) - end_rank(j-1).
    std::vector<size_t> deltas;
    /// index_deltas[j][i] = ranks[j][i] - ranks[j-1][i] for j >= 1; row 0 measures from the prefix rank.
    std::vector<std::vector<size_t>> index_deltas;
    std::vector<std::string> violations;

    bool ok() const {
        return violations.empty();
    }
};

/// Checks that per-cycle growth never increases and that growth at an index in
/// one cycle implies growth at that index in the previous cycle.
GrowthReport growth_accounting(const CycleTrace &trace);

/// Initialization depth: the least k such that the groups at the ends of cycles k
/// and k+1 agree, after which every snapshot is stationary. This is the fixpoint
/// index or one less. nullopt if the trace stopped first.
std::optional<size_t> initialization_depth(const CycleTrace &trace);

/// Repeating {s1, d1 d2 d3, s1 d2 d3, d1 s2 s3, s2} on three qubits, extended one
/// qubit at a time by inserting a four-measurement block before the final s2.
/// s_i = Z_i and d_i = X_i. The result takes exactly n-1 cycles to initialize;
/// construction verifies this and throws InvariantViolation otherwise.
DynamicalCode build_worst_case_sequence(size_t n);

/// Round 1 measures X1; the cycle is X_{4i+2}X_{4i+3}, Z_{4i+1}Z_{4i+2},
/// X_{4i}X_{4i+1}, Z_{4i+3}Z_{4i+4} (1-based qubits, terms off the chain dropped).
DynamicalCode build_1d_chain(size_t n);

struct UnmaskCount {
    /// Whole cycles of the window that left no temporarily masked stabilizer.
    size_t cycles = 0;
    size_t measurements = 0;
};

/// Smallest number of whole cycles after isg_round for which classification
/// reports no temporarily masked stabilizer; nullopt if max_cycles is not enough.
/// Throws std::invalid_argument for non-periodic codes.
std::optional<UnmaskCount> unmask_cycle_count(const DynamicalCode &code, size_t isg_round, size_t max_cycles = 32);

}  // namespace dyncode
