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
#include <stdexcept>
#include <utility>
#include <vector>

#include "dyncode/bits.h"
#include "dyncode/outcome.h"
#include "dyncode/pauli.h"

namespace dyncode {

/// A measurement anticommuted with a tracked logical while commuting with the
/// whole stabilizer group.
class LogicalMeasurementError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class LogicalPolicy {
    /// Throw LogicalMeasurementError.
    Error,
    /// Replace the first anticommuting logical by the measured operator.
    Track,
};

enum class MeasureCase {
    /// m is in the stabilizer group; the outcome is determined.
    InGroup,
    /// m anticommutes with some generator, which it replaces.
    Anticommuting,
    /// m commutes with everything and is independent; appended.
    Independent,
    /// m is a product of stabilizers and tracked logicals; determined.
    LogicalValue,
    /// m is a logical anticommuting with a tracked logical (tracked policy only).
    LogicalMeasured,
};

struct TrackedLogical {
    PauliOperator op;
    OutcomeExpr outcome;
};

struct MeasureResult {
    OutcomeExpr outcome;
    MeasureCase kind;
    /// Generator index m took over (Anticommuting) or was appended at (Independent).
    size_t index = static_cast<size_t>(-1);
    /// The generator m replaced, before replacement (Anticommuting only).
    std::optional<PauliOperator> replaced;
    std::optional<OutcomeExpr> replaced_outcome;
};

/// Instantaneous stabilizer group with a symbolic outcome for each generator.
class ISGState {
   public:
    explicit ISGState(size_t num_qubits);

    /// Generators with outcome O(s_i) given by initial-stabilizer symbol i.
    static ISGState with_initial_symbols(const std::vector<PauliOperator> &generators, size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    size_t size() const {
        return generators_.size();
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    const std::vector<OutcomeExpr> &outcomes() const {
        return outcomes_;
    }
    const std::vector<TrackedLogical> &logicals() const {
        return logicals_;
    }

    /// Appends a generator; it must commute with the group and be independent.
    void add_generator(const PauliOperator &op, const OutcomeExpr &outcome);
    /// Tracks a logical; it must commute with the generators and other tracked logicals.
    size_t add_logical(const PauliOperator &op, const OutcomeExpr &outcome);

    /// Applies the stabilizer and logical update rules for a measurement of m.
    MeasureResult measure(const PauliOperator &m, LogicalPolicy policy = LogicalPolicy::Error);

    /// Multiplies the outcome of every generator and logical anticommuting with e by flip.
    void apply_error(const PauliOperator &e, const OutcomeExpr &flip);

    /// Outcome of a group element, or nullopt when op is not in the group.
    std::optional<OutcomeExpr> value_of(const PauliOperator &op) const;
    bool contains(const PauliOperator &op) const;

    /// Index the next random-bit symbol will get.
    uint32_t next_random() const {
        return next_random_;
    }
    void set_next_random(uint32_t index) {
        next_random_ = index;
    }

    /// Throws InvariantViolation if generators fail to commute or are dependent.
    void check_invariants() const;

   private:
    OutcomeExpr fresh();

    size_t n_;
    std::vector<PauliOperator> generators_;
    std::vector<OutcomeExpr> outcomes_;
    std::vector<TrackedLogical> logicals_;
    uint32_t next_random_ = 0;
};

/// Value-style wrapper around ISGState::measure.
std::pair<ISGState, OutcomeExpr> measure(ISGState state, const PauliOperator &m);

/// Generators of the group reached from s0 after rounds 1..num_rounds.
std::vector<PauliOperator> evolve_generators(
    const std::vector<PauliOperator> &s0, const std::vector<std::vector<PauliOperator>> &rounds, size_t num_qubits);

/// True iff both lists generate the same group.
bool same_group(const std::vector<PauliOperator> &a, const std::vector<PauliOperator> &b, size_t num_qubits);
/// True iff every element of a lies in the group generated by b.
bool group_contains(const std::vector<PauliOperator> &b, const std::vector<PauliOperator> &a, size_t num_qubits);
size_t group_rank(const std::vector<PauliOperator> &ops, size_t num_qubits);

}  // namespace dyncode
