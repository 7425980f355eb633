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
#include <string>
#include <vector>

#include "dyncode/bits.h"
#include "dyncode/code.h"
#include "dyncode/gf2.h"
#include "dyncode/oracle.h"
#include "dyncode/outcome.h"
#include "dyncode/pauli.h"

namespace dyncode {

/// An element of C or V.
///
/// For C elements, assoc names the associated stabilizer as a combination of S0
/// generators and carry is the outcome of op times that stabilizer. For V
/// elements assoc is empty and carry is the outcome of op itself. Carries are
/// products of Measurement symbols.
struct TrackedPauli {
    PauliOperator op;
    BitVector assoc;
    OutcomeExpr carry;
};

/// An element dropped from C (Case 2) or V (Cases 3 and 4).
struct RemovalEvent {
    PauliOperator op;
    bool from_c;
    /// Associated stabilizer; meaningful only when from_c.
    BitVector assoc;
    /// Window index of the measurement that caused the removal.
    size_t measurement;
};

struct RoundTrace {
    /// Absolute round number; the first entry holds the state before the window.
    size_t round;
    std::vector<PauliOperator> c_ops;
    std::vector<PauliOperator> v_ops;
};

enum class StabilizerClass {
    Unmasked,
    TemporarilyMasked,
    PermanentlyMasked,
};

std::string stabilizer_class_name(StabilizerClass c);

struct UnmaskedStabilizer {
    BitVector element;
    PauliOperator op;
    /// Product of Measurement symbols giving the stabilizer's outcome.
    OutcomeExpr syndrome;
};

struct MaskedStabilizer {
    BitVector element;
    PauliOperator op;
};

struct DestabilizerPair {
    BitVector element;
    PauliOperator op;
    PauliOperator destabilizer;
};

/// Element of the intersection <C> ∩ <V> (or a C identity) with its associated
/// stabilizer and the two outcome pieces O(u) and O(u*s).
struct IntersectionElement {
    PauliOperator u;
    BitVector assoc;
    OutcomeExpr u_outcome;
    OutcomeExpr u_times_s_outcome;
};

struct ClassificationReport {
    size_t n = 0;
    size_t isg_round = 0;
    size_t window = 0;
    std::vector<PauliOperator> s0;
    std::vector<std::string> s0_labels;
    std::vector<MeasurementRecord> measurements;

    std::vector<UnmaskedStabilizer> unmasked;
    std::vector<MaskedStabilizer> temporarily_masked;
    std::vector<DestabilizerPair> permanently_masked;
    /// Element-level class of each S0 generator.
    std::vector<StabilizerClass> generator_classes;

    std::vector<TrackedPauli> c_final;
    std::vector<TrackedPauli> v_final;
    /// Removal events, one list per window round.
    std::vector<std::vector<RemovalEvent>> removals;
    std::vector<RoundTrace> trace;
    /// Schedule problems that do not stop the analysis (e.g. logical measurements).
    std::vector<std::string> diagnostics;

    PauliOperator element_op(const BitVector &element) const;
    /// Class of an arbitrary element of <S0>; throws if op is not in <S0>.
    StabilizerClass classify(const PauliOperator &op) const;

    std::vector<PauliOperator> u_ops() const;
    std::vector<PauliOperator> t_ops() const;
    std::vector<PauliOperator> p_ops() const;
    std::vector<PauliOperator> k_ops() const;
};

/// Runs the C/V update over rounds isg_round+1 .. isg_round+window.
ClassificationReport run_classification(const DynamicalCode &code, size_t window, size_t isg_round = 0);

/// Same, for an explicit window.
ClassificationReport classify_window(
    const Window &window, size_t num_qubits, size_t isg_round = 0, std::vector<std::string> s0_labels = {});

/// Builds the U set from intersection elements; keeps those whose associated
/// stabilizer is independent of the ones kept so far.
std::vector<UnmaskedStabilizer> extract_unmasked(
    const std::vector<IntersectionElement> &elements, const std::vector<PauliOperator> &s0, size_t num_qubits);

/// Associated stabilizers of C_final outside <U ∪ T so far>.
std::vector<MaskedStabilizer> extract_temporarily_masked(
    const std::vector<TrackedPauli> &c_final,
    const std::vector<UnmaskedStabilizer> &unmasked,
    const std::vector<PauliOperator> &s0,
    size_t num_qubits);

/// Replays the removed elements backwards from the final ISG and pairs every
/// element removed from C with a destabilizer.
std::vector<DestabilizerPair> extract_permanently_masked(
    const Window &window, const std::vector<std::vector<RemovalEvent>> &removals, size_t num_qubits);

}  // namespace dyncode
