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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyncode/classification.h"
#include "dyncode/code.h"
#include "dyncode/distance.h"
#include "dyncode/oracle.h"
#include "dyncode/outcome.h"
#include "dyncode/pauli.h"
#include "dyncode/stabilizer.h"

namespace dyncode {

/// Pauli errors placed between measurement rounds. Round indices are relative
/// to the analyzed ISG: e_0 acts on that ISG before the first window round and
/// e_i acts after window round i.
struct SpacetimeError {
    size_t n = 0;
    std::map<size_t, PauliOperator> by_round;

    /// e_i, or the identity.
    PauliOperator at(size_t round) const;
    /// E_k: the product of e_i over i >= k.
    PauliOperator net_after(size_t k) const;
    size_t last_round() const;

    /// "round:pauli" items separated by commas, e.g. "0:X1,2:Z6Z7". Repeated rounds multiply.
    static SpacetimeError parse(std::string_view spec, size_t num_qubits);
    std::string str() const;
};

/// Per-round terms e_j ⊙ (m_{j+1} ... m_f) of the syndrome of s = m_1 ... m_f.
/// decomposition[i-1] is m_i. Throws std::invalid_argument if the product is not s.
std::vector<bool> syndrome_terms(
    const SpacetimeError &error, const std::vector<PauliOperator> &decomposition, const PauliOperator &s);
/// Parity of syndrome_terms: 1 means the observed outcome of s is flipped.
bool syndrome_of_spacetime_error(
    const SpacetimeError &error, const std::vector<PauliOperator> &decomposition, const PauliOperator &s);

/// Splits a product of Measurement symbols into per-round factors m_1 .. m_window.
std::vector<PauliOperator> decomposition_from_formula(
    const OutcomeExpr &formula, const std::vector<MeasurementRecord> &measurements, size_t isg_round, size_t window, size_t num_qubits);

/// Symbolic run of a window with errors. Outcomes use InitialStabilizer symbols
/// for S0, InitialLogical symbols for tracked logicals, RandomBit symbols for
/// nondeterministic measurements and ErrorSyndrome symbol j for e_j.
struct SpacetimeRun {
    Window window;
    std::vector<OutcomeExpr> outcomes;
    /// Window measurement that produced each random bit.
    std::vector<size_t> random_bit_measurement;
    ISGState final_state{0};
};

/// logicals must commute with S0 and with one another.
SpacetimeRun simulate_spacetime(
    const Window &window, size_t num_qubits, const SpacetimeError &error, const std::vector<PauliOperator> &logicals = {});

/// How one logical representative evolved over an error-free window.
struct LogicalTrace {
    PauliOperator initial;
    /// s_0 as a combination of S0 generators, and as an operator.
    BitVector s0_element;
    PauliOperator s0;
    /// m[i-1] = m_i and the window measurements whose product it is.
    std::vector<PauliOperator> m;
    std::vector<std::vector<size_t>> m_measurements;
    PauliOperator final;
    /// Error-free outcome over InitialLogical 0, InitialStabilizer and RandomBit symbols.
    OutcomeExpr outcome;
};

/// Tracks one logical through the window; final = initial * s0 * m_1 * ... is checked.
/// Throws LogicalMeasurementError if the window measures the logical.
LogicalTrace trace_logical(const Window &window, size_t num_qubits, const PauliOperator &logical);

/// Outcome bit of the final logical under the errors. assignment must give the
/// initial logical (InitialLogical 0), the S0 symbols and the observed value of
/// every window measurement used (Measurement k).
bool logical_outcome(
    const LogicalTrace &trace,
    const SpacetimeError &error,
    const std::function<bool(const OutcomeSymbol &)> &assignment);

struct DecodingVerdict {
    size_t max_weight = 0;
    size_t num_errors = 0;
    size_t num_syndromes = 0;
    /// 2 * max_weight + 1 <= d_u, so no violation is expected.
    bool within_distance = false;
    /// Errors indistinguishable from their class representative only up to a
    /// gauge element outside <S0>.
    size_t gauge_equivalent = 0;
    /// First pair with equal U-syndromes whose product lies outside G.
    std::optional<std::pair<PauliOperator, PauliOperator>> violation;

    bool ok() const {
        return !violation.has_value();
    }
};

/// Enumerates every round-0 error of weight <= max_weight and checks that errors
/// with equal U-syndromes differ by an element of the gauge group.
/// Throws std::length_error when more than error_cap errors would be enumerated.
DecodingVerdict verify_round0_decoding(
    const ClassificationReport &report,
    const GaugeGroup &gauge,
    size_t max_weight,
    const DistanceResult &d_u,
    size_t error_cap = 2000000);

/// All Paulis of weight 0..max_weight, ordered by weight, then
/// support, then X < Y < Z on each qubit.
std::vector<PauliOperator> enumerate_errors(size_t num_qubits, size_t max_weight, size_t cap = 2000000);

}  // namespace dyncode
