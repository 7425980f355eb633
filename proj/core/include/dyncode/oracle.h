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

#include "dyncode/bits.h"
#include "dyncode/code.h"
#include "dyncode/outcome.h"
#include "dyncode/pauli.h"

namespace dyncode {

/// One measurement of an analysis window. Window measurements are numbered
/// consecutively; that number is the index of the matching Measurement symbol.
struct MeasurementRecord {
    /// Absolute round number (1-based) and position within the round.
    size_t round;
    size_t position;
    PauliOperator op;
    std::string label;
};

/// Rounds isg_round+1 .. isg_round+window of the code, with their records.
struct Window {
    /// Rounds already applied to reach s0; window round i is absolute round isg_round + i.
    size_t isg_round = 0;
    std::vector<PauliOperator> s0;
    std::vector<std::vector<PauliOperator>> rounds;
    std::vector<MeasurementRecord> measurements;
};

/// S0 of the window is the group reached after isg_round rounds (the code's own
/// s0 when isg_round is 0).
Window make_window(const DynamicalCode &code, size_t window, size_t isg_round = 0);

struct OracleEntry {
    /// Combination of S0 generators.
    BitVector element;
    PauliOperator op;
    /// Product of Measurement symbols equal to the element's outcome, if recoverable.
    std::optional<OutcomeExpr> formula;
};

struct OracleResult {
    size_t n = 0;
    std::vector<PauliOperator> s0;
    std::vector<MeasurementRecord> measurements;
    /// Outcome of each measurement over initial-stabilizer and random-bit symbols.
    std::vector<OutcomeExpr> measurement_outcomes;
    /// A basis of the recoverable subgroup of <S0>.
    std::vector<OracleEntry> recoverable_basis;
    /// Every element of <S0>, in increasing order of the combination bits.
    std::vector<OracleEntry> entries;

    std::optional<OutcomeExpr> formula_for(const BitVector &element) const;
    std::vector<PauliOperator> unmasked_generators() const;
};

/// Simulates the window symbolically and decides, for every element of <S0>,
/// whether some product of measurement outcomes equals its initial value.
/// Throws std::length_error when |S0| exceeds enumeration_cap.
OracleResult forward_oracle(const DynamicalCode &code, size_t window, size_t isg_round = 0, size_t enumeration_cap = 16);
OracleResult forward_oracle(const Window &window, size_t num_qubits, size_t enumeration_cap = 16);

}  // namespace dyncode
