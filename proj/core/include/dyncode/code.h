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
#include <stdexcept>
#include <string>
#include <vector>

#include "dyncode/pauli.h"

namespace dyncode {

/// Thrown when an internal consistency check fails. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A code defined by an initial stabilizer group and rounds of commuting measurements.
///
/// Rounds are numbered from 1; round 0 is the initial state. A periodic code
/// repeats rounds[prefix_rounds..] indefinitely after the prefix.
struct DynamicalCode {
    size_t n = 0;
    std::vector<PauliOperator> s0;
    std::vector<std::vector<PauliOperator>> rounds;
    /// Logical representatives used by error simulation; may anticommute pairwise.
    std::vector<PauliOperator> logicals;

    /// Optional names. Either empty or shaped like the corresponding operator lists.
    std::vector<std::string> s0_labels;
    std::vector<std::vector<std::string>> round_labels;
    std::vector<std::string> logical_labels;

    bool periodic = false;
    size_t prefix_rounds = 0;

    size_t num_rounds() const {
        return rounds.size();
    }
    size_t cycle_length() const {
        return rounds.size() - prefix_rounds;
    }
    /// Index into rounds for round t (t >= 1). Non-periodic codes reject t > num_rounds().
    size_t round_index(size_t t) const;
    const std::vector<PauliOperator> &round(size_t t) const {
        return rounds[round_index(t)];
    }
    /// Number of rounds available from round 1; unbounded for periodic codes.
    bool has_round(size_t t) const {
        return t >= 1 && (periodic ? !rounds.empty() && cycle_length() > 0 : t <= rounds.size());
    }
    std::string s0_label(size_t i) const;
    std::string measurement_label(size_t t, size_t j) const;

    bool operator==(const DynamicalCode &other) const = default;
};

enum class DiagnosticKind {
    SizeMismatch,
    NonCommutingS0,
    DependentS0,
    NonCommutingRound,
    BadLogical,
    BadLabels,
    BadPeriod,
};

std::string diagnostic_kind_name(DiagnosticKind kind);

struct Diagnostic {
    DiagnosticKind kind;
    std::string message;
    /// 0 for S0, t for round t, -1 when not applicable.
    long round = -1;
    long first = -1;
    long second = -1;
};

/// Reports every violated invariant; empty iff the code is well formed.
std::vector<Diagnostic> validate_code(const DynamicalCode &code);

/// Throws std::invalid_argument carrying the first diagnostic when validation fails.
void require_valid(const DynamicalCode &code);

}  // namespace dyncode
