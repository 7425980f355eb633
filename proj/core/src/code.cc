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

#include "dyncode/code.h"

#include "dyncode/gf2.h"

namespace dyncode {

size_t DynamicalCode::round_index(size_t t) const {
    if (t == 0) {
        throw std::out_of_range("round numbers start at 1");
    }
    if (t <= rounds.size()) {
        return t - 1;
    }
    if (!periodic || cycle_length() == 0) {
        throw std::out_of_range(
            "round " + std::to_string(t) + " requested but the code has only " + std::to_string(rounds.size()) +
            " rounds and is not periodic");
    }
    return prefix_rounds + (t - 1 - prefix_rounds) % cycle_length();
}

std::string DynamicalCode::s0_label(size_t i) const {
    if (i < s0_labels.size() && !s0_labels[i].empty()) {
        return s0_labels[i];
    }
    return "s" + std::to_string(i);
}

std::string DynamicalCode::measurement_label(size_t t, size_t j) const {
    size_t idx = round_index(t);
    if (idx < round_labels.size() && j < round_labels[idx].size() && !round_labels[idx][j].empty()) {
        return round_labels[idx][j];
    }
    return "r" + std::to_string(t) + "." + std::to_string(j);
}

std::string diagnostic_kind_name(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::SizeMismatch:
            return "size-mismatch";
        case DiagnosticKind::NonCommutingS0:
            return "non-commuting-s0";
        case DiagnosticKind::DependentS0:
            return "dependent-s0";
        case DiagnosticKind::NonCommutingRound:
            return "non-commuting-round";
        case DiagnosticKind::BadLogical:
            return "bad-logical";
        case DiagnosticKind::BadLabels:
            return "bad-labels";
        case DiagnosticKind::BadPeriod:
            return "bad-period";
    }
    return "unknown";
}

std::vector<Diagnostic> validate_code(const DynamicalCode &code) {
    std::vector<Diagnostic> out;
    auto size_ok = [&](const PauliOperator &p, long round, long index) {
        if (p.num_qubits() == code.n) {
            return true;
        }
        out.push_back(Diagnostic{
            DiagnosticKind::SizeMismatch,
            "operator acts on " + std::to_string(p.num_qubits()) + " qubits but the code has " +
                std::to_string(code.n),
            round,
            index,
            -1});
        return false;
    };

    bool s0_sizes_ok = true;
    for (size_t i = 0; i < code.s0.size(); i++) {
        s0_sizes_ok &= size_ok(code.s0[i], 0, static_cast<long>(i));
    }
    if (s0_sizes_ok) {
        for (size_t i = 0; i < code.s0.size(); i++) {
            for (size_t j = i + 1; j < code.s0.size(); j++) {
                if (code.s0[i].anticommutes_with(code.s0[j])) {
                    out.push_back(Diagnostic{
                        DiagnosticKind::NonCommutingS0,
                        "S0 generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute",
                        0,
                        static_cast<long>(i),
                        static_cast<long>(j)});
                }
            }
        }
        EchelonBasis basis(2 * code.n);
        for (size_t i = 0; i < code.s0.size(); i++) {
            if (!basis.insert(code.s0[i].symplectic())) {
                out.push_back(Diagnostic{
                    DiagnosticKind::DependentS0,
                    "S0 generator " + std::to_string(i) + " is a product of earlier generators",
                    0,
                    static_cast<long>(i),
                    -1});
            }
        }
        for (size_t i = 0; i < code.logicals.size(); i++) {
            const auto &l = code.logicals[i];
            if (!size_ok(l, -1, static_cast<long>(i))) {
                continue;
            }
            for (size_t j = 0; j < code.s0.size(); j++) {
                if (l.anticommutes_with(code.s0[j])) {
                    out.push_back(Diagnostic{
                        DiagnosticKind::BadLogical,
                        "logical " + std::to_string(i) + " anticommutes with S0 generator " + std::to_string(j),
                        -1,
                        static_cast<long>(i),
                        static_cast<long>(j)});
                }
            }
            if (basis.contains(l.symplectic())) {
                out.push_back(Diagnostic{
                    DiagnosticKind::BadLogical,
                    "logical " + std::to_string(i) + " lies in the stabilizer group",
                    -1,
                    static_cast<long>(i),
                    -1});
            }
        }
    }

    for (size_t r = 0; r < code.rounds.size(); r++) {
        const auto &round = code.rounds[r];
        long t = static_cast<long>(r + 1);
        bool sizes_ok = true;
        for (size_t j = 0; j < round.size(); j++) {
            sizes_ok &= size_ok(round[j], t, static_cast<long>(j));
        }
        if (!sizes_ok) {
            continue;
        }
        for (size_t a = 0; a < round.size(); a++) {
            for (size_t b = a + 1; b < round.size(); b++) {
                if (round[a].anticommutes_with(round[b])) {
                    out.push_back(Diagnostic{
                        DiagnosticKind::NonCommutingRound,
                        "round " + std::to_string(t) + ": measurements " + std::to_string(a) + " (" +
                            round[a].sparse_str() + ") and " + std::to_string(b) + " (" + round[b].sparse_str() +
                            ") anticommute",
                        t,
                        static_cast<long>(a),
                        static_cast<long>(b)});
                }
            }
        }
    }

    if (!code.s0_labels.empty() && code.s0_labels.size() != code.s0.size()) {
        out.push_back(Diagnostic{DiagnosticKind::BadLabels, "s0 label count differs from generator count", 0, -1, -1});
    }
    if (!code.round_labels.empty()) {
        if (code.round_labels.size() != code.rounds.size()) {
            out.push_back(Diagnostic{DiagnosticKind::BadLabels, "round label count differs from round count", -1, -1, -1});
        } else {
            for (size_t r = 0; r < code.rounds.size(); r++) {
                if (!code.round_labels[r].empty() && code.round_labels[r].size() != code.rounds[r].size()) {
                    out.push_back(Diagnostic{
                        DiagnosticKind::BadLabels,
                        "round " + std::to_string(r + 1) + " label count differs from measurement count",
                        static_cast<long>(r + 1),
                        -1,
                        -1});
                }
            }
        }
    }
    if (!code.logical_labels.empty() && code.logical_labels.size() != code.logicals.size()) {
        out.push_back(Diagnostic{DiagnosticKind::BadLabels, "logical label count differs from logical count", -1, -1, -1});
    }
    if (code.prefix_rounds > code.rounds.size() || (code.periodic && code.prefix_rounds == code.rounds.size())) {
        out.push_back(Diagnostic{
            DiagnosticKind::BadPeriod, "prefix_rounds leaves no repeating rounds", -1, -1, -1});
    }
    return out;
}

void require_valid(const DynamicalCode &code) {
    auto diags = validate_code(code);
    if (!diags.empty()) {
        throw std::invalid_argument("invalid code: " + diags.front().message);
    }
}

}  // namespace dyncode
