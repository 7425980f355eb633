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

#include "dyncode/oracle.h"

#include <stdexcept>

#include "dyncode/gf2.h"
#include "dyncode/stabilizer.h"

namespace dyncode {

Window make_window(const DynamicalCode &code, size_t window, size_t isg_round) {
    Window out;
    out.isg_round = isg_round;
    std::vector<std::vector<PauliOperator>> before;
    for (size_t t = 1; t <= isg_round; t++) {
        before.push_back(code.round(t));
    }
    out.s0 = isg_round ? evolve_generators(code.s0, before, code.n) : code.s0;
    for (size_t t = isg_round + 1; t <= isg_round + window; t++) {
        if (!code.has_round(t)) {
            throw std::invalid_argument(
                "window of " + std::to_string(window) + " rounds after round " + std::to_string(isg_round) +
                " exceeds the " + std::to_string(code.num_rounds()) + " rounds of a non-periodic code");
        }
        const auto &round = code.round(t);
        out.rounds.push_back(round);
        for (size_t j = 0; j < round.size(); j++) {
            out.measurements.push_back(MeasurementRecord{t, j, round[j], code.measurement_label(t, j)});
        }
    }
    return out;
}

std::optional<OutcomeExpr> OracleResult::formula_for(const BitVector &element) const {
    EchelonBasis basis(s0.size(), recoverable_basis.size());
    for (const auto &e : recoverable_basis) {
        basis.insert(e.element);
    }
    auto combo = basis.combination(element);
    if (!combo) {
        return std::nullopt;
    }
    OutcomeExpr out;
    for (size_t i = combo->find_first(); i != BitVector::npos; i = combo->find_next(i)) {
        out *= *recoverable_basis[i].formula;
    }
    return out;
}

std::vector<PauliOperator> OracleResult::unmasked_generators() const {
    std::vector<PauliOperator> out;
    for (const auto &e : recoverable_basis) {
        out.push_back(e.op);
    }
    return out;
}

OracleResult forward_oracle(const DynamicalCode &code, size_t window, size_t isg_round, size_t enumeration_cap) {
    return forward_oracle(make_window(code, window, isg_round), code.n, enumeration_cap);
}

OracleResult forward_oracle(const Window &window, size_t num_qubits, size_t enumeration_cap) {
    size_t k = window.s0.size();
    if (k > enumeration_cap) {
        throw std::length_error(
            "forward oracle enumerates all 2^" + std::to_string(k) + " elements of <S0>; cap is 2^" +
            std::to_string(enumeration_cap));
    }
    OracleResult res;
    res.n = num_qubits;
    res.s0 = window.s0;
    res.measurements = window.measurements;

    ISGState state = ISGState::with_initial_symbols(window.s0, num_qubits);
    for (const auto &round : window.rounds) {
        for (const auto &m : round) {
            res.measurement_outcomes.push_back(state.measure(m).outcome);
        }
        state.check_invariants();
    }

    // Rows: [random bits | initial symbols], random columns first so that echelon
    // rows with an empty random part expose the recoverable combinations.
    size_t num_random = state.next_random();
    size_t width = num_random + k;
    BitMatrix rows(0, width);
    for (const auto &o : res.measurement_outcomes) {
        BitVector v(width);
        for (const auto &s : o.symbols()) {
            if (s.kind == SymbolKind::RandomBit) {
                v.flip(s.index);
            } else if (s.kind == SymbolKind::InitialStabilizer) {
                v.flip(num_random + s.index);
            } else {
                throw InvariantViolation("unexpected symbol in forward simulation: " + s.str());
            }
        }
        rows.append_row(std::move(v));
    }
    RrefResult red = rref(rows);
    for (size_t i = 0; i < red.rank; i++) {
        const BitVector &row = red.echelon.row(i);
        if (row.slice(0, num_random).any()) {
            continue;
        }
        BitVector element = row.slice(num_random, k);
        OutcomeExpr formula;
        PauliOperator op(num_qubits);
        const BitVector &tr = red.transform.row(i);
        for (size_t j = tr.find_first(); j != BitVector::npos; j = tr.find_next(j)) {
            formula *= OutcomeExpr::symbol(SymbolKind::Measurement, static_cast<uint32_t>(j));
            if (res.measurement_outcomes[j].sign()) {
                formula.flip_sign();
            }
        }
        for (size_t g = element.find_first(); g != BitVector::npos; g = element.find_next(g)) {
            op *= window.s0[g];
        }
        res.recoverable_basis.push_back(OracleEntry{std::move(element), std::move(op), std::move(formula)});
    }

    uint64_t count = uint64_t{1} << k;
    res.entries.reserve(count);
    for (uint64_t mask = 0; mask < count; mask++) {
        BitVector element(k);
        PauliOperator op(num_qubits);
        for (size_t g = 0; g < k; g++) {
            if ((mask >> g) & 1) {
                element.set(g);
                op *= window.s0[g];
            }
        }
        auto formula = res.formula_for(element);
        res.entries.push_back(OracleEntry{std::move(element), std::move(op), std::move(formula)});
    }
    return res;
}

}  // namespace dyncode
