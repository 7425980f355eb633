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

#include "dyncode/stabilizer.h"

#include "dyncode/code.h"
#include "dyncode/gf2.h"

namespace dyncode {

ISGState::ISGState(size_t num_qubits) : n_(num_qubits) {
}

ISGState ISGState::with_initial_symbols(const std::vector<PauliOperator> &generators, size_t num_qubits) {
    ISGState out(num_qubits);
    for (size_t i = 0; i < generators.size(); i++) {
        out.add_generator(generators[i], OutcomeExpr::symbol(SymbolKind::InitialStabilizer, static_cast<uint32_t>(i)));
    }
    return out;
}

void ISGState::add_generator(const PauliOperator &op, const OutcomeExpr &outcome) {
    if (op.num_qubits() != n_) {
        throw std::invalid_argument("generator size does not match the state");
    }
    for (const auto &g : generators_) {
        if (g.anticommutes_with(op)) {
            throw std::invalid_argument("generator " + op.str() + " anticommutes with " + g.str());
        }
    }
    if (contains(op)) {
        throw std::invalid_argument("generator " + op.str() + " is already in the group");
    }
    generators_.push_back(op);
    outcomes_.push_back(outcome);
}

size_t ISGState::add_logical(const PauliOperator &op, const OutcomeExpr &outcome) {
    if (op.num_qubits() != n_) {
        throw std::invalid_argument("logical size does not match the state");
    }
    for (const auto &g : generators_) {
        if (g.anticommutes_with(op)) {
            throw std::invalid_argument("logical " + op.str() + " anticommutes with stabilizer " + g.str());
        }
    }
    for (const auto &l : logicals_) {
        if (l.op.anticommutes_with(op)) {
            throw std::invalid_argument("tracked logicals must commute: " + op.str() + " vs " + l.op.str());
        }
    }
    logicals_.push_back(TrackedLogical{op, outcome});
    return logicals_.size() - 1;
}

OutcomeExpr ISGState::fresh() {
    return OutcomeExpr::symbol(SymbolKind::RandomBit, next_random_++);
}

MeasureResult ISGState::measure(const PauliOperator &m, LogicalPolicy policy) {
    if (m.num_qubits() != n_) {
        throw std::invalid_argument("measured operator size does not match the state");
    }
    size_t first = static_cast<size_t>(-1);
    std::vector<size_t> anti;
    for (size_t i = 0; i < generators_.size(); i++) {
        if (generators_[i].anticommutes_with(m)) {
            anti.push_back(i);
        }
    }

    if (!anti.empty()) {
        first = anti.front();
        PauliOperator s1 = generators_[first];
        OutcomeExpr o1 = outcomes_[first];
        for (size_t k = 1; k < anti.size(); k++) {
            generators_[anti[k]] *= s1;
            outcomes_[anti[k]] *= o1;
        }
        for (auto &l : logicals_) {
            if (l.op.anticommutes_with(m)) {
                l.op *= s1;
                l.outcome *= o1;
            }
        }
        generators_[first] = m;
        outcomes_[first] = fresh();
        return MeasureResult{outcomes_[first], MeasureCase::Anticommuting, first, s1, o1};
    }

    // m commutes with the whole group. Check membership in <S> and then <S, L>.
    size_t total = generators_.size() + logicals_.size();
    EchelonBasis basis(2 * n_, total);
    for (const auto &g : generators_) {
        basis.insert(g.symplectic());
    }
    for (const auto &l : logicals_) {
        basis.insert(l.op.symplectic());
    }
    if (auto combo = basis.combination(m.symplectic())) {
        OutcomeExpr out;
        bool uses_logical = false;
        for (size_t i = combo->find_first(); i != BitVector::npos; i = combo->find_next(i)) {
            if (i < generators_.size()) {
                out *= outcomes_[i];
            } else {
                out *= logicals_[i - generators_.size()].outcome;
                uses_logical = true;
            }
        }
        MeasureCase kind = uses_logical ? MeasureCase::LogicalValue : MeasureCase::InGroup;
        return MeasureResult{out, kind, static_cast<size_t>(-1), std::nullopt, std::nullopt};
    }

    std::vector<size_t> anti_logicals;
    for (size_t i = 0; i < logicals_.size(); i++) {
        if (logicals_[i].op.anticommutes_with(m)) {
            anti_logicals.push_back(i);
        }
    }
    if (!anti_logicals.empty()) {
        if (policy == LogicalPolicy::Error) {
            throw LogicalMeasurementError(
                "measurement " + m.sparse_str() + " commutes with every stabilizer but anticommutes with tracked logical " +
                logicals_[anti_logicals.front()].op.sparse_str());
        }
        TrackedLogical &l1 = logicals_[anti_logicals.front()];
        PauliOperator old_op = l1.op;
        OutcomeExpr old_outcome = l1.outcome;
        for (size_t k = 1; k < anti_logicals.size(); k++) {
            logicals_[anti_logicals[k]].op *= old_op;
            logicals_[anti_logicals[k]].outcome *= old_outcome;
        }
        l1.op = m;
        l1.outcome = fresh();
        return MeasureResult{l1.outcome, MeasureCase::LogicalMeasured, anti_logicals.front(), old_op, old_outcome};
    }

    generators_.push_back(m);
    outcomes_.push_back(fresh());
    return MeasureResult{outcomes_.back(), MeasureCase::Independent, generators_.size() - 1, std::nullopt, std::nullopt};
}

void ISGState::apply_error(const PauliOperator &e, const OutcomeExpr &flip) {
    for (size_t i = 0; i < generators_.size(); i++) {
        if (generators_[i].anticommutes_with(e)) {
            outcomes_[i] *= flip;
        }
    }
    for (auto &l : logicals_) {
        if (l.op.anticommutes_with(e)) {
            l.outcome *= flip;
        }
    }
}

std::optional<OutcomeExpr> ISGState::value_of(const PauliOperator &op) const {
    EchelonBasis basis(2 * n_, generators_.size());
    for (const auto &g : generators_) {
        basis.insert(g.symplectic());
    }
    auto combo = basis.combination(op.symplectic());
    if (!combo) {
        return std::nullopt;
    }
    OutcomeExpr out;
    for (size_t i = combo->find_first(); i != BitVector::npos; i = combo->find_next(i)) {
        out *= outcomes_[i];
    }
    return out;
}

bool ISGState::contains(const PauliOperator &op) const {
    EchelonBasis basis(2 * n_);
    for (const auto &g : generators_) {
        basis.insert(g.symplectic());
    }
    return basis.contains(op.symplectic());
}

void ISGState::check_invariants() const {
    if (outcomes_.size() != generators_.size()) {
        throw InvariantViolation("outcome list length differs from generator count");
    }
    EchelonBasis basis(2 * n_);
    for (size_t i = 0; i < generators_.size(); i++) {
        for (size_t j = i + 1; j < generators_.size(); j++) {
            if (generators_[i].anticommutes_with(generators_[j])) {
                throw InvariantViolation("ISG generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
        if (!basis.insert(generators_[i].symplectic())) {
            throw InvariantViolation("ISG generator " + std::to_string(i) + " is dependent");
        }
    }
    for (const auto &l : logicals_) {
        for (const auto &g : generators_) {
            if (l.op.anticommutes_with(g)) {
                throw InvariantViolation("tracked logical " + l.op.str() + " anticommutes with " + g.str());
            }
        }
    }
}

std::pair<ISGState, OutcomeExpr> measure(ISGState state, const PauliOperator &m) {
    MeasureResult r = state.measure(m);
    return {std::move(state), std::move(r.outcome)};
}

std::vector<PauliOperator> evolve_generators(
    const std::vector<PauliOperator> &s0, const std::vector<std::vector<PauliOperator>> &rounds, size_t num_qubits) {
    ISGState state(num_qubits);
    for (const auto &g : s0) {
        state.add_generator(g, OutcomeExpr());
    }
    for (const auto &round : rounds) {
        for (const auto &m : round) {
            state.measure(m);
        }
    }
    return state.generators();
}

size_t group_rank(const std::vector<PauliOperator> &ops, size_t num_qubits) {
    EchelonBasis basis(2 * num_qubits);
    for (const auto &p : ops) {
        basis.insert(p.symplectic());
    }
    return basis.rank();
}

bool group_contains(const std::vector<PauliOperator> &b, const std::vector<PauliOperator> &a, size_t num_qubits) {
    EchelonBasis basis(2 * num_qubits);
    for (const auto &p : b) {
        basis.insert(p.symplectic());
    }
    for (const auto &p : a) {
        if (!basis.contains(p.symplectic())) {
            return false;
        }
    }
    return true;
}

bool same_group(const std::vector<PauliOperator> &a, const std::vector<PauliOperator> &b, size_t num_qubits) {
    return group_contains(a, b, num_qubits) && group_contains(b, a, num_qubits);
}

}  // namespace dyncode
