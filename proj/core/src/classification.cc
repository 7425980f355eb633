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

#include "dyncode/classification.h"

#include <algorithm>
#include <stdexcept>

#include "dyncode/stabilizer.h"

namespace dyncode {

namespace {

PauliOperator combine_ops(const BitVector &element, const std::vector<PauliOperator> &ops, size_t n) {
    PauliOperator out(n);
    for (size_t i = element.find_first(); i != BitVector::npos; i = element.find_next(i)) {
        out *= ops[i];
    }
    return out;
}

std::vector<size_t> anticommuting(const std::vector<TrackedPauli> &set, const PauliOperator &m) {
    std::vector<size_t> out;
    for (size_t i = 0; i < set.size(); i++) {
        if (set[i].op.anticommutes_with(m)) {
            out.push_back(i);
        }
    }
    return out;
}

bool in_span_of(const std::vector<TrackedPauli> &set, const PauliOperator &m, size_t n) {
    EchelonBasis basis(2 * n);
    for (const auto &t : set) {
        basis.insert(t.op.symplectic());
    }
    return basis.contains(m.symplectic());
}

std::vector<PauliOperator> ops_of(const std::vector<TrackedPauli> &set) {
    std::vector<PauliOperator> out;
    out.reserve(set.size());
    for (const auto &t : set) {
        out.push_back(t.op);
    }
    return out;
}

void scan_logical_measurements(const DynamicalCode &code, const Window &window, ClassificationReport &report) {
    if (report.isg_round != 0) {
        return;
    }
    for (size_t l = 0; l < code.logicals.size(); l++) {
        ISGState state(code.n);
        for (const auto &g : window.s0) {
            state.add_generator(g, OutcomeExpr());
        }
        state.add_logical(code.logicals[l], OutcomeExpr::symbol(SymbolKind::InitialLogical, static_cast<uint32_t>(l)));
        size_t k = 0;
        for (const auto &round : window.rounds) {
            for (const auto &m : round) {
                if (state.measure(m, LogicalPolicy::Track).kind == MeasureCase::LogicalMeasured) {
                    const auto &rec = window.measurements[k];
                    report.diagnostics.push_back(
                        "round " + std::to_string(rec.round) + " measurement " + rec.label + " (" + m.sparse_str() +
                        ") measures a logical anticommuting with tracked logical " + std::to_string(l));
                }
                k++;
            }
        }
    }
}

}  // namespace

std::string stabilizer_class_name(StabilizerClass c) {
    switch (c) {
        case StabilizerClass::Unmasked:
            return "unmasked";
        case StabilizerClass::TemporarilyMasked:
            return "temporarily-masked";
        case StabilizerClass::PermanentlyMasked:
            return "permanently-masked";
    }
    return "unknown";
}

PauliOperator ClassificationReport::element_op(const BitVector &element) const {
    return combine_ops(element, s0, n);
}

StabilizerClass ClassificationReport::classify(const PauliOperator &op) const {
    EchelonBasis basis(2 * n);
    for (const auto &u : unmasked) {
        basis.insert(u.op.symplectic());
    }
    BitVector v = op.symplectic();
    if (basis.contains(v)) {
        return StabilizerClass::Unmasked;
    }
    for (const auto &t : temporarily_masked) {
        basis.insert(t.op.symplectic());
    }
    if (basis.contains(v)) {
        return StabilizerClass::TemporarilyMasked;
    }
    for (const auto &p : permanently_masked) {
        basis.insert(p.op.symplectic());
    }
    if (basis.contains(v)) {
        return StabilizerClass::PermanentlyMasked;
    }
    throw std::invalid_argument(op.str() + " is not an element of <S0>");
}

std::vector<PauliOperator> ClassificationReport::u_ops() const {
    std::vector<PauliOperator> out;
    for (const auto &u : unmasked) {
        out.push_back(u.op);
    }
    return out;
}

std::vector<PauliOperator> ClassificationReport::t_ops() const {
    std::vector<PauliOperator> out;
    for (const auto &t : temporarily_masked) {
        out.push_back(t.op);
    }
    return out;
}

std::vector<PauliOperator> ClassificationReport::p_ops() const {
    std::vector<PauliOperator> out;
    for (const auto &p : permanently_masked) {
        out.push_back(p.op);
    }
    return out;
}

std::vector<PauliOperator> ClassificationReport::k_ops() const {
    std::vector<PauliOperator> out;
    for (const auto &p : permanently_masked) {
        out.push_back(p.destabilizer);
    }
    return out;
}

std::vector<UnmaskedStabilizer> extract_unmasked(
    const std::vector<IntersectionElement> &elements, const std::vector<PauliOperator> &s0, size_t num_qubits) {
    std::vector<UnmaskedStabilizer> out;
    EchelonBasis seen(s0.size());
    for (const auto &e : elements) {
        if (e.assoc.none() || !seen.insert(e.assoc)) {
            continue;
        }
        out.push_back(UnmaskedStabilizer{e.assoc, combine_ops(e.assoc, s0, num_qubits), e.u_outcome * e.u_times_s_outcome});
    }
    return out;
}

std::vector<MaskedStabilizer> extract_temporarily_masked(
    const std::vector<TrackedPauli> &c_final,
    const std::vector<UnmaskedStabilizer> &unmasked,
    const std::vector<PauliOperator> &s0,
    size_t num_qubits) {
    EchelonBasis seen(s0.size());
    for (const auto &u : unmasked) {
        seen.insert(u.element);
    }
    std::vector<MaskedStabilizer> out;
    for (const auto &c : c_final) {
        if (seen.insert(c.assoc)) {
            out.push_back(MaskedStabilizer{c.assoc, combine_ops(c.assoc, s0, num_qubits)});
        }
    }
    return out;
}

std::vector<DestabilizerPair> extract_permanently_masked(
    const Window &window, const std::vector<std::vector<RemovalEvent>> &removals, size_t num_qubits) {
    struct Pair {
        PauliOperator p;
        PauliOperator k;
        BitVector assoc;
    };
    std::vector<PauliOperator> r = evolve_generators(window.s0, window.rounds, num_qubits);
    std::vector<Pair> pairs;

    auto update_pairs = [&](const PauliOperator &e, const PauliOperator &s) {
        for (auto &pr : pairs) {
            if (pr.p.anticommutes_with(e)) {
                pr.p *= s;
            }
            if (pr.k.anticommutes_with(e)) {
                pr.k *= s;
            }
        }
    };

    for (size_t round = removals.size(); round-- > 0;) {
        const auto &events = removals[round];
        for (size_t idx = events.size(); idx-- > 0;) {
            const RemovalEvent &e = events[idx];
            std::vector<size_t> anti;
            for (size_t i = 0; i < r.size(); i++) {
                if (r[i].anticommutes_with(e.op)) {
                    anti.push_back(i);
                }
            }
            if (e.from_c) {
                if (anti.empty()) {
                    throw InvariantViolation(
                        "reverse replay: removed element " + e.op.sparse_str() + " has no anticommuting partner");
                }
                PauliOperator s = r[anti.front()];
                for (size_t k = 1; k < anti.size(); k++) {
                    r[anti[k]] *= s;
                }
                update_pairs(e.op, s);
                r.erase(r.begin() + static_cast<long>(anti.front()));
                pairs.push_back(Pair{e.op, s, e.assoc});
            } else if (!anti.empty()) {
                PauliOperator s = r[anti.front()];
                for (size_t k = 1; k < anti.size(); k++) {
                    r[anti[k]] *= s;
                }
                update_pairs(e.op, s);
                r[anti.front()] = e.op;
            } else {
                for (auto &pr : pairs) {
                    if (pr.p.anticommutes_with(e.op)) {
                        pr.p = e.op;
                    }
                    if (pr.k.anticommutes_with(e.op)) {
                        pr.k = e.op;
                    }
                }
                if (!group_contains(r, {e.op}, num_qubits)) {
                    r.push_back(e.op);
                }
            }
        }
    }

    std::vector<DestabilizerPair> out;
    for (size_t j = pairs.size(); j-- > 0;) {
        out.push_back(DestabilizerPair{pairs[j].assoc, combine_ops(pairs[j].assoc, window.s0, num_qubits), pairs[j].k});
    }
    return out;
}

ClassificationReport classify_window(
    const Window &window, size_t num_qubits, size_t isg_round, std::vector<std::string> s0_labels) {
    const size_t n = num_qubits;
    const size_t k = window.s0.size();
    ClassificationReport report;
    report.n = n;
    report.isg_round = isg_round;
    report.window = window.rounds.size();
    report.s0 = window.s0;
    report.s0_labels = std::move(s0_labels);
    report.measurements = window.measurements;

    std::vector<TrackedPauli> c;
    std::vector<TrackedPauli> v;
    for (size_t i = 0; i < k; i++) {
        c.push_back(TrackedPauli{window.s0[i], BitVector::unit(k, i), OutcomeExpr()});
    }
    report.trace.push_back(RoundTrace{isg_round, ops_of(c), ops_of(v)});

    size_t flat = 0;
    for (size_t t = 0; t < window.rounds.size(); t++) {
        std::vector<RemovalEvent> events;
        for (const auto &m : window.rounds[t]) {
            OutcomeExpr om = OutcomeExpr::symbol(SymbolKind::Measurement, static_cast<uint32_t>(flat));
            std::vector<size_t> ac = anticommuting(c, m);
            std::vector<size_t> av = anticommuting(v, m);
            if (ac.empty() && av.empty()) {
                // Case 1.
                if (!in_span_of(v, m, n)) {
                    v.push_back(TrackedPauli{m, BitVector(), om});
                }
            } else if (av.empty()) {
                // Case 2.
                TrackedPauli cj = c[ac.front()];
                for (size_t q = 1; q < ac.size(); q++) {
                    TrackedPauli &ci = c[ac[q]];
                    ci.op *= cj.op;
                    ci.assoc ^= cj.assoc;
                    ci.carry *= cj.carry;
                }
                c.erase(c.begin() + static_cast<long>(ac.front()));
                events.push_back(RemovalEvent{cj.op, true, cj.assoc, flat});
                v.push_back(TrackedPauli{m, BitVector(), om});
            } else {
                // Cases 3 and 4.
                TrackedPauli vj = v[av.front()];
                for (size_t q = 1; q < av.size(); q++) {
                    v[av[q]].op *= vj.op;
                    v[av[q]].carry *= vj.carry;
                }
                for (size_t q : ac) {
                    c[q].op *= vj.op;
                    c[q].carry *= vj.carry;
                }
                v.erase(v.begin() + static_cast<long>(av.front()));
                events.push_back(RemovalEvent{vj.op, false, BitVector(), flat});
                v.push_back(TrackedPauli{m, BitVector(), om});
            }
            flat++;
        }
        report.removals.push_back(std::move(events));
        report.trace.push_back(RoundTrace{isg_round + t + 1, ops_of(c), ops_of(v)});
    }

    // Step 3: <C> ∩ <V>, plus identities among C elements.
    std::vector<PauliOperator> c_ops = ops_of(c);
    std::vector<PauliOperator> v_ops = ops_of(v);
    SpanIntersection inter =
        span_intersection(BitMatrix::from_paulis(c_ops, n), BitMatrix::from_paulis(v_ops, n));
    std::vector<IntersectionElement> elements;
    auto c_side = [&](const Combination &combo, IntersectionElement &e) {
        e.assoc = BitVector(k);
        for (size_t j : combo.indices()) {
            e.assoc ^= c[j].assoc;
            e.u_times_s_outcome *= c[j].carry;
        }
    };
    for (size_t i = 0; i < inter.basis.rows(); i++) {
        IntersectionElement e;
        e.u = PauliOperator::from_symplectic(inter.basis.row(i));
        c_side(inter.c_combinations[i], e);
        for (size_t j : inter.v_combinations[i].indices()) {
            e.u_outcome *= v[j].carry;
        }
        elements.push_back(std::move(e));
    }
    for (const auto &red : inter.redundancies) {
        IntersectionElement e;
        e.u = PauliOperator(n);
        c_side(red, e);
        elements.push_back(std::move(e));
    }

    report.unmasked = extract_unmasked(elements, window.s0, n);
    report.temporarily_masked = extract_temporarily_masked(c, report.unmasked, window.s0, n);
    report.permanently_masked = extract_permanently_masked(window, report.removals, n);
    report.c_final = std::move(c);
    report.v_final = std::move(v);

    size_t total = report.unmasked.size() + report.temporarily_masked.size() + report.permanently_masked.size();
    if (total != k) {
        throw InvariantViolation(
            "|U|+|T|+|P| = " + std::to_string(total) + " differs from |S0| = " + std::to_string(k));
    }
    std::vector<PauliOperator> all = report.u_ops();
    for (const auto &t : report.temporarily_masked) {
        all.push_back(t.op);
    }
    for (const auto &p : report.permanently_masked) {
        all.push_back(p.op);
    }
    if (group_rank(all, n) != k) {
        throw InvariantViolation("U, T and P do not form a basis of <S0>");
    }
    for (size_t j = 0; j < report.permanently_masked.size(); j++) {
        const auto &kj = report.permanently_masked[j].destabilizer;
        for (size_t q = 0; q < all.size(); q++) {
            bool expect = (q == report.unmasked.size() + report.temporarily_masked.size() + j);
            if (kj.anticommutes_with(all[q]) != expect) {
                throw InvariantViolation(
                    "destabilizer " + kj.sparse_str() + " has the wrong commutation with " + all[q].sparse_str());
            }
        }
    }
    for (const auto &g : window.s0) {
        report.generator_classes.push_back(report.classify(g));
    }
    return report;
}

ClassificationReport run_classification(const DynamicalCode &code, size_t window, size_t isg_round) {
    require_valid(code);
    Window w = make_window(code, window, isg_round);
    std::vector<std::string> labels;
    for (size_t i = 0; i < w.s0.size(); i++) {
        labels.push_back(isg_round == 0 ? code.s0_label(i) : "g" + std::to_string(i));
    }
    ClassificationReport report = classify_window(w, code.n, isg_round, std::move(labels));
    scan_logical_measurements(code, w, report);
    return report;
}

}  // namespace dyncode
