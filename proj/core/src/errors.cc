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

#include "dyncode/errors.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "dyncode/gf2.h"

namespace dyncode {

PauliOperator SpacetimeError::at(size_t round) const {
    auto it = by_round.find(round);
    return it == by_round.end() ? PauliOperator(n) : it->second;
}

PauliOperator SpacetimeError::net_after(size_t k) const {
    PauliOperator out(n);
    for (auto it = by_round.lower_bound(k); it != by_round.end(); ++it) {
        out *= it->second;
    }
    return out;
}

size_t SpacetimeError::last_round() const {
    return by_round.empty() ? 0 : by_round.rbegin()->first;
}

SpacetimeError SpacetimeError::parse(std::string_view spec, size_t num_qubits) {
    SpacetimeError out;
    out.n = num_qubits;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t end = spec.find(',', pos);
        if (end == std::string_view::npos) {
            end = spec.size();
        }
        std::string_view item = spec.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        if (item.empty()) {
            if (end == spec.size() && pos == 0) {
                break;
            }
            throw std::invalid_argument("empty item in error spec '" + std::string(spec) + "'");
        }
        size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("error item '" + std::string(item) + "' is not of the form round:pauli");
        }
        size_t round = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + colon, round);
        if (ec != std::errc() || ptr != item.data() + colon || colon == 0) {
            throw std::invalid_argument("bad round in error item '" + std::string(item) + "'");
        }
        PauliOperator e = parse_pauli(item.substr(colon + 1), num_qubits);
        auto [it, inserted] = out.by_round.emplace(round, e);
        if (!inserted) {
            it->second *= e;
        }
        pos = end + 1;
    }
    return out;
}

std::string SpacetimeError::str() const {
    std::string out;
    for (const auto &[round, e] : by_round) {
        if (!out.empty()) {
            out += ",";
        }
        out += std::to_string(round) + ":" + e.sparse_str();
    }
    return out;
}

std::vector<bool> syndrome_terms(
    const SpacetimeError &error, const std::vector<PauliOperator> &decomposition, const PauliOperator &s) {
    PauliOperator prod(s.num_qubits());
    for (const auto &m : decomposition) {
        prod *= m;
    }
    if (prod != s) {
        throw std::invalid_argument(
            "decomposition multiplies to " + prod.sparse_str() + ", not " + s.sparse_str());
    }
    size_t f = decomposition.size();
    std::vector<bool> out(f + 1, false);
    // suffix = m_{j+1} ... m_f, built from the back.
    PauliOperator suffix(s.num_qubits());
    for (size_t j = f + 1; j-- > 0;) {
        if (j < f) {
            suffix *= decomposition[j];
        }
        out[j] = error.at(j).anticommutes_with(suffix);
    }
    return out;
}

bool syndrome_of_spacetime_error(
    const SpacetimeError &error, const std::vector<PauliOperator> &decomposition, const PauliOperator &s) {
    bool a = false;
    for (bool t : syndrome_terms(error, decomposition, s)) {
        a ^= t;
    }
    return a;
}

std::vector<PauliOperator> decomposition_from_formula(
    const OutcomeExpr &formula,
    const std::vector<MeasurementRecord> &measurements,
    size_t isg_round,
    size_t window,
    size_t num_qubits) {
    std::vector<PauliOperator> out(window, PauliOperator(num_qubits));
    for (const auto &sym : formula.symbols()) {
        if (sym.kind != SymbolKind::Measurement || sym.index >= measurements.size()) {
            throw std::invalid_argument("formula symbol " + sym.str() + " is not a window measurement");
        }
        const auto &rec = measurements[sym.index];
        if (rec.round <= isg_round || rec.round > isg_round + window) {
            throw std::invalid_argument("measurement " + rec.label + " lies outside the window");
        }
        out[rec.round - isg_round - 1] *= rec.op;
    }
    return out;
}

SpacetimeRun simulate_spacetime(
    const Window &window, size_t num_qubits, const SpacetimeError &error, const std::vector<PauliOperator> &logicals) {
    SpacetimeRun run;
    run.window = window;
    ISGState state = ISGState::with_initial_symbols(window.s0, num_qubits);
    for (size_t i = 0; i < logicals.size(); i++) {
        state.add_logical(logicals[i], OutcomeExpr::symbol(SymbolKind::InitialLogical, static_cast<uint32_t>(i)));
    }
    auto inject = [&](size_t round) {
        PauliOperator e = error.at(round);
        if (!e.is_identity()) {
            state.apply_error(e, OutcomeExpr::symbol(SymbolKind::ErrorSyndrome, static_cast<uint32_t>(round)));
        }
    };
    inject(0);
    size_t k = 0;
    for (size_t r = 0; r < window.rounds.size(); r++) {
        for (const auto &m : window.rounds[r]) {
            uint32_t before = state.next_random();
            MeasureResult res = state.measure(m, LogicalPolicy::Error);
            if (state.next_random() != before) {
                run.random_bit_measurement.push_back(k);
            }
            run.outcomes.push_back(res.outcome);
            k++;
        }
        inject(r + 1);
    }
    run.final_state = std::move(state);
    return run;
}

LogicalTrace trace_logical(const Window &window, size_t num_qubits, const PauliOperator &logical) {
    SpacetimeRun run = simulate_spacetime(window, num_qubits, SpacetimeError{num_qubits, {}}, {logical});
    const TrackedLogical &final = run.final_state.logicals().front();

    LogicalTrace out;
    out.initial = logical;
    out.final = final.op;
    out.outcome = final.outcome;
    out.s0_element = BitVector(window.s0.size());
    out.s0 = PauliOperator(num_qubits);
    out.m.assign(window.rounds.size(), PauliOperator(num_qubits));
    out.m_measurements.assign(window.rounds.size(), {});
    PauliOperator check = logical;
    for (const auto &sym : final.outcome.symbols()) {
        switch (sym.kind) {
            case SymbolKind::InitialLogical:
                break;
            case SymbolKind::InitialStabilizer:
                out.s0_element.flip(sym.index);
                out.s0 *= window.s0[sym.index];
                check *= window.s0[sym.index];
                break;
            case SymbolKind::RandomBit: {
                size_t k = run.random_bit_measurement.at(sym.index);
                const auto &rec = window.measurements[k];
                size_t i = rec.round - window.isg_round - 1;
                out.m[i] *= rec.op;
                out.m_measurements[i].push_back(k);
                check *= rec.op;
                break;
            }
            default:
                throw InvariantViolation("unexpected symbol " + sym.str() + " in an error-free logical outcome");
        }
    }
    if (check != out.final) {
        throw InvariantViolation(
            "logical " + logical.sparse_str() + " evolved to " + out.final.sparse_str() + " but its outcome describes " +
            check.sparse_str());
    }
    return out;
}

bool logical_outcome(
    const LogicalTrace &trace, const SpacetimeError &error, const std::function<bool(const OutcomeSymbol &)> &assignment) {
    PauliOperator e0 = error.net_after(0);
    bool out = assignment(OutcomeSymbol{SymbolKind::InitialLogical, 0});
    out ^= trace.initial.anticommutes_with(e0);
    for (size_t i = 0; i < trace.m.size(); i++) {
        for (size_t k : trace.m_measurements[i]) {
            out ^= assignment(OutcomeSymbol{SymbolKind::Measurement, static_cast<uint32_t>(k)});
        }
        out ^= error.net_after(i + 1).anticommutes_with(trace.m[i]);
    }
    for (size_t j : trace.s0_element.ones()) {
        out ^= assignment(OutcomeSymbol{SymbolKind::InitialStabilizer, static_cast<uint32_t>(j)});
    }
    out ^= e0.anticommutes_with(trace.s0);
    return out;
}

std::vector<PauliOperator> enumerate_errors(size_t num_qubits, size_t max_weight, size_t cap) {
    std::vector<PauliOperator> out;
    out.emplace_back(num_qubits);
    std::vector<size_t> support;
    std::function<void(size_t, size_t)> pick = [&](size_t start, size_t left) {
        if (left == 0) {
            size_t w = support.size();
            std::vector<size_t> kinds(w, 0);
            while (true) {
                PauliOperator e(num_qubits);
                for (size_t i = 0; i < w; i++) {
                    e.set(support[i], "XYZ"[kinds[i]]);
                }
                if (out.size() >= cap) {
                    throw std::length_error("more than " + std::to_string(cap) + " errors to enumerate");
                }
                out.push_back(std::move(e));
                size_t i = w;
                while (i > 0 && kinds[i - 1] == 2) {
                    kinds[--i] = 0;
                }
                if (i == 0) {
                    return;
                }
                kinds[i - 1]++;
            }
        }
        for (size_t q = start; q + left <= num_qubits; q++) {
            support.push_back(q);
            pick(q + 1, left - 1);
            support.pop_back();
        }
    };
    for (size_t w = 1; w <= std::min(max_weight, num_qubits); w++) {
        pick(0, w);
    }
    return out;
}

DecodingVerdict verify_round0_decoding(
    const ClassificationReport &report,
    const GaugeGroup &gauge,
    size_t max_weight,
    const DistanceResult &d_u,
    size_t error_cap) {
    const size_t n = report.n;
    DecodingVerdict verdict;
    verdict.max_weight = max_weight;
    if (d_u.status != DistanceResult::Status::Undefined) {
        // ExceedsCap only bounds d_u from below by cap + 1.
        size_t lower = d_u.status == DistanceResult::Status::ExceedsCap ? d_u.value + 1 : d_u.value;
        verdict.within_distance = 2 * max_weight + 1 <= lower;
    } else {
        // No operator of N(U) lies outside G, so equal syndromes always mean equal cosets.
        verdict.within_distance = true;
    }
    std::vector<PauliOperator> errors = enumerate_errors(n, max_weight, error_cap);
    verdict.num_errors = errors.size();

    EchelonBasis g_basis(2 * n);
    for (const auto &g : gauge.generators) {
        g_basis.insert(g.symplectic());
    }
    EchelonBasis s_basis(2 * n);
    for (const auto &s : report.s0) {
        s_basis.insert(s.symplectic());
    }
    std::vector<PauliOperator> u = report.u_ops();

    // Syndrome and canonical coset representative modulo G, computed in chunks.
    std::vector<BitVector> syndromes(errors.size());
    std::vector<BitVector> cosets(errors.size());
    size_t threads = std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), errors.size() / 4096 + 1));
    auto work = [&](size_t t) {
        for (size_t i = t; i < errors.size(); i += threads) {
            BitVector syn(u.size());
            for (size_t j = 0; j < u.size(); j++) {
                if (u[j].anticommutes_with(errors[i])) {
                    syn.set(j);
                }
            }
            syndromes[i] = std::move(syn);
            cosets[i] = g_basis.reduce(errors[i].symplectic());
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    std::unordered_map<BitVector, size_t, BitVectorHash> first_with;
    for (size_t i = 0; i < errors.size(); i++) {
        auto [it, inserted] = first_with.emplace(syndromes[i], i);
        if (inserted) {
            continue;
        }
        size_t rep = it->second;
        if (cosets[rep] != cosets[i]) {
            if (!verdict.violation) {
                verdict.violation = std::make_pair(errors[rep], errors[i]);
            }
            continue;
        }
        if (!s_basis.contains((errors[rep] * errors[i]).symplectic())) {
            verdict.gauge_equivalent++;
        }
    }
    verdict.num_syndromes = first_with.size();
    return verdict;
}

}  // namespace dyncode
