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

#include "dyncode/floquet.h"

#include <stdexcept>

#include "dyncode/classification.h"
#include "dyncode/gf2.h"
#include "dyncode/stabilizer.h"

namespace dyncode {

namespace {

void measure_into(ISGState &state, const PauliOperator &m) {
    state.measure(m, LogicalPolicy::Track);
}

PauliOperator lift(const PauliOperator &p, size_t n) {
    PauliOperator out(n);
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out.set(q, p.at(q));
    }
    return out;
}

PauliOperator pauli_of(const char *text, size_t n) {
    return parse_pauli(text, n);
}

/// Generators reached after cycles repetitions of seq, omitting the final
/// measurement of the last repetition.
std::vector<PauliOperator> state_before_last(const std::vector<PauliOperator> &seq, size_t n, size_t cycles) {
    ISGState state(n);
    for (size_t c = 0; c < cycles; c++) {
        for (size_t i = 0; i < seq.size(); i++) {
            if (c + 1 == cycles && i + 1 == seq.size()) {
                break;
            }
            measure_into(state, seq[i]);
        }
    }
    return state.generators();
}

/// An operator anticommuting with basis[target] and commuting with the rest.
std::optional<PauliOperator> dual_of(const std::vector<PauliOperator> &basis, size_t target, size_t n) {
    BitMatrix rows(0, 2 * n);
    for (const auto &b : basis) {
        rows.append_row(BitVector::concat(b.z(), b.x()));
    }
    BitVector rhs(basis.size());
    rhs.set(target);
    auto sol = solve_least(rows, rhs);
    if (!sol) {
        return std::nullopt;
    }
    return PauliOperator::from_symplectic(*sol);
}

std::vector<size_t> end_ranks(const std::vector<PauliOperator> &seq, size_t n, size_t cycles) {
    ISGState state(n);
    std::vector<size_t> out;
    for (size_t c = 0; c < cycles; c++) {
        for (const auto &m : seq) {
            measure_into(state, m);
        }
        out.push_back(state.size());
    }
    return out;
}

bool initializes_in(const std::vector<PauliOperator> &seq, size_t n) {
    std::vector<size_t> want;
    for (size_t r = 2; r <= n; r++) {
        want.push_back(r);
    }
    want.push_back(n);
    want.push_back(n);
    want.push_back(n);
    return end_ranks(seq, n, n + 2) == want;
}

/// Extends a sequence on n-1 qubits that initializes in n-2 cycles to one on n
/// qubits that initializes in n-1 cycles.
std::vector<PauliOperator> extend(const std::vector<PauliOperator> &prev, size_t n) {
    std::vector<PauliOperator> seq;
    for (const auto &m : prev) {
        seq.push_back(lift(m, n));
    }
    std::vector<PauliOperator> g = state_before_last(seq, n, n + 2);
    PauliOperator p = pauli_of("X1 Z2 Z3", n);
    PauliOperator b = PauliOperator::single(n, n - 1, 'Z');
    PauliOperator db = PauliOperator::single(n, n - 1, 'X');

    // The evolved image of s_{n-1} is X1 Z_{n-1} for every size we have checked;
    // the remaining elements of <G> are a fallback.
    std::vector<PauliOperator> candidates;
    PauliOperator preferred = PauliOperator::single(n, 0, 'X') * PauliOperator::single(n, n - 2, 'Z');
    if (group_contains(g, {preferred}, n)) {
        candidates.push_back(preferred);
    }
    if (g.size() > 20) {
        throw std::length_error("worst-case fallback search over 2^" + std::to_string(g.size()) + " elements");
    }
    for (uint64_t mask = 1; mask < (uint64_t{1} << g.size()); mask++) {
        PauliOperator a(n);
        for (size_t i = 0; i < g.size(); i++) {
            if ((mask >> i) & 1) {
                a *= g[i];
            }
        }
        if (a != preferred) {
            candidates.push_back(a);
        }
    }

    for (const auto &a : candidates) {
        if (group_rank({p, a}, n) < 2) {
            continue;
        }
        std::vector<PauliOperator> basis{p, a};
        for (const auto &x : g) {
            if (!group_contains(basis, {x}, n)) {
                basis.push_back(x);
            }
        }
        basis.push_back(b);
        auto dp = dual_of(basis, 0, n);
        auto da = dual_of(basis, 1, n);
        if (!dp || !da) {
            continue;
        }
        if (dp->anticommutes_with(*da)) {
            *da *= p;
        }
        std::vector<PauliOperator> block{*dp * *da * db, p * *da * db, *dp * a * b, p};
        std::vector<PauliOperator> next(seq.begin(), seq.end() - 1);
        next.insert(next.end(), block.begin(), block.end());
        next.push_back(seq.back());
        if (initializes_in(next, n)) {
            return next;
        }
    }
    throw InvariantViolation("no insertion block initializes " + std::to_string(n) + " qubits in n-1 cycles");
}

}  // namespace

CycleTrace iterate_cycles(
    const std::vector<PauliOperator> &sequence,
    size_t num_qubits,
    size_t max_cycles,
    const std::vector<PauliOperator> &prefix) {
    CycleTrace trace;
    trace.n = num_qubits;
    trace.prefix = prefix;
    trace.sequence = sequence;
    ISGState state(num_qubits);
    for (const auto &m : prefix) {
        measure_into(state, m);
    }
    trace.prefix_group = state.generators();
    trace.prefix_rank = state.size();
    if (sequence.empty()) {
        return trace;
    }
    for (size_t c = 0; c < max_cycles; c++) {
        std::vector<std::vector<PauliOperator>> groups;
        std::vector<size_t> ranks;
        for (const auto &m : sequence) {
            measure_into(state, m);
            groups.push_back(state.generators());
            ranks.push_back(state.size());
        }
        trace.groups.push_back(std::move(groups));
        trace.ranks.push_back(std::move(ranks));
        if (c == 0) {
            continue;
        }
        const auto &prev = trace.groups[c - 1];
        const auto &cur = trace.groups[c];
        bool same = true;
        for (size_t i = 0; i < sequence.size() && same; i++) {
            same = same_group(prev[i], cur[i], num_qubits);
        }
        if (same) {
            trace.fixpoint = c;
            break;
        }
    }
    return trace;
}

CycleTrace iterate_cycles(const DynamicalCode &code, size_t max_cycles) {
    if (!code.periodic) {
        throw std::invalid_argument("cycle analysis needs a periodic code");
    }
    std::vector<PauliOperator> prefix;
    std::vector<PauliOperator> sequence;
    for (size_t r = 0; r < code.rounds.size(); r++) {
        auto &dst = r < code.prefix_rounds ? prefix : sequence;
        dst.insert(dst.end(), code.rounds[r].begin(), code.rounds[r].end());
    }
    return iterate_cycles(sequence, code.n, max_cycles, prefix);
}

std::vector<MonotonicityViolation> check_subset_monotonicity(const CycleTrace &trace) {
    std::vector<MonotonicityViolation> out;
    for (size_t j = 0; j + 1 < trace.groups.size(); j++) {
        for (size_t i = 0; i < trace.groups[j].size(); i++) {
            if (!group_contains(trace.groups[j + 1][i], trace.groups[j][i], trace.n)) {
                out.push_back({j + 1, i});
            }
        }
    }
    return out;
}

GrowthReport growth_accounting(const CycleTrace &trace) {
    GrowthReport out;
    auto diff = [&](size_t after, size_t before, const std::string &where) -> size_t {
        if (after < before) {
            out.violations.push_back("rank drops from " + std::to_string(before) + " to " + std::to_string(after) + " " + where);
            return 0;
        }
        return after - before;
    };
    for (size_t j = 1; j <= trace.num_cycles(); j++) {
        out.deltas.push_back(diff(trace.end_rank(j), trace.end_rank(j - 1), "over cycle " + std::to_string(j)));
        std::vector<size_t> row;
        for (size_t i = 0; i < trace.sequence.size(); i++) {
            size_t before = j == 1 ? trace.prefix_rank : trace.ranks[j - 2][i];
            row.push_back(diff(
                trace.ranks[j - 1][i],
                before,
                "at index " + std::to_string(i) + " of cycle " + std::to_string(j)));
        }
        out.index_deltas.push_back(std::move(row));
    }
    for (size_t j = 1; j < out.deltas.size(); j++) {
        if (out.deltas[j] > out.deltas[j - 1]) {
            out.violations.push_back(
                "cycle " + std::to_string(j + 1) + " adds " + std::to_string(out.deltas[j]) + " generators, cycle " +
                std::to_string(j) + " added " + std::to_string(out.deltas[j - 1]));
        }
    }
    for (size_t j = 2; j < out.index_deltas.size(); j++) {
        for (size_t i = 0; i < out.index_deltas[j].size(); i++) {
            if (out.index_deltas[j][i] > 0 && out.index_deltas[j - 1][i] == 0) {
                out.violations.push_back(
                    "index " + std::to_string(i) + " grows in cycle " + std::to_string(j + 1) + " but not in cycle " +
                    std::to_string(j));
            }
        }
    }
    return out;
}

std::optional<size_t> initialization_depth(const CycleTrace &trace) {
    for (size_t k = 0; k < trace.num_cycles(); k++) {
        const auto &before = k == 0 ? trace.prefix_group : trace.groups[k - 1].back();
        if (same_group(before, trace.groups[k].back(), trace.n)) {
            return k;
        }
    }
    return std::nullopt;
}

DynamicalCode build_worst_case_sequence(size_t n) {
    if (n < 3) {
        throw std::invalid_argument("worst-case sequence needs n >= 3, got " + std::to_string(n));
    }
    std::vector<PauliOperator> seq;
    for (const char *m : {"Z1", "X1 X2 X3", "Z1 X2 X3", "X1 Z2 Z3", "Z2"}) {
        seq.push_back(pauli_of(m, 3));
    }
    if (!initializes_in(seq, 3)) {
        throw InvariantViolation("base worst-case sequence does not initialize in 2 cycles");
    }
    for (size_t k = 4; k <= n; k++) {
        seq = extend(seq, k);
    }
    DynamicalCode code;
    code.n = n;
    for (const auto &m : seq) {
        code.rounds.push_back({m});
    }
    code.periodic = true;
    return code;
}

DynamicalCode build_1d_chain(size_t n) {
    if (n < 5) {
        throw std::invalid_argument("1D chain needs n >= 5, got " + std::to_string(n));
    }
    DynamicalCode code;
    code.n = n;
    code.rounds.push_back({PauliOperator::single(n, 0, 'X')});
    // (Pauli, offset) per round: qubits 4i+offset and 4i+offset+1, 1-based.
    const std::pair<char, long> pattern[4] = {{'X', 2}, {'Z', 1}, {'X', 0}, {'Z', 3}};
    for (const auto &[kind, offset] : pattern) {
        std::vector<PauliOperator> round;
        for (long a = offset; a + 1 <= static_cast<long>(n); a += 4) {
            if (a < 1) {
                continue;
            }
            PauliOperator m(n);
            m.set(a - 1, kind);
            m.set(a, kind);
            round.push_back(m);
        }
        code.rounds.push_back(round);
    }
    code.periodic = true;
    code.prefix_rounds = 1;
    return code;
}

std::optional<UnmaskCount> unmask_cycle_count(const DynamicalCode &code, size_t isg_round, size_t max_cycles) {
    if (!code.periodic || code.cycle_length() == 0) {
        throw std::invalid_argument("unmask cycle count needs a periodic code");
    }
    size_t len = code.cycle_length();
    for (size_t c = 1; c <= max_cycles; c++) {
        ClassificationReport report = run_classification(code, c * len, isg_round);
        if (report.temporarily_masked.empty()) {
            return UnmaskCount{c, report.measurements.size()};
        }
    }
    return std::nullopt;
}

}  // namespace dyncode
