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

#include "dyncode/distance.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include "dyncode/gf2.h"

namespace dyncode {

namespace {

std::vector<PauliOperator> s0_part(const ClassificationReport &report) {
    std::vector<PauliOperator> out = report.u_ops();
    for (const auto &t : report.temporarily_masked) {
        out.push_back(t.op);
    }
    for (const auto &p : report.permanently_masked) {
        out.push_back(p.op);
    }
    return out;
}

/// Rows whose product with v is the symplectic form of the operator and v.
BitMatrix form_rows(const std::vector<PauliOperator> &ops, size_t n) {
    BitMatrix out(0, 2 * n);
    for (const auto &p : ops) {
        out.append_row(BitVector::concat(p.z(), p.x()));
    }
    return out;
}

std::vector<PauliOperator> to_ops(const BitMatrix &m) {
    std::vector<PauliOperator> out;
    for (const auto &r : m.row_vectors()) {
        out.push_back(PauliOperator::from_symplectic(r));
    }
    return out;
}

/// Depth-first enumeration of supports in increasing qubit order with the three
/// nontrivial Paulis on each, tracking the syndrome against commute_with.
class SupportSearch {
   public:
    SupportSearch(
        const std::vector<PauliOperator> &commute_with, const EchelonBasis &exclude, size_t n, size_t weight)
        : n_(n), weight_(weight), words_((commute_with.size() + 63) / 64), exclude_(exclude) {
        table_.assign(n * 3 * std::max<size_t>(words_, 1), 0);
        for (size_t q = 0; q < n; q++) {
            for (size_t p = 0; p < 3; p++) {
                PauliOperator single = PauliOperator::single(n, q, "XYZ"[p]);
                uint64_t *row = entry(q, p);
                for (size_t g = 0; g < commute_with.size(); g++) {
                    if (commute_with[g].anticommutes_with(single)) {
                        row[g >> 6] |= uint64_t{1} << (g & 63);
                    }
                }
            }
        }
        stack_.assign((weight + 1) * std::max<size_t>(words_, 1), 0);
        qubits_.assign(weight, 0);
        paulis_.assign(weight, 0);
    }

    /// Searches supports whose smallest qubit is first. Stops early when abort() turns true.
    template <typename Abort>
    std::optional<PauliOperator> run(size_t first, const Abort &abort) {
        found_.reset();
        abort_ = [&]() {
            return abort();
        };
        descend(0, first, first + 1);
        return found_;
    }

   private:
    uint64_t *entry(size_t q, size_t p) {
        return &table_[(q * 3 + p) * std::max<size_t>(words_, 1)];
    }
    uint64_t *level(size_t d) {
        return &stack_[d * std::max<size_t>(words_, 1)];
    }

    bool descend(size_t depth, size_t lo, size_t hi) {
        for (size_t q = lo; q < hi && q + (weight_ - depth) <= n_; q++) {
            if (abort_()) {
                return true;
            }
            for (size_t p = 0; p < 3; p++) {
                uint64_t *cur = level(depth);
                uint64_t *next = level(depth + 1);
                const uint64_t *syn = entry(q, p);
                bool zero = true;
                for (size_t w = 0; w < words_; w++) {
                    next[w] = cur[w] ^ syn[w];
                    zero &= next[w] == 0;
                }
                qubits_[depth] = q;
                paulis_[depth] = p;
                if (depth + 1 == weight_) {
                    if (zero && check()) {
                        return true;
                    }
                } else if (descend(depth + 1, q + 1, n_)) {
                    return true;
                }
            }
        }
        return false;
    }

    bool check() {
        PauliOperator cand(n_);
        for (size_t d = 0; d < weight_; d++) {
            cand.set(qubits_[d], "XYZ"[paulis_[d]]);
        }
        if (exclude_.contains(cand.symplectic())) {
            return false;
        }
        found_ = std::move(cand);
        return true;
    }

    size_t n_;
    size_t weight_;
    size_t words_;
    const EchelonBasis &exclude_;
    std::vector<uint64_t> table_;
    std::vector<uint64_t> stack_;
    std::vector<size_t> qubits_;
    std::vector<size_t> paulis_;
    std::optional<PauliOperator> found_;
    std::function<bool()> abort_;
};

/// Undefined < Found (by value) < ExceedsCap.
std::pair<int, size_t> severity(const DistanceResult &r) {
    switch (r.status) {
        case DistanceResult::Status::Undefined:
            return {0, 0};
        case DistanceResult::Status::Found:
            return {1, r.value};
        case DistanceResult::Status::ExceedsCap:
            return {2, r.value};
    }
    return {0, 0};
}

/// d_u maximized over the policy's destabilizer choices; the first maximizer wins.
DistanceSummary distance_summary_u(
    const ClassificationReport &report, TDestabPolicy policy, size_t cap, size_t choice_cap) {
    DistanceSummary out;
    bool first = true;
    for (const auto &g : build_gauge_group(report, policy, choice_cap)) {
        DistanceResult r = unmasked_distance(report, g, cap);
        if (first || severity(r) > severity(out.d_u)) {
            out.d_u = r;
            out.t_destabilizers = g.t_destabilizers;
        }
        first = false;
    }
    return out;
}

}  // namespace

std::string policy_name(TDestabPolicy policy) {
    return policy == TDestabPolicy::Canonical ? "canonical" : "exhaustive";
}

TDestabPolicy parse_policy(const std::string &name) {
    if (name == "canonical") {
        return TDestabPolicy::Canonical;
    }
    if (name == "exhaustive") {
        return TDestabPolicy::Exhaustive;
    }
    throw std::invalid_argument("unknown destabilizer policy '" + name + "' (expected canonical or exhaustive)");
}

std::string DistanceResult::str() const {
    switch (status) {
        case Status::Found:
            return std::to_string(value);
        case Status::ExceedsCap:
            return "> " + std::to_string(value);
        case Status::Undefined:
            return "undefined";
    }
    return "undefined";
}

GaugeGroup gauge_group_with(const ClassificationReport &report, const std::vector<PauliOperator> &t_destabilizers) {
    if (t_destabilizers.size() != report.temporarily_masked.size()) {
        throw std::invalid_argument(
            "expected " + std::to_string(report.temporarily_masked.size()) + " destabilizers for T, got " +
            std::to_string(t_destabilizers.size()));
    }
    std::vector<PauliOperator> stabs = s0_part(report);
    std::vector<PauliOperator> k = report.k_ops();
    size_t t_offset = report.unmasked.size();
    for (size_t i = 0; i < t_destabilizers.size(); i++) {
        const auto &d = t_destabilizers[i];
        for (size_t q = 0; q < stabs.size(); q++) {
            if (d.anticommutes_with(stabs[q]) != (q == t_offset + i)) {
                throw std::invalid_argument(
                    "destabilizer " + d.sparse_str() + " for " + report.temporarily_masked[i].op.sparse_str() +
                    " has the wrong commutation with " + stabs[q].sparse_str());
            }
        }
        for (const auto &kk : k) {
            if (d.anticommutes_with(kk)) {
                throw std::invalid_argument(
                    "destabilizer " + d.sparse_str() + " anticommutes with window destabilizer " + kk.sparse_str());
            }
        }
    }
    GaugeGroup g;
    g.n = report.n;
    g.generators = stabs;
    g.generators.insert(g.generators.end(), k.begin(), k.end());
    g.generators.insert(g.generators.end(), t_destabilizers.begin(), t_destabilizers.end());
    g.t_destabilizers = t_destabilizers;
    return g;
}

std::vector<PauliOperator> canonical_t_destabilizers(const ClassificationReport &report) {
    const size_t n = report.n;
    std::vector<PauliOperator> stabs = s0_part(report);
    std::vector<PauliOperator> fixed = report.k_ops();
    std::vector<PauliOperator> out;
    size_t t_offset = report.unmasked.size();
    for (size_t i = 0; i < report.temporarily_masked.size(); i++) {
        std::vector<PauliOperator> constraints = stabs;
        constraints.insert(constraints.end(), fixed.begin(), fixed.end());
        constraints.insert(constraints.end(), out.begin(), out.end());
        BitVector rhs(constraints.size());
        rhs.set(t_offset + i);
        auto sol = solve_least(form_rows(constraints, n), rhs);
        if (!sol) {
            throw InvariantViolation(
                "no destabilizer exists for " + report.temporarily_masked[i].op.sparse_str());
        }
        out.push_back(PauliOperator::from_symplectic(*sol));
    }
    return out;
}

std::vector<GaugeGroup> build_gauge_group(const ClassificationReport &report, TDestabPolicy policy, size_t choice_cap) {
    std::vector<PauliOperator> base = canonical_t_destabilizers(report);
    if (policy == TDestabPolicy::Canonical || base.empty()) {
        return {gauge_group_with(report, base)};
    }

    // Free directions: Z(S0 ∪ K) modulo <U ∪ T>.
    const size_t n = report.n;
    std::vector<PauliOperator> fixed = s0_part(report);
    for (const auto &k : report.k_ops()) {
        fixed.push_back(k);
    }
    EchelonBasis quotient(2 * n);
    for (const auto &u : report.unmasked) {
        quotient.insert(u.op.symplectic());
    }
    for (const auto &t : report.temporarily_masked) {
        quotient.insert(t.op.symplectic());
    }
    std::vector<PauliOperator> free_dirs;
    BitMatrix kernel = kernel_under_form(BitMatrix::from_paulis(fixed, n));
    for (const auto &z : kernel.row_vectors()) {
        if (quotient.insert(z)) {
            free_dirs.push_back(PauliOperator::from_symplectic(z));
        }
    }
    size_t bits = free_dirs.size() * base.size();
    if (bits >= 63 || (uint64_t{1} << bits) > choice_cap) {
        throw std::length_error(
            "exhaustive destabilizer search needs 2^" + std::to_string(bits) + " choices; cap is " +
            std::to_string(choice_cap));
    }
    std::vector<GaugeGroup> out;
    uint64_t count = uint64_t{1} << bits;
    for (uint64_t mask = 0; mask < count; mask++) {
        std::vector<PauliOperator> choice = base;
        for (size_t t = 0; t < base.size(); t++) {
            for (size_t f = 0; f < free_dirs.size(); f++) {
                if ((mask >> (t * free_dirs.size() + f)) & 1) {
                    choice[t] *= free_dirs[f];
                }
            }
        }
        out.push_back(gauge_group_with(report, choice));
    }
    return out;
}

GaugeGroup window_gauge_group(const ClassificationReport &report) {
    GaugeGroup g;
    g.n = report.n;
    g.generators = s0_part(report);
    for (const auto &k : report.k_ops()) {
        g.generators.push_back(k);
    }
    return g;
}

std::vector<PauliOperator> gauge_center(const GaugeGroup &gauge) {
    BitMatrix g = BitMatrix::from_paulis(gauge.generators, gauge.n);
    BitMatrix z = kernel_under_form(g);
    return to_ops(span_intersection(g, z).basis);
}

std::vector<PauliOperator> bare_logicals(const GaugeGroup &gauge) {
    EchelonBasis basis(2 * gauge.n);
    for (const auto &p : gauge.generators) {
        basis.insert(p.symplectic());
    }
    std::vector<PauliOperator> out;
    BitMatrix kernel = kernel_under_form(BitMatrix::from_paulis(gauge.generators, gauge.n));
    for (const auto &z : kernel.row_vectors()) {
        if (basis.insert(z)) {
            out.push_back(PauliOperator::from_symplectic(z));
        }
    }
    return out;
}

bool is_bare_logical(const GaugeGroup &gauge, const PauliOperator &op) {
    for (const auto &g : gauge.generators) {
        if (g.anticommutes_with(op)) {
            return false;
        }
    }
    return !group_contains(gauge.generators, {op}, gauge.n);
}

DistanceResult min_weight_outside(
    const std::vector<PauliOperator> &commute_with,
    const std::vector<PauliOperator> &exclude,
    size_t num_qubits,
    const SearchOptions &options) {
    const size_t n = num_qubits;
    EchelonBasis excluded(2 * n);
    for (const auto &p : exclude) {
        excluded.insert(p.symplectic());
    }
    bool nonempty = false;
    BitMatrix kernel = kernel_under_form(BitMatrix::from_paulis(commute_with, n));
    for (const auto &z : kernel.row_vectors()) {
        if (!excluded.contains(z)) {
            nonempty = true;
            break;
        }
    }
    DistanceResult res;
    if (!nonempty) {
        res.status = DistanceResult::Status::Undefined;
        return res;
    }

    size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    for (size_t w = 1; w <= std::min(options.cap, n); w++) {
        size_t chunks = n - w + 1;
        std::vector<std::optional<PauliOperator>> hits(chunks);
        std::atomic<size_t> next{0};
        std::atomic<size_t> best{std::numeric_limits<size_t>::max()};
        auto worker = [&]() {
            SupportSearch search(commute_with, excluded, n, w);
            while (true) {
                size_t first = next.fetch_add(1);
                if (first >= chunks || first > best.load()) {
                    return;
                }
                auto hit = search.run(first, [&]() {
                    return best.load() < first;
                });
                if (hit) {
                    hits[first] = std::move(hit);
                    size_t cur = best.load();
                    while (first < cur && !best.compare_exchange_weak(cur, first)) {
                    }
                }
            }
        };
        size_t used = std::min(threads, chunks);
        if (used <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (size_t t = 0; t < used; t++) {
                pool.emplace_back(worker);
            }
            for (auto &t : pool) {
                t.join();
            }
        }
        for (auto &h : hits) {
            if (h) {
                res.status = DistanceResult::Status::Found;
                res.value = w;
                res.witness = std::move(h);
                return res;
            }
        }
    }
    res.status = DistanceResult::Status::ExceedsCap;
    res.value = options.cap;
    return res;
}

DistanceResult unmasked_distance(const ClassificationReport &report, const GaugeGroup &gauge, size_t cap) {
    return min_weight_outside(report.u_ops(), gauge.generators, report.n, SearchOptions{cap, 0});
}

DistanceResult unmasked_distance(
    const ClassificationReport &report, TDestabPolicy policy, size_t cap, size_t choice_cap) {
    return distance_summary_u(report, policy, cap, choice_cap).d_u;
}

DistanceResult isg_distance(const std::vector<PauliOperator> &stabilizers, size_t num_qubits, size_t cap) {
    return min_weight_outside(stabilizers, stabilizers, num_qubits, SearchOptions{cap, 0});
}

DistanceResult isg_distance(const ISGState &isg, size_t cap) {
    return isg_distance(isg.generators(), isg.num_qubits(), cap);
}

DistanceResult subsystem_distance(const GaugeGroup &gauge, size_t cap) {
    return min_weight_outside(gauge_center(gauge), gauge.generators, gauge.n, SearchOptions{cap, 0});
}

DistanceSummary distance_summary(
    const ClassificationReport &report, TDestabPolicy policy, size_t cap, size_t choice_cap) {
    DistanceSummary out = distance_summary_u(report, policy, cap, choice_cap);
    out.d_subsystem = subsystem_distance(window_gauge_group(report), cap);
    out.d_isg = isg_distance(report.s0, report.n, cap);
    return out;
}

}  // namespace dyncode
