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

#include "brute_force.h"

#include <bit>
#include <stdexcept>

namespace dyncode::testutil {

BP to_bp(const PauliOperator &p) {
    if (p.num_qubits() > 16) {
        throw std::invalid_argument("brute-force oracles handle at most 16 qubits");
    }
    BP out;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out.x |= static_cast<uint32_t>(p.x()[q]) << q;
        out.z |= static_cast<uint32_t>(p.z()[q]) << q;
    }
    return out;
}

PauliOperator from_bp(const BP &p, size_t n) {
    PauliOperator out(n);
    for (size_t q = 0; q < n; q++) {
        bool x = (p.x >> q) & 1;
        bool z = (p.z >> q) & 1;
        out.set(q, x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
    }
    return out;
}

std::vector<BP> to_bp(const std::vector<PauliOperator> &ops) {
    std::vector<BP> out;
    for (const auto &p : ops) {
        out.push_back(to_bp(p));
    }
    return out;
}

bool anticommute(BP a, BP b) {
    return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1;
}

int weight(BP p) {
    return std::popcount(p.x | p.z);
}

std::set<uint64_t> group_elements(const std::vector<BP> &gens) {
    std::set<uint64_t> out{0};
    for (const auto &g : gens) {
        std::vector<uint64_t> add;
        for (uint64_t e : out) {
            add.push_back(e ^ g.key());
        }
        out.insert(add.begin(), add.end());
    }
    return out;
}

bool in_group(const std::vector<BP> &gens, BP p) {
    return group_elements(gens).count(p.key()) > 0;
}

bool same_group(const std::vector<BP> &a, const std::vector<BP> &b) {
    return group_elements(a) == group_elements(b);
}

size_t group_rank(const std::vector<BP> &gens) {
    return static_cast<size_t>(std::countr_zero(group_elements(gens).size()));
}

std::optional<int> min_weight_outside(const std::vector<BP> &commute_with, const std::vector<BP> &exclude, size_t n) {
    std::set<uint64_t> excluded = group_elements(exclude);
    std::optional<int> best;
    uint32_t limit = uint32_t{1} << n;
    for (uint32_t x = 0; x < limit; x++) {
        for (uint32_t z = 0; z < limit; z++) {
            BP p{x, z};
            int w = weight(p);
            if (best && w >= *best) {
                continue;
            }
            bool ok = true;
            for (const auto &c : commute_with) {
                if (anticommute(p, c)) {
                    ok = false;
                    break;
                }
            }
            if (ok && !excluded.count(p.key())) {
                best = w;
            }
        }
    }
    return best;
}

std::vector<BP> center_elements(const std::vector<BP> &gauge) {
    std::vector<BP> out;
    for (uint64_t key : group_elements(gauge)) {
        BP p{static_cast<uint32_t>(key), static_cast<uint32_t>(key >> 32)};
        bool central = true;
        for (const auto &g : gauge) {
            central = central && !anticommute(p, g);
        }
        if (central) {
            out.push_back(p);
        }
    }
    return out;
}

std::optional<int> isg_distance(const std::vector<BP> &stabilizers, size_t n) {
    return min_weight_outside(stabilizers, stabilizers, n);
}

std::optional<int> subsystem_distance(const std::vector<BP> &gauge, size_t n) {
    return min_weight_outside(center_elements(gauge), gauge, n);
}

SymbolicSim::SymbolicSim(const std::vector<BP> &s0, Layout layout) : layout_(layout) {
    if (layout.num_s0 + layout.max_random + layout.num_errors > kMaxSymbols) {
        throw std::invalid_argument("too many symbols for the brute-force simulator");
    }
    for (size_t i = 0; i < s0.size(); i++) {
        gens_.push_back(s0[i]);
        Affine v;
        v.set(layout.s(i));
        vals_.push_back(v);
    }
}

std::optional<Affine> SymbolicSim::value_of(BP p) const {
    size_t k = gens_.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); mask++) {
        BP prod;
        Affine v;
        for (size_t i = 0; i < k; i++) {
            if ((mask >> i) & 1) {
                prod = prod * gens_[i];
                v ^= vals_[i];
            }
        }
        if (prod == p) {
            return v;
        }
    }
    return std::nullopt;
}

Affine SymbolicSim::measure(BP m) {
    size_t first = gens_.size();
    for (size_t i = 0; i < gens_.size(); i++) {
        if (anticommute(gens_[i], m)) {
            first = i;
            break;
        }
    }
    if (first == gens_.size()) {
        if (has_logical_ && anticommute(logical_, m)) {
            throw std::logic_error("measurement of a tracked logical");
        }
        if (auto v = value_of(m)) {
            return *v;
        }
    }
    if (next_random_ >= layout_.max_random) {
        throw std::logic_error("random symbol budget exhausted");
    }
    Affine fresh;
    fresh.set(layout_.r(next_random_++));
    if (first == gens_.size()) {
        gens_.push_back(m);
        vals_.push_back(fresh);
        return fresh;
    }
    for (size_t i = first + 1; i < gens_.size(); i++) {
        if (anticommute(gens_[i], m)) {
            gens_[i] = gens_[i] * gens_[first];
            vals_[i] ^= vals_[first];
        }
    }
    if (has_logical_ && anticommute(logical_, m)) {
        logical_ = logical_ * gens_[first];
        logical_value_ ^= vals_[first];
    }
    gens_[first] = m;
    vals_[first] = fresh;
    return fresh;
}

void SymbolicSim::apply_error(BP e, size_t slot) {
    for (size_t i = 0; i < gens_.size(); i++) {
        if (anticommute(gens_[i], e)) {
            vals_[i].flip(layout_.e(slot));
        }
    }
    if (has_logical_ && anticommute(logical_, e)) {
        logical_value_.flip(layout_.e(slot));
    }
}

void SymbolicSim::track_logical(BP l, size_t symbol) {
    has_logical_ = true;
    logical_ = l;
    logical_value_.reset();
    logical_value_.set(symbol);
}

namespace {

Affine s_form(uint64_t element, size_t num_s0) {
    Affine out;
    for (size_t i = 0; i < num_s0; i++) {
        if ((element >> i) & 1) {
            out.set(i);
        }
    }
    return out;
}

}  // namespace

std::optional<uint64_t> recovering_subset(const std::vector<Affine> &outcomes, uint64_t element, size_t num_s0) {
    Affine target = s_form(element, num_s0);
    Affine sum;
    uint64_t mask = 0;
    for (uint64_t i = 0; i < (uint64_t{1} << outcomes.size()); i++) {
        if (i > 0) {
            size_t bit = static_cast<size_t>(std::countr_zero(i));
            sum ^= outcomes[bit];
            mask ^= uint64_t{1} << bit;
        }
        if (sum == target) {
            return mask;
        }
    }
    return std::nullopt;
}

std::set<uint64_t> recoverable_elements(const std::vector<Affine> &outcomes, size_t num_s0) {
    std::set<uint64_t> out;
    Affine s_mask;
    for (size_t i = 0; i < num_s0; i++) {
        s_mask.set(i);
    }
    // Gray-code walk over all subsets.
    Affine sum;
    uint64_t total = uint64_t{1} << outcomes.size();
    for (uint64_t i = 0; i < total; i++) {
        if (i > 0) {
            sum ^= outcomes[static_cast<size_t>(std::countr_zero(i))];
        }
        if ((sum & ~s_mask).none()) {
            uint64_t element = 0;
            for (size_t j = 0; j < num_s0; j++) {
                element |= static_cast<uint64_t>(sum[j]) << j;
            }
            out.insert(element);
        }
    }
    return out;
}

}  // namespace dyncode::testutil
