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

// Small-instance oracles that share no algorithm code with the library. Paulis
// are packed into two machine words, so every routine here assumes n <= 16.

#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dyncode/pauli.h"

namespace dyncode::testutil {

struct BP {
    uint32_t x = 0;
    uint32_t z = 0;

    bool operator==(const BP &o) const = default;
    auto operator<=>(const BP &o) const = default;
    BP operator*(const BP &o) const {
        return BP{x ^ o.x, z ^ o.z};
    }
    bool is_identity() const {
        return x == 0 && z == 0;
    }
    uint64_t key() const {
        return x | (uint64_t{z} << 32);
    }
};

BP to_bp(const PauliOperator &p);
PauliOperator from_bp(const BP &p, size_t n);
std::vector<BP> to_bp(const std::vector<PauliOperator> &ops);

bool anticommute(BP a, BP b);
int weight(BP p);

/// Every element of the generated group, by full enumeration.
std::set<uint64_t> group_elements(const std::vector<BP> &gens);
bool in_group(const std::vector<BP> &gens, BP p);
bool same_group(const std::vector<BP> &a, const std::vector<BP> &b);
/// Number of independent generators, from the group size.
size_t group_rank(const std::vector<BP> &gens);

/// Minimum weight over all 4^n Paulis commuting with commute_with and outside
/// <exclude>; nullopt when none exists.
std::optional<int> min_weight_outside(const std::vector<BP> &commute_with, const std::vector<BP> &exclude, size_t n);
/// Elements of <gauge> commuting with all of it.
std::vector<BP> center_elements(const std::vector<BP> &gauge);

std::optional<int> isg_distance(const std::vector<BP> &stabilizers, size_t n);
std::optional<int> subsystem_distance(const std::vector<BP> &gauge, size_t n);

/// Symbols are packed into one bitset: initial stabilizers, then random bits,
/// then one error symbol per error slot.
constexpr size_t kMaxSymbols = 256;
using Affine = std::bitset<kMaxSymbols>;

struct Layout {
    size_t num_s0 = 0;
    size_t max_random = 0;
    size_t num_errors = 0;

    size_t s(size_t i) const {
        return i;
    }
    size_t r(size_t i) const {
        return num_s0 + i;
    }
    size_t e(size_t i) const {
        return num_s0 + max_random + i;
    }
};

/// Textbook stabilizer simulation with outcomes as affine forms over the symbols.
class SymbolicSim {
   public:
    SymbolicSim(const std::vector<BP> &s0, Layout layout);

    /// Outcome form of measuring m; updates the state.
    Affine measure(BP m);
    /// Error slot k: flips every generator anticommuting with e.
    void apply_error(BP e, size_t slot);
    /// Form of a group element; nullopt if p is not in the group.
    std::optional<Affine> value_of(BP p) const;

    /// Tracked logical: follows the rule that an anticommuting measurement
    /// multiplies the logical by the generator it replaces.
    void track_logical(BP l, size_t symbol);
    BP logical() const {
        return logical_;
    }
    Affine logical_value() const {
        return logical_value_;
    }

    const std::vector<BP> &generators() const {
        return gens_;
    }

   private:
    std::vector<BP> gens_;
    std::vector<Affine> vals_;
    Layout layout_;
    size_t next_random_ = 0;
    bool has_logical_ = false;
    BP logical_;
    Affine logical_value_;
};

/// Subset of measurements whose outcome forms sum to exactly the form of
/// the S0 combination element (no random or error part), found by trying all
/// subsets in increasing bitmask order.
std::optional<uint64_t> recovering_subset(const std::vector<Affine> &outcomes, uint64_t element, size_t num_s0);

/// All S0 combinations whose value some product of outcomes reveals.
std::set<uint64_t> recoverable_elements(const std::vector<Affine> &outcomes, size_t num_s0);

}  // namespace dyncode::testutil
