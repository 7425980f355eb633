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

#include "dyncode/library.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dyncode/classification.h"
#include "dyncode/distance.h"
#include "dyncode/floquet.h"
#include "dyncode/stabilizer.h"

using namespace dyncode;

namespace {

std::optional<long> compute(const CodeSpec &spec, const std::string &key) {
    const DynamicalCode &c = spec.code;
    if (key == "n") {
        return static_cast<long>(c.n);
    }
    if (key == "d_isg") {
        return static_cast<long>(isg_distance(c.s0, c.n, 6).value);
    }
    if (key == "initialization_depth") {
        auto d = initialization_depth(iterate_cycles(c, c.n + 3));
        return d ? std::optional<long>(static_cast<long>(*d)) : std::nullopt;
    }
    if (key == "x_chain_round") {
        PauliOperator chain(c.n);
        for (size_t q = 0; q + 1 < c.n; q++) {
            chain.set(q, 'X');
        }
        std::vector<std::vector<PauliOperator>> rounds;
        for (size_t t = 1; t <= 4 * c.n; t++) {
            rounds.push_back(c.round(t));
            auto gens = evolve_generators(c.s0, rounds, c.n);
            if (std::find(gens.begin(), gens.end(), chain) != gens.end()) {
                return static_cast<long>(t);
            }
        }
        return std::nullopt;
    }
    if (key == "unmask_window") {
        for (size_t w = 1; w <= 12; w++) {
            if (run_classification(c, w, spec.isg_round).temporarily_masked.empty()) {
                return static_cast<long>(w);
            }
        }
        return std::nullopt;
    }
    ClassificationReport r = run_classification(c, spec.window, spec.isg_round);
    if (key == "num_u") {
        return static_cast<long>(r.unmasked.size());
    }
    if (key == "num_t") {
        return static_cast<long>(r.temporarily_masked.size());
    }
    if (key == "num_p") {
        return static_cast<long>(r.permanently_masked.size());
    }
    if (key == "d_u") {
        return static_cast<long>(unmasked_distance(r, TDestabPolicy::Canonical, 6).value);
    }
    if (key == "d_subsystem") {
        return static_cast<long>(subsystem_distance(window_gauge_group(r), 6).value);
    }
    ADD_FAILURE() << "no computation for reference key " << key;
    return std::nullopt;
}

}  // namespace

TEST(Library, BuiltinsValidate) {
    for (const auto &spec : builtin_codes()) {
        EXPECT_TRUE(validate_code(spec.code).empty()) << spec.name;
        EXPECT_NO_THROW(run_classification(spec.code, spec.window, spec.isg_round)) << spec.name;
    }
}

TEST(Library, ReferencesReproduce) {
    for (const auto &spec : builtin_codes()) {
        for (const auto &ref : spec.references) {
            auto got = compute(spec, ref.key);
            ASSERT_TRUE(got.has_value()) << spec.name << " " << ref.key;
            EXPECT_EQ(*got, ref.value) << spec.name << " " << ref.key;
        }
    }
}

TEST(Library, LookupByName) {
    EXPECT_EQ(builtin_code("shor").code, shor_code());
    EXPECT_THROW(builtin_code("toric"), std::invalid_argument);
    std::set<std::string> names;
    for (const auto &spec : builtin_codes()) {
        EXPECT_TRUE(names.insert(spec.name).second) << "duplicate " << spec.name;
    }
}

TEST(Library, ShorStructure) {
    DynamicalCode c = shor_code();
    EXPECT_EQ(c.n, 9u);
    EXPECT_EQ(c.s0.size(), 8u);
    EXPECT_EQ(group_rank(c.s0, 9), 8u);
    DynamicalCode m = shor_code_masked();
    ASSERT_EQ(m.rounds.size(), 1u);
    EXPECT_EQ(m.rounds[0].size(), 7u);
}

TEST(Library, BaconShorShape) {
    DynamicalCode c = bacon_shor(3, 3);
    EXPECT_EQ(c.n, 9u);
    ASSERT_EQ(c.rounds.size(), 2u);
    EXPECT_EQ(c.rounds[0].size() + c.rounds[1].size(), 12u);
    // Four stabilizers plus the six XX checks of the last round.
    EXPECT_EQ(group_rank(c.s0, 9), 8u);
    EXPECT_THROW(bacon_shor(1, 3), std::invalid_argument);
}

TEST(Library, HoneycombLayout) {
    HoneycombLayout l = honeycomb_layout(3, 3);
    EXPECT_EQ(l.n, 18u);
    ASSERT_EQ(l.plaquettes.size(), 9u);
    for (size_t c = 0; c < 3; c++) {
        EXPECT_EQ(l.checks[c].size(), 9u);
        EXPECT_EQ(std::count(l.plaquette_color.begin(), l.plaquette_color.end(), static_cast<int>(c)), 3);
    }
    std::vector<size_t> degree(l.n, 0);
    for (const auto &checks : l.checks) {
        for (const auto &ch : checks) {
            EXPECT_EQ(ch.weight(), 2u);
            for (size_t q : ch.support()) {
                degree[q]++;
            }
            for (const auto &p : l.plaquettes) {
                EXPECT_TRUE(p.commutes_with(ch));
            }
        }
    }
    // Every qubit sits on one edge of each color.
    for (size_t d : degree) {
        EXPECT_EQ(d, 3u);
    }
    for (const auto &p : l.plaquettes) {
        EXPECT_EQ(p.weight(), 6u);
    }
    // Checks of one color are disjoint.
    for (const auto &checks : l.checks) {
        PauliOperator all(l.n);
        size_t total = 0;
        for (const auto &ch : checks) {
            all *= ch;
            total += 2;
        }
        EXPECT_EQ(all.weight(), total);
    }
    EXPECT_THROW(honeycomb_layout(2, 3), std::invalid_argument);
    EXPECT_THROW(honeycomb(3, 4), std::invalid_argument);
    EXPECT_EQ(honeycomb_layout(6, 3).n, 36u);
}

TEST(Library, SubsystemSurface) {
    auto gauges = subsystem_surface_gauges(2);
    EXPECT_EQ(gauges.size(), 16u);
    for (const auto &g : gauges) {
        EXPECT_EQ(g.weight(), 3u);
    }
    DynamicalCode c = subsystem_surface_code(2);
    EXPECT_EQ(c.n, 12u);
    // S0 follows the X round: it holds every X triangle and commutes with them.
    for (const auto &g : gauges) {
        if (g.x().any()) {
            EXPECT_TRUE(group_contains(c.s0, {g}, c.n));
        }
    }
    EXPECT_THROW(subsystem_surface_gauges(3), std::invalid_argument);
}

TEST(Library, SmallExamples) {
    EXPECT_THROW(intuition_example(4), std::invalid_argument);
    EXPECT_EQ(intuition_example(3).rounds.size(), 3u);
    EXPECT_EQ(honeycomb_plaquette_example().n, 6u);
    EXPECT_EQ(subsystem_pair_example().n, 1u);
    DynamicalCode lu = logical_update_example();
    EXPECT_EQ(lu.logicals.size(), 1u);
    EXPECT_TRUE(validate_code(lu).empty());
}
