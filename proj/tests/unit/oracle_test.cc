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

#include <gtest/gtest.h>

#include "brute_force.h"
#include "dyncode/library.h"
#include "generators.h"

using namespace dyncode;

TEST(Oracle, MakeWindowEvolvesS0) {
    DynamicalCode c = logical_update_example();
    Window w = make_window(c, 1, 1);
    EXPECT_EQ(w.isg_round, 1u);
    ASSERT_EQ(w.rounds.size(), 1u);
    EXPECT_EQ(w.rounds[0][0], parse_pauli("X1 Z2", 3));
    EXPECT_TRUE(same_group(w.s0, {parse_pauli("Z3", 3), parse_pauli("X2", 3)}, 3));
    ASSERT_EQ(w.measurements.size(), 1u);
    EXPECT_EQ(w.measurements[0].round, 2u);
    EXPECT_EQ(w.measurements[0].label, "s3");
    EXPECT_THROW(make_window(c, 3, 0), std::invalid_argument);
}

TEST(Oracle, IntuitionExamples) {
    for (size_t v = 0; v < 4; v++) {
        OracleResult r = forward_oracle(intuition_example(v), intuition_example(v).num_rounds());
        ASSERT_EQ(r.entries.size(), 2u);
        EXPECT_EQ(r.entries[1].formula.has_value(), v != 1) << "variant " << v;
    }
}

TEST(Oracle, FormulaForCombinesTheBasis) {
    OracleResult r = forward_oracle(shor_code(), 1);
    BitVector all(8);
    for (size_t i = 0; i < 8; i++) {
        all.set(i);
    }
    auto f = r.formula_for(all);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->symbols().size(), 8u);
}

TEST(Oracle, EnumerationCap) {
    EXPECT_THROW(forward_oracle(shor_code(), 1, 0, 4), std::length_error);
}

// Property: every recovered formula, read through the independent simulator,
// is exactly the claimed S0 combination.
TEST(OracleProperty, FormulasHoldInIndependentSimulation) {
    testutil::Gen g(43);
    for (int trial = 0; trial < 200; trial++) {
        DynamicalCode c = testutil::random_code(g);
        OracleResult r = forward_oracle(c, c.num_rounds());
        testutil::Layout layout{c.s0.size(), 16, 0};
        testutil::SymbolicSim sim(testutil::to_bp(c.s0), layout);
        std::vector<testutil::Affine> outcomes;
        for (const auto &round : c.rounds) {
            for (const auto &m : round) {
                outcomes.push_back(sim.measure(testutil::to_bp(m)));
            }
        }
        auto recoverable = testutil::recoverable_elements(outcomes, c.s0.size());
        for (const auto &e : r.entries) {
            uint64_t mask = 0;
            for (size_t i : e.element.ones()) {
                mask |= uint64_t{1} << i;
            }
            EXPECT_EQ(e.formula.has_value(), recoverable.count(mask) > 0);
            if (e.formula) {
                testutil::Affine sum;
                for (const auto &s : e.formula->symbols()) {
                    sum ^= outcomes.at(s.index);
                }
                testutil::Affine want;
                for (size_t i : e.element.ones()) {
                    want.set(i);
                }
                EXPECT_EQ(sum, want);
            }
        }
    }
}
