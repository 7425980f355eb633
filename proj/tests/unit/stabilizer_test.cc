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

#include <gtest/gtest.h>

#include "brute_force.h"
#include "generators.h"

using namespace dyncode;

namespace {

PauliOperator P(const char *s, size_t n) {
    return parse_pauli(s, n);
}

}  // namespace

TEST(Stabilizer, InGroupMeasurementIsDetermined) {
    ISGState s = ISGState::with_initial_symbols({P("Z1 Z2", 3), P("Z2 Z3", 3)}, 3);
    MeasureResult r = s.measure(P("Z1 Z3", 3));
    EXPECT_EQ(r.kind, MeasureCase::InGroup);
    EXPECT_EQ(r.outcome.str(), "O(s0)*O(s1)");
    EXPECT_EQ(s.size(), 2u);
}

TEST(Stabilizer, AnticommutingMeasurementReplacesFirstGenerator) {
    ISGState s = ISGState::with_initial_symbols({P("Z1 Z2", 3), P("Z2 Z3", 3)}, 3);
    MeasureResult r = s.measure(P("X2", 3));
    EXPECT_EQ(r.kind, MeasureCase::Anticommuting);
    EXPECT_EQ(r.index, 0u);
    ASSERT_TRUE(r.replaced.has_value());
    EXPECT_EQ(*r.replaced, P("Z1 Z2", 3));
    EXPECT_EQ(s.generators()[0], P("X2", 3));
    EXPECT_EQ(s.generators()[1], P("Z1 Z3", 3));
    EXPECT_EQ(s.outcomes()[1].str(), "O(s0)*O(s1)");
    EXPECT_EQ(r.outcome.str(), "O(r0)");
}

TEST(Stabilizer, IndependentMeasurementIsAppended) {
    ISGState s(2);
    MeasureResult r = s.measure(P("X1", 2));
    EXPECT_EQ(r.kind, MeasureCase::Independent);
    EXPECT_EQ(s.size(), 1u);
    EXPECT_EQ(s.next_random(), 1u);
}

TEST(Stabilizer, LogicalIsUpdatedByTheReplacedGenerator) {
    // Logical Z1 picks up X2 when X1 Z2 replaces X2.
    ISGState s = ISGState::with_initial_symbols({P("Z3", 3)}, 3);
    s.add_logical(P("Z1", 3), OutcomeExpr::symbol(SymbolKind::InitialLogical, 0));
    s.measure(P("X2", 3));
    s.measure(P("X1 Z2", 3));
    EXPECT_EQ(s.logicals()[0].op, P("Z1 X2", 3));
    EXPECT_EQ(s.logicals()[0].outcome.str(), "O(L0)*O(r0)");
}

TEST(Stabilizer, LogicalMeasurementPolicy) {
    ISGState s(1);
    s.add_logical(P("Z1", 1), OutcomeExpr::symbol(SymbolKind::InitialLogical, 0));
    ISGState copy = s;
    EXPECT_THROW(s.measure(P("X1", 1)), LogicalMeasurementError);
    MeasureResult r = copy.measure(P("X1", 1), LogicalPolicy::Track);
    EXPECT_EQ(r.kind, MeasureCase::LogicalMeasured);
    EXPECT_EQ(copy.logicals()[0].op, P("X1", 1));
    MeasureResult again = copy.measure(P("X1", 1));
    EXPECT_EQ(again.kind, MeasureCase::LogicalValue);
}

TEST(Stabilizer, ErrorFlipsAnticommutingGenerators) {
    ISGState s = ISGState::with_initial_symbols({P("Z1 Z2", 2), P("X1 X2", 2)}, 2);
    s.apply_error(P("X1", 2), OutcomeExpr::symbol(SymbolKind::ErrorSyndrome, 0));
    EXPECT_EQ(s.outcomes()[0].str(), "O(s0)*O(e0)");
    EXPECT_EQ(s.outcomes()[1].str(), "O(s1)");
}

TEST(Stabilizer, GroupHelpers) {
    std::vector<PauliOperator> a = {P("Z1 Z2", 3), P("Z2 Z3", 3)};
    std::vector<PauliOperator> b = {P("Z1 Z3", 3), P("Z1 Z2", 3)};
    EXPECT_TRUE(same_group(a, b, 3));
    EXPECT_TRUE(group_contains(a, {P("Z1 Z3", 3)}, 3));
    EXPECT_FALSE(group_contains(a, {P("Z1", 3)}, 3));
    EXPECT_EQ(group_rank(a, 3), 2u);
}

// Property: the symbolic state agrees with the independent simulator at every
// step, both on the generated group and on every outcome form.
TEST(StabilizerProperty, MatchesIndependentSimulator) {
    testutil::Gen g(41);
    for (int trial = 0; trial < 300; trial++) {
        DynamicalCode c = testutil::random_code(g, {6, 6, 10, 3});
        testutil::Layout layout{c.s0.size(), 32, 0};
        testutil::SymbolicSim sim(testutil::to_bp(c.s0), layout);
        ISGState state = ISGState::with_initial_symbols(c.s0, c.n);
        for (const auto &round : c.rounds) {
            for (const auto &m : round) {
                OutcomeExpr got = state.measure(m).outcome;
                testutil::Affine want = sim.measure(testutil::to_bp(m));
                testutil::Affine have;
                for (const auto &s : got.symbols()) {
                    have.set(s.kind == SymbolKind::InitialStabilizer ? layout.s(s.index) : layout.r(s.index));
                }
                EXPECT_EQ(have, want);
                state.check_invariants();
            }
        }
        EXPECT_TRUE(testutil::same_group(testutil::to_bp(state.generators()), sim.generators()));
        EXPECT_TRUE(same_group(evolve_generators(c.s0, c.rounds, c.n), state.generators(), c.n));
    }
}
