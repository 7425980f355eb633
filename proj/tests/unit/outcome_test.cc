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

#include "dyncode/outcome.h"

#include <gtest/gtest.h>

#include "generators.h"

using namespace dyncode;

namespace {

OutcomeExpr m(uint32_t i) {
    return OutcomeExpr::symbol(SymbolKind::Measurement, i);
}

}  // namespace

TEST(Outcome, ProductIsSymmetricDifference) {
    OutcomeExpr a = m(1) * m(3);
    OutcomeExpr b = m(3) * m(5);
    EXPECT_EQ((a * b).str(), "O(m1)*O(m5)");
    EXPECT_TRUE((a * a).is_constant());
    EXPECT_EQ((a * a).str(), "+1");
}

TEST(Outcome, SignsMultiply) {
    OutcomeExpr minus = OutcomeExpr::constant(true);
    EXPECT_EQ((minus * m(2)).str(), "-O(m2)");
    EXPECT_EQ((minus * minus).str(), "+1");
}

TEST(Outcome, SymbolNames) {
    EXPECT_EQ(OutcomeExpr::symbol(SymbolKind::InitialStabilizer, 0).str(), "O(s0)");
    EXPECT_EQ(OutcomeExpr::symbol(SymbolKind::InitialLogical, 1).str(), "O(L1)");
    EXPECT_EQ(OutcomeExpr::symbol(SymbolKind::RandomBit, 2).str(), "O(r2)");
    EXPECT_EQ(OutcomeExpr::symbol(SymbolKind::ErrorSyndrome, 3).str(), "O(e3)");
    EXPECT_EQ(symbol_kind_name(SymbolKind::Measurement), "measurement");
}

TEST(Outcome, RestrictAndWithout) {
    OutcomeExpr e = OutcomeExpr::constant(true) * m(0) * OutcomeExpr::symbol(SymbolKind::ErrorSyndrome, 1);
    EXPECT_TRUE(e.has_kind(SymbolKind::ErrorSyndrome));
    EXPECT_EQ(e.restricted_to(SymbolKind::ErrorSyndrome).str(), "O(e1)");
    EXPECT_EQ(e.without(SymbolKind::ErrorSyndrome).str(), "-O(m0)");
}

TEST(Outcome, SubstituteMultipliesOut) {
    OutcomeExpr e = m(0) * m(1);
    OutcomeExpr r = e.substitute([](const OutcomeSymbol &s) {
        return s.index == 0 ? OutcomeExpr::symbol(SymbolKind::RandomBit, 7) : OutcomeExpr::symbol(SymbolKind::RandomBit, 7);
    });
    EXPECT_EQ(r.str(), "+1");
}

// Property: evaluation is a homomorphism from products to XOR.
TEST(OutcomeProperty, EvaluationIsAHomomorphism) {
    testutil::Gen g(5);
    for (int trial = 0; trial < 500; trial++) {
        OutcomeExpr a = OutcomeExpr::constant(g.coin());
        OutcomeExpr b = OutcomeExpr::constant(g.coin());
        for (int i = 0; i < 6; i++) {
            if (g.coin()) {
                a *= m(static_cast<uint32_t>(g.range(0, 9)));
            }
            if (g.coin()) {
                b *= m(static_cast<uint32_t>(g.range(0, 9)));
            }
        }
        uint64_t bits = g.bits();
        auto assign = [&](const OutcomeSymbol &s) { return ((bits >> s.index) & 1) != 0; };
        EXPECT_EQ((a * b).evaluate(assign), a.evaluate(assign) != b.evaluate(assign));
        EXPECT_TRUE(std::is_sorted(a.symbols().begin(), a.symbols().end()));
    }
}
