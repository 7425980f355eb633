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

#include "dyncode/pauli.h"

#include <gtest/gtest.h>

#include "brute_force.h"
#include "generators.h"

using namespace dyncode;

TEST(Pauli, ParseDenseAndSparseAgree) {
    EXPECT_EQ(parse_pauli("XIZY", 4), parse_pauli("X1 Z3 Y4", 4));
    EXPECT_EQ(parse_pauli("Z6Z7", 8), parse_pauli("IIIIIZZI", 8));
    EXPECT_EQ(parse_pauli("x1 z2", 2), parse_pauli("XZ", 2));
    EXPECT_EQ(parse_pauli("X1*Z2", 2), parse_pauli("XZ", 2));
}

TEST(Pauli, ParseRejectsMalformedInput) {
    EXPECT_THROW(parse_pauli("", 3), std::invalid_argument);
    EXPECT_THROW(parse_pauli("XZ", 3), std::invalid_argument);
    EXPECT_THROW(parse_pauli("XQZ", 3), std::invalid_argument);
    EXPECT_THROW(parse_pauli("X4", 3), std::invalid_argument);
    EXPECT_THROW(parse_pauli("X0", 3), std::invalid_argument);
    EXPECT_THROW(parse_pauli("X1 Z1", 3), std::invalid_argument);
    EXPECT_THROW(parse_pauli("X", 3), std::invalid_argument);
    EXPECT_THROW(parse_pauli("Z1 X", 3), std::invalid_argument);
}

TEST(Pauli, SignsAreRejected) {
    EXPECT_THROW(parse_pauli("-XZ", 2), std::invalid_argument);
    EXPECT_THROW(parse_pauli("+XZ", 2), std::invalid_argument);
    EXPECT_THROW(parse_pauli("iXZ", 2), std::invalid_argument);
}

TEST(Pauli, Formatting) {
    PauliOperator p = parse_pauli("X1 Y3", 4);
    EXPECT_EQ(p.str(), "XIYI");
    EXPECT_EQ(p.sparse_str(), "X1 Y3");
    EXPECT_EQ(PauliOperator(3).sparse_str(), "I");
    EXPECT_EQ(p.weight(), 2u);
    EXPECT_EQ(p.support(), (std::vector<size_t>{0, 2}));
}

TEST(Pauli, ProductDropsPhase) {
    PauliOperator x = parse_pauli("X", 1);
    PauliOperator z = parse_pauli("Z", 1);
    EXPECT_EQ(x * z, parse_pauli("Y", 1));
    EXPECT_TRUE((x * x).is_identity());
}

TEST(Pauli, SymplecticProductSmallCases) {
    EXPECT_TRUE(symplectic_product(parse_pauli("X", 1), parse_pauli("Z", 1)));
    EXPECT_FALSE(symplectic_product(parse_pauli("XX", 2), parse_pauli("ZZ", 2)));
    EXPECT_TRUE(symplectic_product(parse_pauli("XY", 2), parse_pauli("ZY", 2)));
    EXPECT_FALSE(symplectic_product(parse_pauli("Y", 1), parse_pauli("Y", 1)));
}

TEST(Pauli, SymplecticRoundTrip) {
    PauliOperator p = parse_pauli("XYZI", 4);
    EXPECT_EQ(PauliOperator::from_symplectic(p.symplectic()), p);
    EXPECT_EQ(p.symplectic().str(), "11000110");
}

TEST(Pauli, SizeMismatchThrows) {
    PauliOperator a(2);
    PauliOperator b(3);
    EXPECT_THROW(a *= b, std::invalid_argument);
    EXPECT_THROW(a.commutes_with(b), std::invalid_argument);
}

// Property: commutation agrees with the packed-word oracle, and the product is
// bilinear with respect to it.
TEST(PauliProperty, CommutationMatchesOracle) {
    testutil::Gen g(3);
    for (int trial = 0; trial < 2000; trial++) {
        size_t n = g.range(1, 16);
        PauliOperator a = testutil::random_pauli(g, n, false);
        PauliOperator b = testutil::random_pauli(g, n, false);
        PauliOperator c = testutil::random_pauli(g, n, false);
        EXPECT_EQ(symplectic_product(a, b), testutil::anticommute(testutil::to_bp(a), testutil::to_bp(b)));
        EXPECT_EQ(symplectic_product(a * b, c), symplectic_product(a, c) != symplectic_product(b, c));
        EXPECT_EQ(testutil::from_bp(testutil::to_bp(a), n), a);
        EXPECT_EQ(parse_pauli(a.str(), n), a);
        if (!a.is_identity()) {
            EXPECT_EQ(parse_pauli(a.sparse_str(), n), a);
        }
    }
}
