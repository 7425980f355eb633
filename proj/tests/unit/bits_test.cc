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

#include "dyncode/bits.h"

#include <gtest/gtest.h>

#include "generators.h"

using namespace dyncode;

TEST(BitVector, SetGetAcrossWordBoundary) {
    BitVector v(130);
    v.set(0);
    v.set(63);
    v.set(64);
    v.set(129);
    EXPECT_TRUE(v[0] && v[63] && v[64] && v[129]);
    EXPECT_FALSE(v[1] || v[65] || v[128]);
    EXPECT_EQ(v.popcount(), 4u);
    EXPECT_EQ(v.ones(), (std::vector<size_t>{0, 63, 64, 129}));
    v.set(63, false);
    EXPECT_FALSE(v[63]);
    v.flip(63);
    EXPECT_TRUE(v[63]);
}

TEST(BitVector, FindFirstNextLast) {
    BitVector v = BitVector::from_string("0010010001");
    EXPECT_EQ(v.find_first(), 2u);
    EXPECT_EQ(v.find_next(2), 5u);
    EXPECT_EQ(v.find_next(5), 9u);
    EXPECT_EQ(v.find_next(9), BitVector::npos);
    EXPECT_EQ(v.find_last(), 9u);
    EXPECT_EQ(BitVector(70).find_first(), BitVector::npos);
}

TEST(BitVector, DotIsParityOfAnd) {
    BitVector a = BitVector::from_string("1101");
    BitVector b = BitVector::from_string("1001");
    EXPECT_FALSE(a.dot(b));
    EXPECT_TRUE(a.dot(BitVector::from_string("1000")));
}

TEST(BitVector, XorAndOr) {
    BitVector a = BitVector::from_string("1100");
    BitVector b = BitVector::from_string("1010");
    EXPECT_EQ((a ^ b).str(), "0110");
    EXPECT_EQ((a & b).str(), "1000");
    EXPECT_EQ((a | b).str(), "1110");
}

TEST(BitVector, SliceAndConcat) {
    BitVector a = BitVector::from_string("101");
    BitVector b = BitVector::from_string("0011");
    BitVector c = BitVector::concat(a, b);
    EXPECT_EQ(c.str(), "1010011");
    EXPECT_EQ(c.slice(3, 4), b);
    EXPECT_EQ(c.slice(0, 3), a);
}

TEST(BitVector, OrderingUsesHighestIndexAsMostSignificant) {
    // "01" has bit 1 set (value 2) and "10" has bit 0 set (value 1).
    EXPECT_LT(BitVector::from_string("10"), BitVector::from_string("01"));
    EXPECT_LT(BitVector::from_string("11"), BitVector::from_string("001"));
}

TEST(BitVector, RandomSliceConcatRoundTrip) {
    testutil::Gen g(11);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = g.range(1, 200);
        BitVector v(n);
        for (size_t i = 0; i < n; i++) {
            v.set(i, g.coin());
        }
        size_t cut = g.range(0, n);
        EXPECT_EQ(BitVector::concat(v.slice(0, cut), v.slice(cut, n - cut)), v);
        EXPECT_EQ(BitVector::from_string(v.str()), v);
        EXPECT_EQ(v.hash(), BitVector::from_string(v.str()).hash());
    }
}
