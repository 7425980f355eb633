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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dyncode {

/// Fixed-length packed bit vector. Bits past size() are always zero.
class BitVector {
   public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(size_t num_bits, size_t index);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    const uint64_t *words() const {
        return words_.data();
    }
    uint64_t *words() {
        return words_.data();
    }

    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool operator[](size_t i) const {
        return get(i);
    }
    void set(size_t i, bool value = true);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    bool any() const;
    bool none() const {
        return !any();
    }
    size_t popcount() const;
    /// Parity of the bitwise AND.
    bool dot(const BitVector &other) const;
    size_t find_first() const;
    size_t find_next(size_t after) const;
    size_t find_last() const;
    std::vector<size_t> ones() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        a &= b;
        return a;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        a |= b;
        return a;
    }

    /// Bits [begin, begin + length) as a new vector.
    BitVector slice(size_t begin, size_t length) const;
    /// a followed by b.
    static BitVector concat(const BitVector &a, const BitVector &b);

    bool operator==(const BitVector &other) const = default;
    /// Orders by size, then by the integer value with the highest index most significant.
    std::strong_ordering operator<=>(const BitVector &other) const;

    std::string str() const;
    size_t hash() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    size_t operator()(const BitVector &v) const {
        return v.hash();
    }
};

}  // namespace dyncode
