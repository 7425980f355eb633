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

#include <bit>
#include <stdexcept>

namespace dyncode {

namespace {

void require_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "bit vector size mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector out(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            out.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string contains a character other than 0 or 1");
        }
    }
    return out;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    BitVector out(num_bits);
    out.set(index);
    return out;
}

void BitVector::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::dot(const BitVector &other) const {
    require_same_size(*this, other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

size_t BitVector::find_first() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return (k << 6) + std::countr_zero(words_[k]);
        }
    }
    return npos;
}

size_t BitVector::find_next(size_t after) const {
    size_t i = after + 1;
    if (i >= num_bits_) {
        return npos;
    }
    size_t k = i >> 6;
    uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
    while (true) {
        if (w) {
            return (k << 6) + std::countr_zero(w);
        }
        if (++k == words_.size()) {
            return npos;
        }
        w = words_[k];
    }
}

size_t BitVector::find_last() const {
    for (size_t k = words_.size(); k-- > 0;) {
        if (words_[k]) {
            return (k << 6) + 63 - std::countl_zero(words_[k]);
        }
    }
    return npos;
}

std::vector<size_t> BitVector::ones() const {
    std::vector<size_t> out;
    for (size_t i = find_first(); i != npos; i = find_next(i)) {
        out.push_back(i);
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVector BitVector::slice(size_t begin, size_t length) const {
    if (begin + length > num_bits_) {
        throw std::out_of_range("bit vector slice out of range");
    }
    BitVector out(length);
    if ((begin & 63) == 0) {
        size_t first = begin >> 6;
        for (size_t k = 0; k < out.words_.size(); k++) {
            out.words_[k] = words_[first + k];
        }
        if (length & 63) {
            out.words_.back() &= (uint64_t{1} << (length & 63)) - 1;
        }
        return out;
    }
    for (size_t i = 0; i < length; i++) {
        if (get(begin + i)) {
            out.set(i);
        }
    }
    return out;
}

BitVector BitVector::concat(const BitVector &a, const BitVector &b) {
    BitVector out(a.size() + b.size());
    for (size_t k = 0; k < a.words_.size(); k++) {
        out.words_[k] = a.words_[k];
    }
    if ((a.size() & 63) == 0) {
        for (size_t k = 0; k < b.words_.size(); k++) {
            out.words_[(a.size() >> 6) + k] = b.words_[k];
        }
    } else {
        for (size_t i = b.find_first(); i != npos; i = b.find_next(i)) {
            out.set(a.size() + i);
        }
    }
    return out;
}

std::strong_ordering BitVector::operator<=>(const BitVector &other) const {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    for (size_t k = words_.size(); k-- > 0;) {
        if (auto c = words_[k] <=> other.words_[k]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t i = find_first(); i != npos; i = find_next(i)) {
        out[i] = '1';
    }
    return out;
}

size_t BitVector::hash() const {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ num_bits_;
    for (uint64_t w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

}  // namespace dyncode
