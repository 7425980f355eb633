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

#include <bit>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dyncode {

namespace {

void require_same_size(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()) +
            " qubits");
    }
}

bool is_pauli_letter(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'I':
        case 'X':
        case 'Y':
        case 'Z':
            return true;
        default:
            return false;
    }
}

}  // namespace

PauliOperator::PauliOperator(size_t num_qubits) : x_(num_qubits), z_(num_qubits) {
}

PauliOperator::PauliOperator(BitVector x, BitVector z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("x and z masks differ in length");
    }
}

PauliOperator PauliOperator::single(size_t num_qubits, size_t q, char kind) {
    PauliOperator out(num_qubits);
    out.set(q, kind);
    return out;
}

PauliOperator PauliOperator::from_symplectic(const BitVector &v) {
    if (v.size() % 2) {
        throw std::invalid_argument("symplectic vector has odd length");
    }
    size_t n = v.size() / 2;
    return PauliOperator(v.slice(0, n), v.slice(n, n));
}

char PauliOperator::at(size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x_.get(q) | (z_.get(q) << 1)];
}

void PauliOperator::set(size_t q, char kind) {
    if (q >= num_qubits()) {
        throw std::out_of_range("qubit index out of range");
    }
    switch (std::toupper(static_cast<unsigned char>(kind))) {
        case 'I':
            x_.set(q, false);
            z_.set(q, false);
            break;
        case 'X':
            x_.set(q, true);
            z_.set(q, false);
            break;
        case 'Y':
            x_.set(q, true);
            z_.set(q, true);
            break;
        case 'Z':
            x_.set(q, false);
            z_.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + kind + "'");
    }
}

size_t PauliOperator::weight() const {
    size_t total = 0;
    for (size_t k = 0; k < x_.num_words(); k++) {
        total += std::popcount(x_.words()[k] | z_.words()[k]);
    }
    return total;
}

std::vector<size_t> PauliOperator::support() const {
    return (x_ | z_).ones();
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    require_same_size(*this, other);
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    require_same_size(*this, other);
    uint64_t acc = 0;
    const uint64_t *ax = x_.words();
    const uint64_t *az = z_.words();
    const uint64_t *bx = other.x_.words();
    const uint64_t *bz = other.z_.words();
    for (size_t k = 0; k < x_.num_words(); k++) {
        acc ^= (ax[k] & bz[k]) ^ (az[k] & bx[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

std::strong_ordering PauliOperator::operator<=>(const PauliOperator &other) const {
    if (auto c = z_ <=> other.z_; c != 0) {
        return c;
    }
    return x_ <=> other.x_;
}

std::string PauliOperator::str() const {
    std::string out(num_qubits(), 'I');
    for (size_t q = 0; q < num_qubits(); q++) {
        out[q] = at(q);
    }
    return out;
}

std::string PauliOperator::sparse_str() const {
    std::string out;
    for (size_t q : support()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += at(q);
        out += std::to_string(q + 1);
    }
    return out.empty() ? "I" : out;
}

PauliOperator parse_pauli(std::string_view text, size_t num_qubits) {
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        begin++;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        end--;
    }
    text = text.substr(begin, end - begin);
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    if (text[0] == '+' || text[0] == '-' ||
        (text[0] == 'i' && text.size() > 1 && std::isupper(static_cast<unsigned char>(text[1])))) {
        throw std::invalid_argument("sign prefix not permitted in Pauli string '" + std::string(text) + "'");
    }

    bool sparse = false;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            sparse = true;
            break;
        }
    }

    PauliOperator out(num_qubits);
    if (!sparse) {
        if (text.size() != num_qubits) {
            throw std::invalid_argument(
                "dense Pauli string '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                ", expected " + std::to_string(num_qubits));
        }
        for (size_t q = 0; q < text.size(); q++) {
            if (!is_pauli_letter(text[q])) {
                throw std::invalid_argument(
                    std::string("malformed character '") + text[q] + "' in Pauli string '" + std::string(text) + "'");
            }
            out.set(q, text[q]);
        }
        return out;
    }

    std::vector<bool> seen(num_qubits, false);
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            i++;
            continue;
        }
        if (!is_pauli_letter(c)) {
            throw std::invalid_argument(
                std::string("malformed character '") + c + "' in Pauli string '" + std::string(text) + "'");
        }
        size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            j++;
        }
        if (j == i + 1) {
            throw std::invalid_argument(
                "sparse Pauli term '" + std::string(1, c) + "' is missing its qubit index in '" + std::string(text) +
                "'");
        }
        size_t index = 0;
        for (size_t k = i + 1; k < j; k++) {
            index = index * 10 + static_cast<size_t>(text[k] - '0');
            if (index > num_qubits) {
                break;
            }
        }
        if (index == 0 || index > num_qubits) {
            throw std::invalid_argument(
                "qubit index " + std::string(text.substr(i + 1, j - i - 1)) + " out of range 1.." +
                std::to_string(num_qubits) + " in '" + std::string(text) + "'");
        }
        if (seen[index - 1]) {
            throw std::invalid_argument(
                "qubit " + std::to_string(index) + " appears twice in '" + std::string(text) + "'");
        }
        seen[index - 1] = true;
        out.set(index - 1, c);
        i = j;
    }
    return out;
}

std::string format_pauli(const PauliOperator &p) {
    return p.str();
}

PauliOperator product(const PauliOperator &a, const PauliOperator &b) {
    return a * b;
}

bool symplectic_product(const PauliOperator &a, const PauliOperator &b) {
    return !a.commutes_with(b);
}

size_t weight(const PauliOperator &p) {
    return p.weight();
}

std::ostream &operator<<(std::ostream &out, const PauliOperator &p) {
    return out << p.str();
}

}  // namespace dyncode
