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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dyncode/bits.h"

namespace dyncode {

/// A phaseless n-qubit Pauli operator stored as X and Z bit masks.
///
/// Qubit q carries X when only x[q] is set, Z when only z[q] is set and Y when
/// both are. Products drop phases, so every operator is its own inverse.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits);
    PauliOperator(BitVector x, BitVector z);

    /// Single-qubit operator ('I', 'X', 'Y' or 'Z') on qubit q (0-based).
    static PauliOperator single(size_t num_qubits, size_t q, char kind);
    /// Inverse of symplectic(): the first half holds x, the second z.
    static PauliOperator from_symplectic(const BitVector &v);

    size_t num_qubits() const {
        return x_.size();
    }
    const BitVector &x() const {
        return x_;
    }
    const BitVector &z() const {
        return z_;
    }

    char at(size_t q) const;
    void set(size_t q, char kind);

    size_t weight() const;
    bool is_identity() const {
        return x_.none() && z_.none();
    }
    std::vector<size_t> support() const;

    /// Binary symplectic image [x | z] of length 2n.
    BitVector symplectic() const {
        return BitVector::concat(x_, z_);
    }

    PauliOperator &operator*=(const PauliOperator &other);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator &b) {
        a *= b;
        return a;
    }

    bool commutes_with(const PauliOperator &other) const;
    bool anticommutes_with(const PauliOperator &other) const {
        return !commutes_with(other);
    }

    bool operator==(const PauliOperator &other) const = default;
    std::strong_ordering operator<=>(const PauliOperator &other) const;

    /// Dense form, e.g. "XIZY".
    std::string str() const;
    /// Sparse form with 1-based indices, e.g. "X1 Z3 Y4"; "I" for the identity.
    std::string sparse_str() const;

   private:
    BitVector x_;
    BitVector z_;
};

/// Parses dense ("XIZY", exactly n letters) or sparse ("X1 Z3", "Z6Z7") text.
/// Lower-case letters are accepted. Sign prefixes are rejected.
PauliOperator parse_pauli(std::string_view text, size_t num_qubits);
std::string format_pauli(const PauliOperator &p);

PauliOperator product(const PauliOperator &a, const PauliOperator &b);
/// 1 iff a and b anticommute.
bool symplectic_product(const PauliOperator &a, const PauliOperator &b);
size_t weight(const PauliOperator &p);

std::ostream &operator<<(std::ostream &out, const PauliOperator &p);

}  // namespace dyncode
