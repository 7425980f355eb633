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
#include <optional>
#include <string>
#include <vector>

#include "dyncode/bits.h"
#include "dyncode/pauli.h"

namespace dyncode {

/// Row-major dense matrix over GF(2). Row order is meaningful: rows usually
/// stand for named generators and results refer back to them by index.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);
    static BitMatrix identity(size_t n);
    static BitMatrix from_rows(std::vector<BitVector> rows, size_t num_cols);
    /// Symplectic images of the operators, one row each (width 2n).
    static BitMatrix from_paulis(const std::vector<PauliOperator> &ops, size_t num_qubits);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVector> &row_vectors() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }
    void append_row(BitVector row);

    /// XOR of the rows selected by coeffs.
    BitVector combine(const BitVector &coeffs) const;
    BitMatrix operator*(const BitMatrix &other) const;

    bool operator==(const BitMatrix &other) const = default;
    std::string str() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Coefficients selecting rows of a named generator list.
struct Combination {
    BitVector coefficients;

    std::vector<size_t> indices() const {
        return coefficients.ones();
    }
    BitVector evaluate(const BitMatrix &basis) const {
        return basis.combine(coefficients);
    }
    bool operator==(const Combination &other) const = default;
};

struct RrefResult {
    BitMatrix echelon;
    /// echelon = transform * input; invertible.
    BitMatrix transform;
    size_t rank = 0;
    /// Pivot column of each nonzero echelon row, increasing.
    std::vector<size_t> pivots;
};

/// Reduced row echelon form. Pivots are chosen leftmost column first, taking the
/// lowest-index remaining row that has a one there. Nonzero rows come first.
RrefResult rref(const BitMatrix &m);
size_t rank(const BitMatrix &m);

/// Coefficients c with c * basis = v, or nullopt if v is outside the row span.
std::optional<Combination> in_span(const BitVector &v, const BitMatrix &basis);

struct SpanIntersection {
    /// Basis of rowspan(C) ∩ rowspan(V).
    BitMatrix basis;
    /// For each basis row, how it is produced from the C rows and from the V rows.
    std::vector<Combination> c_combinations;
    std::vector<Combination> v_combinations;
    /// Nonzero combinations of C rows that multiply to zero.
    std::vector<Combination> redundancies;
};

/// Zassenhaus intersection via the block matrix [V V; C 0].
SpanIntersection span_intersection(const BitMatrix &c_basis, const BitMatrix &v_basis);

/// Basis of { x : m x = 0 }, in reduced form.
BitMatrix nullspace(const BitMatrix &m);

/// Basis of all symplectic vectors orthogonal, under the symplectic form, to every
/// row of generators (rows have width 2n).
BitMatrix kernel_under_form(const BitMatrix &generators);

/// The least solution of a x = rhs, ordering vectors as integers with the
/// highest index most significant; nullopt when inconsistent.
std::optional<BitVector> solve_least(const BitMatrix &a, const BitVector &rhs);

/// Symplectic form on vectors [x | z] of even width.
bool symplectic_form(const BitVector &a, const BitVector &b);

/// Incrementally built, fully reduced row basis. Reduction gives a canonical
/// representative of each coset of the span, and optionally the combination of
/// inserted vectors that produces a member.
class EchelonBasis {
   public:
    /// capacity bounds the number of insert() calls whose combinations are tracked;
    /// zero disables combination tracking.
    explicit EchelonBasis(size_t width, size_t capacity = 0);

    size_t width() const {
        return width_;
    }
    size_t rank() const {
        return rows_.size();
    }
    size_t num_inserted() const {
        return inserted_;
    }

    /// Records v as the next inserted vector. Returns true if it was independent.
    bool insert(const BitVector &v);
    bool contains(const BitVector &v) const;
    BitVector reduce(const BitVector &v) const;
    /// Combination over inserted vectors producing v, or nullopt if v is outside the span.
    std::optional<BitVector> combination(const BitVector &v) const;
    /// The independent reduced rows.
    std::vector<BitVector> basis() const;

   private:
    struct Row {
        BitVector vec;
        BitVector combo;
        size_t pivot;
    };
    size_t width_;
    size_t capacity_;
    size_t inserted_ = 0;
    std::vector<Row> rows_;
};

}  // namespace dyncode
