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

#include "dyncode/gf2.h"

#include <algorithm>
#include <stdexcept>

namespace dyncode {

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix out(n, n);
    for (size_t i = 0; i < n; i++) {
        out.set(i, i);
    }
    return out;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, size_t num_cols) {
    BitMatrix out;
    out.cols_ = num_cols;
    for (const auto &r : rows) {
        if (r.size() != num_cols) {
            throw std::invalid_argument("row width does not match matrix width");
        }
    }
    out.rows_ = std::move(rows);
    return out;
}

BitMatrix BitMatrix::from_paulis(const std::vector<PauliOperator> &ops, size_t num_qubits) {
    BitMatrix out(0, 2 * num_qubits);
    for (const auto &p : ops) {
        if (p.num_qubits() != num_qubits) {
            throw std::invalid_argument("operator size does not match qubit count");
        }
        out.rows_.push_back(p.symplectic());
    }
    return out;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("row width does not match matrix width");
    }
    rows_.push_back(std::move(row));
}

BitVector BitMatrix::combine(const BitVector &coeffs) const {
    if (coeffs.size() != rows_.size()) {
        throw std::invalid_argument("combination length does not match row count");
    }
    BitVector out(cols_);
    for (size_t i = coeffs.find_first(); i != BitVector::npos; i = coeffs.find_next(i)) {
        out ^= rows_[i];
    }
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix &other) const {
    if (cols_ != other.rows()) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    BitMatrix out(rows_.size(), other.cols());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.rows_[r] = other.combine(rows_[r]);
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

RrefResult rref(const BitMatrix &m) {
    RrefResult res;
    res.echelon = m;
    res.transform = BitMatrix::identity(m.rows());
    BitMatrix &e = res.echelon;
    BitMatrix &t = res.transform;

    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        size_t p = r;
        while (p < m.rows() && !e.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            std::swap(e.row(p), e.row(r));
            std::swap(t.row(p), t.row(r));
        }
        for (size_t i = 0; i < m.rows(); i++) {
            if (i != r && e.get(i, c)) {
                e.row(i) ^= e.row(r);
                t.row(i) ^= t.row(r);
            }
        }
        res.pivots.push_back(c);
        r++;
    }
    res.rank = r;
    return res;
}

size_t rank(const BitMatrix &m) {
    EchelonBasis basis(m.cols());
    for (const auto &row : m.row_vectors()) {
        basis.insert(row);
    }
    return basis.rank();
}

std::optional<Combination> in_span(const BitVector &v, const BitMatrix &basis) {
    if (v.size() != basis.cols()) {
        throw std::invalid_argument("vector width does not match basis width");
    }
    RrefResult red = rref(basis);
    BitVector rest = v;
    BitVector coeffs(basis.rows());
    for (size_t i = 0; i < red.rank; i++) {
        if (rest.get(red.pivots[i])) {
            rest ^= red.echelon.row(i);
            coeffs ^= red.transform.row(i);
        }
    }
    if (rest.any()) {
        return std::nullopt;
    }
    return Combination{std::move(coeffs)};
}

SpanIntersection span_intersection(const BitMatrix &c_basis, const BitMatrix &v_basis) {
    if (c_basis.cols() != v_basis.cols()) {
        throw std::invalid_argument("span_intersection: width mismatch");
    }
    size_t w = c_basis.cols();
    size_t m = v_basis.rows();
    size_t k = c_basis.rows();

    BitMatrix block(0, 2 * w);
    for (const auto &v : v_basis.row_vectors()) {
        block.append_row(BitVector::concat(v, v));
    }
    for (const auto &c : c_basis.row_vectors()) {
        block.append_row(BitVector::concat(c, BitVector(w)));
    }

    RrefResult red = rref(block);
    SpanIntersection out;
    out.basis = BitMatrix(0, w);
    for (size_t i = 0; i < block.rows(); i++) {
        const BitVector &row = red.echelon.row(i);
        if (row.slice(0, w).any()) {
            continue;
        }
        const BitVector &tr = red.transform.row(i);
        Combination over_v{tr.slice(0, m)};
        Combination over_c{tr.slice(m, k)};
        BitVector right = row.slice(w, w);
        if (right.any()) {
            out.basis.append_row(std::move(right));
            out.c_combinations.push_back(std::move(over_c));
            out.v_combinations.push_back(std::move(over_v));
        } else if (over_c.coefficients.any()) {
            out.redundancies.push_back(std::move(over_c));
        }
    }
    return out;
}

BitMatrix nullspace(const BitMatrix &m) {
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : red.pivots) {
        is_pivot[c] = true;
    }
    BitMatrix out(0, m.cols());
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f);
        for (size_t i = 0; i < red.rank; i++) {
            if (red.echelon.get(i, f)) {
                v.set(red.pivots[i]);
            }
        }
        out.append_row(std::move(v));
    }
    return out;
}

BitMatrix kernel_under_form(const BitMatrix &generators) {
    if (generators.cols() % 2) {
        throw std::invalid_argument("symplectic vectors must have even width");
    }
    size_t n = generators.cols() / 2;
    BitMatrix swapped(0, generators.cols());
    for (const auto &g : generators.row_vectors()) {
        swapped.append_row(BitVector::concat(g.slice(n, n), g.slice(0, n)));
    }
    return nullspace(swapped);
}

std::optional<BitVector> solve_least(const BitMatrix &a, const BitVector &rhs) {
    if (rhs.size() != a.rows()) {
        throw std::invalid_argument("solve_least: right-hand side length mismatch");
    }
    BitMatrix aug(0, a.cols() + 1);
    for (size_t r = 0; r < a.rows(); r++) {
        BitVector row = BitVector::concat(a.row(r), BitVector(1));
        row.set(a.cols(), rhs.get(r));
        aug.append_row(std::move(row));
    }
    RrefResult red = rref(aug);
    BitVector x(a.cols());
    for (size_t i = 0; i < red.rank; i++) {
        size_t p = red.pivots[i];
        if (p == a.cols()) {
            return std::nullopt;
        }
        if (red.echelon.get(i, a.cols())) {
            x.set(p);
        }
    }

    // Minimize over x + nullspace(a), deciding bits from the highest index down.
    std::vector<BitVector> high;
    BitMatrix kernel = nullspace(a);
    for (BitVector v : kernel.row_vectors()) {
        bool changed = true;
        while (changed && v.any()) {
            changed = false;
            for (const auto &h : high) {
                if (h.find_last() == v.find_last()) {
                    v ^= h;
                    changed = true;
                    break;
                }
            }
        }
        if (v.any()) {
            high.push_back(std::move(v));
        }
    }
    std::sort(high.begin(), high.end(), [](const BitVector &p, const BitVector &q) {
        return p.find_last() > q.find_last();
    });
    for (const auto &h : high) {
        if (x.get(h.find_last())) {
            x ^= h;
        }
    }
    return x;
}

bool symplectic_form(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size() || a.size() % 2) {
        throw std::invalid_argument("symplectic_form: incompatible widths");
    }
    size_t n = a.size() / 2;
    return a.slice(0, n).dot(b.slice(n, n)) ^ a.slice(n, n).dot(b.slice(0, n));
}

EchelonBasis::EchelonBasis(size_t width, size_t capacity) : width_(width), capacity_(capacity) {
}

bool EchelonBasis::insert(const BitVector &v) {
    if (v.size() != width_) {
        throw std::invalid_argument("EchelonBasis: width mismatch");
    }
    BitVector vec = v;
    BitVector combo(capacity_);
    if (capacity_) {
        if (inserted_ >= capacity_) {
            throw std::length_error("EchelonBasis: combination capacity exceeded");
        }
        combo.set(inserted_);
    }
    inserted_++;
    for (const auto &row : rows_) {
        if (vec.get(row.pivot)) {
            vec ^= row.vec;
            if (capacity_) {
                combo ^= row.combo;
            }
        }
    }
    if (vec.none()) {
        return false;
    }
    size_t pivot = vec.find_first();
    for (auto &row : rows_) {
        if (row.vec.get(pivot)) {
            row.vec ^= vec;
            if (capacity_) {
                row.combo ^= combo;
            }
        }
    }
    rows_.push_back(Row{std::move(vec), std::move(combo), pivot});
    return true;
}

BitVector EchelonBasis::reduce(const BitVector &v) const {
    if (v.size() != width_) {
        throw std::invalid_argument("EchelonBasis: width mismatch");
    }
    BitVector out = v;
    for (const auto &row : rows_) {
        if (out.get(row.pivot)) {
            out ^= row.vec;
        }
    }
    return out;
}

bool EchelonBasis::contains(const BitVector &v) const {
    return reduce(v).none();
}

std::optional<BitVector> EchelonBasis::combination(const BitVector &v) const {
    if (!capacity_ && inserted_) {
        throw std::logic_error("EchelonBasis: combinations are not tracked");
    }
    BitVector rest = v;
    BitVector combo(capacity_);
    for (const auto &row : rows_) {
        if (rest.get(row.pivot)) {
            rest ^= row.vec;
            combo ^= row.combo;
        }
    }
    if (rest.any()) {
        return std::nullopt;
    }
    return combo;
}

std::vector<BitVector> EchelonBasis::basis() const {
    std::vector<BitVector> out;
    out.reserve(rows_.size());
    for (const auto &row : rows_) {
        out.push_back(row.vec);
    }
    return out;
}

}  // namespace dyncode
