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
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dyncode {

enum class SymbolKind : uint8_t {
    /// Initial eigenvalue of the i-th generator of S0.
    InitialStabilizer,
    /// Initial eigenvalue of the i-th tracked logical.
    InitialLogical,
    /// Fresh random outcome of a nondeterministic measurement.
    RandomBit,
    /// Recorded outcome of the i-th measurement of an analysis window.
    Measurement,
    /// Sign flip caused by the i-th injected error.
    ErrorSyndrome,
};

std::string symbol_kind_name(SymbolKind kind);

struct OutcomeSymbol {
    SymbolKind kind;
    uint32_t index;

    auto operator<=>(const OutcomeSymbol &other) const = default;
    std::string str() const;
};

/// A ±1 value written as sign * product of symbols, stored additively: the
/// value is (-1)^(sign + sum of symbol bits). Products take the symmetric
/// difference of symbol sets.
class OutcomeExpr {
   public:
    OutcomeExpr() = default;
    static OutcomeExpr constant(bool sign);
    static OutcomeExpr symbol(SymbolKind kind, uint32_t index);

    bool sign() const {
        return sign_;
    }
    const std::vector<OutcomeSymbol> &symbols() const {
        return symbols_;
    }
    bool is_constant() const {
        return symbols_.empty();
    }
    bool has_kind(SymbolKind kind) const;
    /// Only the symbols of the given kind, with a zero sign.
    OutcomeExpr restricted_to(SymbolKind kind) const;
    /// Everything except symbols of the given kind.
    OutcomeExpr without(SymbolKind kind) const;

    void flip_sign() {
        sign_ = !sign_;
    }
    OutcomeExpr &operator*=(const OutcomeExpr &other);
    friend OutcomeExpr operator*(OutcomeExpr a, const OutcomeExpr &b) {
        a *= b;
        return a;
    }

    /// Bit value (0 means +1) under an assignment of bits to symbols.
    bool evaluate(const std::function<bool(const OutcomeSymbol &)> &assignment) const;
    /// Replaces each symbol by an expression and multiplies everything out.
    OutcomeExpr substitute(const std::function<OutcomeExpr(const OutcomeSymbol &)> &f) const;

    bool operator==(const OutcomeExpr &other) const = default;
    /// e.g. "-O(m3)*O(m5)" or "+1".
    std::string str() const;

   private:
    bool sign_ = false;
    std::vector<OutcomeSymbol> symbols_;
};

}  // namespace dyncode
