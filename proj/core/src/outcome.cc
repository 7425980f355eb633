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

#include <algorithm>
#include <iterator>

namespace dyncode {

std::string symbol_kind_name(SymbolKind kind) {
    switch (kind) {
        case SymbolKind::InitialStabilizer:
            return "initial-stabilizer";
        case SymbolKind::InitialLogical:
            return "initial-logical";
        case SymbolKind::RandomBit:
            return "random-bit";
        case SymbolKind::Measurement:
            return "measurement";
        case SymbolKind::ErrorSyndrome:
            return "error-syndrome";
    }
    return "unknown";
}

std::string OutcomeSymbol::str() const {
    static constexpr const char *prefix[] = {"s", "L", "r", "m", "e"};
    return std::string("O(") + prefix[static_cast<int>(kind)] + std::to_string(index) + ")";
}

OutcomeExpr OutcomeExpr::constant(bool sign) {
    OutcomeExpr out;
    out.sign_ = sign;
    return out;
}

OutcomeExpr OutcomeExpr::symbol(SymbolKind kind, uint32_t index) {
    OutcomeExpr out;
    out.symbols_.push_back(OutcomeSymbol{kind, index});
    return out;
}

bool OutcomeExpr::has_kind(SymbolKind kind) const {
    return std::any_of(symbols_.begin(), symbols_.end(), [&](const OutcomeSymbol &s) {
        return s.kind == kind;
    });
}

OutcomeExpr OutcomeExpr::restricted_to(SymbolKind kind) const {
    OutcomeExpr out;
    for (const auto &s : symbols_) {
        if (s.kind == kind) {
            out.symbols_.push_back(s);
        }
    }
    return out;
}

OutcomeExpr OutcomeExpr::without(SymbolKind kind) const {
    OutcomeExpr out;
    out.sign_ = sign_;
    for (const auto &s : symbols_) {
        if (s.kind != kind) {
            out.symbols_.push_back(s);
        }
    }
    return out;
}

OutcomeExpr &OutcomeExpr::operator*=(const OutcomeExpr &other) {
    sign_ ^= other.sign_;
    if (other.symbols_.empty()) {
        return *this;
    }
    std::vector<OutcomeSymbol> merged;
    merged.reserve(symbols_.size() + other.symbols_.size());
    std::set_symmetric_difference(
        symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end(), std::back_inserter(merged));
    symbols_ = std::move(merged);
    return *this;
}

bool OutcomeExpr::evaluate(const std::function<bool(const OutcomeSymbol &)> &assignment) const {
    bool out = sign_;
    for (const auto &s : symbols_) {
        out ^= assignment(s);
    }
    return out;
}

OutcomeExpr OutcomeExpr::substitute(const std::function<OutcomeExpr(const OutcomeSymbol &)> &f) const {
    OutcomeExpr out = constant(sign_);
    for (const auto &s : symbols_) {
        out *= f(s);
    }
    return out;
}

std::string OutcomeExpr::str() const {
    if (symbols_.empty()) {
        return sign_ ? "-1" : "+1";
    }
    std::string out = sign_ ? "-" : "";
    for (size_t i = 0; i < symbols_.size(); i++) {
        if (i) {
            out += '*';
        }
        out += symbols_[i].str();
    }
    return out;
}

}  // namespace dyncode
