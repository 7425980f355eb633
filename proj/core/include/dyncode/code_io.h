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
#include <stdexcept>
#include <string>
#include <string_view>

#include "dyncode/code.h"

namespace dyncode {

constexpr int kCodeFormatVersion = 1;

/// Malformed code file. line is 1-based, or 0 when no position applies.
class CodeFormatError : public std::invalid_argument {
   public:
    CodeFormatError(const std::string &source, size_t line, const std::string &message);
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// Parses the JSON code format. The result is not validated; run validate_code on it.
DynamicalCode parse_code(std::string_view text, const std::string &source = "<input>");
DynamicalCode load_code(const std::string &path);

/// Canonical text: dense Pauli strings, two-space indentation, trailing newline.
/// dump_code(parse_code(dump_code(c))) == dump_code(c).
std::string dump_code(const DynamicalCode &code);
void save_code(const DynamicalCode &code, const std::string &path);

}  // namespace dyncode
