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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyncode/library.h"
#include "json.hpp"

namespace dyncode::cli {

using Json = nlohmann::ordered_json;

constexpr const char *kToolVersion = "0.1.0";
constexpr const char *kReportSchema = "dyncode-report/1";

/// A number with its provenance, serialized as {"value": v, "provenance": p}.
Json number(long value, Provenance provenance = Provenance::Computed);
/// null stays null so absent results never masquerade as numbers.
Json optional_number(const std::optional<size_t> &value, Provenance provenance = Provenance::Computed);

std::string sha256_hex(std::string_view bytes);

/// A reference value of a builtin code next to what this run computed for the same key.
struct ReferenceCheck {
    ReferenceValue reference;
    std::optional<long> computed;
};

struct ReportDocument {
    std::string command;
    std::string source;
    std::string input_sha256;
    /// Command-line parameters echoed back as given.
    Json parameters = Json::object();
    Json payload = Json::object();
    std::vector<ReferenceCheck> references;

    Json to_json() const;
    /// Two-space indented JSON with a trailing newline; byte-stable for fixed input.
    std::string dump() const;
};

/// Structured error report for a failed command.
std::string error_document(const std::string &command, int exit_code, const std::string &kind, const std::string &message);

}  // namespace dyncode::cli
