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

#include "cli/report.h"

#include <openssl/evp.h>

#include <stdexcept>

namespace dyncode::cli {

Json number(long value, Provenance provenance) {
    Json out = Json::object();
    out["value"] = value;
    out["provenance"] = provenance_name(provenance);
    return out;
}

Json optional_number(const std::optional<size_t> &value, Provenance provenance) {
    if (!value) {
        return nullptr;
    }
    return number(static_cast<long>(*value), provenance);
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; i++) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

Json ReportDocument::to_json() const {
    Json out = Json::object();
    out["schema"] = kReportSchema;
    out["tool_version"] = kToolVersion;
    out["command"] = command;
    out["input"] = {{"source", source}, {"sha256", input_sha256}};
    out["parameters"] = parameters;
    out["result"] = payload;
    if (!references.empty()) {
        Json refs = Json::array();
        for (const auto &check : references) {
            Json item = Json::object();
            item["key"] = check.reference.key;
            item["reference"] = number(check.reference.value, check.reference.provenance);
            if (check.computed) {
                item["computed"] = number(*check.computed);
                item["match"] = *check.computed == check.reference.value;
            } else {
                item["computed"] = nullptr;
                item["match"] = nullptr;
            }
            refs.push_back(std::move(item));
        }
        out["references"] = std::move(refs);
    }
    return out;
}

std::string ReportDocument::dump() const {
    return to_json().dump(2) + "\n";
}

std::string error_document(const std::string &command, int exit_code, const std::string &kind, const std::string &message) {
    Json out = Json::object();
    out["schema"] = kReportSchema;
    out["tool_version"] = kToolVersion;
    out["command"] = command;
    out["error"] = {{"kind", kind}, {"exit_code", number(exit_code)}, {"message", message}};
    return out.dump(2) + "\n";
}

}  // namespace dyncode::cli
