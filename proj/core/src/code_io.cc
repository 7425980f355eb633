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

#include "dyncode/code_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dyncode {

namespace {

using nlohmann::json;

struct Token {
    std::string text;
    size_t line;
    bool key;
};

// String literals of the raw text in order, so semantic errors can point at a line.
// Malformed text never reaches this: nlohmann rejects it first.
std::vector<Token> scan_strings(std::string_view text) {
    std::vector<Token> out;
    size_t line = 1;
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (c == '\n') {
            line++;
            continue;
        }
        if (c != '"') {
            continue;
        }
        Token tok{"", line, false};
        size_t j = i + 1;
        while (j < text.size() && text[j] != '"') {
            if (text[j] == '\\' && j + 1 < text.size()) {
                j++;
            }
            tok.text.push_back(text[j]);
            j++;
        }
        size_t k = j + 1;
        while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\r' || text[k] == '\n')) {
            k++;
        }
        tok.key = k < text.size() && text[k] == ':';
        out.push_back(std::move(tok));
        i = j;
    }
    return out;
}

class Reader {
   public:
    Reader(std::string_view text, std::string source) : tokens_(scan_strings(text)), source_(std::move(source)) {
    }

    // Line of the key path's key, or of the flat-th value string after it.
    size_t locate(std::initializer_list<std::string_view> path, long flat = -1) const {
        size_t pos = 0;
        size_t line = 0;
        for (auto key : path) {
            bool found = false;
            for (; pos < tokens_.size(); pos++) {
                if (tokens_[pos].key && tokens_[pos].text == key) {
                    line = tokens_[pos].line;
                    pos++;
                    found = true;
                    break;
                }
            }
            if (!found) {
                return line;
            }
        }
        if (flat < 0) {
            return line;
        }
        long seen = 0;
        for (; pos < tokens_.size(); pos++) {
            if (tokens_[pos].key) {
                break;
            }
            if (seen++ == flat) {
                return tokens_[pos].line;
            }
        }
        return line;
    }

    [[noreturn]] void fail(size_t line, const std::string &message) const {
        throw CodeFormatError(source_, line, message);
    }

    std::vector<std::string> strings(const json &value, std::initializer_list<std::string_view> path, const std::string &what) const {
        if (!value.is_array()) {
            fail(locate(path), what + " must be an array of strings");
        }
        std::vector<std::string> out;
        for (size_t i = 0; i < value.size(); i++) {
            if (!value[i].is_string()) {
                fail(locate(path), what + "[" + std::to_string(i) + "] must be a string");
            }
            out.push_back(value[i].get<std::string>());
        }
        return out;
    }

    PauliOperator pauli(const std::string &text, size_t n, size_t line, const std::string &what) const {
        try {
            return parse_pauli(text, n);
        } catch (const std::invalid_argument &e) {
            fail(line, what + ": " + e.what());
        }
    }

    size_t count(const json &value, std::initializer_list<std::string_view> path, const std::string &what) const {
        if (!value.is_number_unsigned()) {
            fail(locate(path), what + " must be a non-negative integer");
        }
        return value.get<size_t>();
    }

   private:
    std::vector<Token> tokens_;
    std::string source_;
};

std::string quote(const std::string &s) {
    return json(s).dump();
}

void write_list(std::ostringstream &out, const std::vector<std::string> &items, const std::string &indent) {
    if (items.empty()) {
        out << "[]";
        return;
    }
    out << "[\n";
    for (size_t i = 0; i < items.size(); i++) {
        out << indent << "  " << quote(items[i]) << (i + 1 < items.size() ? ",\n" : "\n");
    }
    out << indent << "]";
}

void write_nested(std::ostringstream &out, const std::vector<std::vector<std::string>> &items, const std::string &indent) {
    if (items.empty()) {
        out << "[]";
        return;
    }
    out << "[\n";
    for (size_t i = 0; i < items.size(); i++) {
        out << indent << "  ";
        write_list(out, items[i], indent + "  ");
        out << (i + 1 < items.size() ? ",\n" : "\n");
    }
    out << indent << "]";
}

std::vector<std::string> dense(const std::vector<PauliOperator> &ops) {
    std::vector<std::string> out;
    for (const auto &p : ops) {
        out.push_back(p.str());
    }
    return out;
}

}  // namespace

CodeFormatError::CodeFormatError(const std::string &source, size_t line, const std::string &message)
    : std::invalid_argument(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message),
      line_(line) {
}

DynamicalCode parse_code(std::string_view text, const std::string &source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        size_t line = 1;
        for (size_t i = 0; i < e.byte && i < text.size(); i++) {
            line += text[i] == '\n';
        }
        throw CodeFormatError(source, line, std::string("malformed JSON: ") + e.what());
    }
    Reader r(text, source);
    if (!doc.is_object()) {
        r.fail(1, "top level must be an object");
    }
    static const std::vector<std::string> known = {"version", "n", "s0", "rounds", "labels", "logicals", "periodic", "prefix_rounds"};
    for (const auto &[key, value] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            r.fail(r.locate({key}), "unknown field \"" + key + "\"");
        }
    }
    for (const char *key : {"version", "n", "s0", "rounds"}) {
        if (!doc.contains(key)) {
            r.fail(0, std::string("missing required field \"") + key + "\"");
        }
    }
    if (r.count(doc["version"], {"version"}, "version") != kCodeFormatVersion) {
        r.fail(r.locate({"version"}), "unsupported version " + doc["version"].dump());
    }

    DynamicalCode code;
    code.n = r.count(doc["n"], {"n"}, "n");
    if (code.n == 0) {
        r.fail(r.locate({"n"}), "n must be positive");
    }

    auto s0 = r.strings(doc["s0"], {"s0"}, "s0");
    for (size_t i = 0; i < s0.size(); i++) {
        code.s0.push_back(r.pauli(s0[i], code.n, r.locate({"s0"}, (long)i), "s0[" + std::to_string(i) + "]"));
    }

    const json &rounds = doc["rounds"];
    if (!rounds.is_array()) {
        r.fail(r.locate({"rounds"}), "rounds must be an array of arrays");
    }
    long flat = 0;
    for (size_t t = 0; t < rounds.size(); t++) {
        std::string what = "rounds[" + std::to_string(t) + "]";
        auto items = r.strings(rounds[t], {"rounds"}, what);
        std::vector<PauliOperator> round;
        for (size_t j = 0; j < items.size(); j++) {
            round.push_back(r.pauli(items[j], code.n, r.locate({"rounds"}, flat++), what + "[" + std::to_string(j) + "]"));
        }
        code.rounds.push_back(std::move(round));
    }

    if (doc.contains("logicals")) {
        auto items = r.strings(doc["logicals"], {"logicals"}, "logicals");
        for (size_t i = 0; i < items.size(); i++) {
            code.logicals.push_back(
                r.pauli(items[i], code.n, r.locate({"logicals"}, (long)i), "logicals[" + std::to_string(i) + "]"));
        }
    }
    if (doc.contains("periodic")) {
        if (!doc["periodic"].is_boolean()) {
            r.fail(r.locate({"periodic"}), "periodic must be a boolean");
        }
        code.periodic = doc["periodic"].get<bool>();
    }
    if (doc.contains("prefix_rounds")) {
        code.prefix_rounds = r.count(doc["prefix_rounds"], {"prefix_rounds"}, "prefix_rounds");
    }

    if (doc.contains("labels")) {
        const json &labels = doc["labels"];
        if (!labels.is_object()) {
            r.fail(r.locate({"labels"}), "labels must be an object");
        }
        for (const auto &[key, value] : labels.items()) {
            if (key == "s0") {
                code.s0_labels = r.strings(value, {"labels", "s0"}, "labels.s0");
            } else if (key == "logicals") {
                code.logical_labels = r.strings(value, {"labels", "logicals"}, "labels.logicals");
            } else if (key == "rounds") {
                if (!value.is_array()) {
                    r.fail(r.locate({"labels", "rounds"}), "labels.rounds must be an array of arrays");
                }
                for (size_t t = 0; t < value.size(); t++) {
                    code.round_labels.push_back(
                        r.strings(value[t], {"labels", "rounds"}, "labels.rounds[" + std::to_string(t) + "]"));
                }
            } else {
                r.fail(r.locate({"labels", key}), "unknown labels field \"" + key + "\"");
            }
        }
    }
    return code;
}

DynamicalCode load_code(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CodeFormatError(path, 0, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code(buf.str(), path);
}

std::string dump_code(const DynamicalCode &code) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"version\": " << kCodeFormatVersion << ",\n";
    out << "  \"n\": " << code.n << ",\n";
    out << "  \"periodic\": " << (code.periodic ? "true" : "false") << ",\n";
    out << "  \"prefix_rounds\": " << code.prefix_rounds << ",\n";
    out << "  \"s0\": ";
    write_list(out, dense(code.s0), "  ");
    out << ",\n  \"rounds\": ";
    std::vector<std::vector<std::string>> rounds;
    for (const auto &round : code.rounds) {
        rounds.push_back(dense(round));
    }
    write_nested(out, rounds, "  ");
    out << ",\n  \"logicals\": ";
    write_list(out, dense(code.logicals), "  ");
    bool labelled = !code.s0_labels.empty() || !code.round_labels.empty() || !code.logical_labels.empty();
    if (labelled) {
        out << ",\n  \"labels\": {\n    \"s0\": ";
        write_list(out, code.s0_labels, "    ");
        out << ",\n    \"rounds\": ";
        write_nested(out, code.round_labels, "    ");
        out << ",\n    \"logicals\": ";
        write_list(out, code.logical_labels, "    ");
        out << "\n  }";
    }
    out << "\n}\n";
    return out.str();
}

void save_code(const DynamicalCode &code, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << dump_code(code);
}

}  // namespace dyncode
