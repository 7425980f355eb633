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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "../support/generators.h"
#include "dyncode/library.h"

using namespace dyncode;
using namespace dyncode::testutil;

namespace {

size_t error_line(const std::string &text) {
    try {
        parse_code(text, "t.json");
    } catch (const CodeFormatError &e) {
        return e.line();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return 0;
}

std::string error_message(const std::string &text) {
    try {
        parse_code(text, "t.json");
    } catch (const CodeFormatError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(CodeIo, RoundTripsBuiltins) {
    for (const auto &spec : builtin_codes()) {
        std::string text = dump_code(spec.code);
        DynamicalCode back = parse_code(text, spec.name);
        EXPECT_EQ(back, spec.code) << spec.name;
        EXPECT_EQ(dump_code(back), text) << spec.name;
        EXPECT_EQ(text.back(), '\n');
    }
}

TEST(CodeIo, RoundTripsRandomCodes) {
    Gen g(3);
    for (int trial = 0; trial < 50; trial++) {
        DynamicalCode c = random_code(g);
        EXPECT_EQ(parse_code(dump_code(c)), c);
    }
}

TEST(CodeIo, HandWrittenFileMatchesBuilder) {
    const char *text = R"({
  "version": 1,
  "n": 3,
  "s0": ["Z3"],
  "rounds": [["X2"], ["x1 z2"]],
  "logicals": ["IIZ"],
  "labels": {"s0": ["s1"], "rounds": [["s2"], ["s3"]], "logicals": ["L1"]}
})";
    DynamicalCode c = parse_code(text);
    DynamicalCode expect = logical_update_example();
    expect.logicals = {parse_pauli("Z3", 3)};
    EXPECT_EQ(c, expect);
}

TEST(CodeIo, DefaultsForOptionalFields) {
    DynamicalCode c = parse_code(R"({"version": 1, "n": 2, "s0": [], "rounds": []})");
    EXPECT_EQ(c.n, 2u);
    EXPECT_FALSE(c.periodic);
    EXPECT_EQ(c.prefix_rounds, 0u);
    EXPECT_TRUE(c.logicals.empty());
    EXPECT_TRUE(c.s0_labels.empty());
}

TEST(CodeIo, SyntaxErrorsCarryLines) {
    EXPECT_EQ(error_line("{\n  \"version\": 1,\n  \"n\": 2\n  \"s0\": []\n}"), 4u);
    EXPECT_EQ(error_line("{\n\"version\": 1,\n"), 3u);
}

TEST(CodeIo, SemanticErrorsCarryLines) {
    const char *bad_pauli = "{\n  \"version\": 1,\n  \"n\": 2,\n  \"s0\": [\"XX\",\n         \"XQ\"],\n  \"rounds\": []\n}";
    EXPECT_EQ(error_line(bad_pauli), 5u);
    EXPECT_NE(error_message(bad_pauli).find("t.json:5:"), std::string::npos);

    const char *bad_round = "{\n  \"version\": 1,\n  \"n\": 2,\n  \"s0\": [],\n  \"rounds\": [[\"XX\"],\n    [\"ZZZ\"]]\n}";
    EXPECT_EQ(error_line(bad_round), 6u);

    const char *unknown = "{\n  \"version\": 1,\n  \"n\": 2,\n  \"s0\": [],\n  \"rounds\": [],\n  \"period\": 3\n}";
    EXPECT_EQ(error_line(unknown), 6u);
    EXPECT_NE(error_message(unknown).find("unknown field \"period\""), std::string::npos);
}

TEST(CodeIo, RejectsBadDocuments) {
    EXPECT_NE(error_message(R"({"version": 1, "n": 2, "s0": []})").find("missing required field \"rounds\""), std::string::npos);
    EXPECT_NE(error_message(R"({"version": 2, "n": 2, "s0": [], "rounds": []})").find("unsupported version"), std::string::npos);
    EXPECT_NE(error_message(R"({"version": 1, "n": 0, "s0": [], "rounds": []})").find("n must be positive"), std::string::npos);
    EXPECT_FALSE(error_message(R"({"version": 1, "n": -2, "s0": [], "rounds": []})").empty());
    EXPECT_FALSE(error_message(R"({"version": 1, "n": 2, "s0": [], "rounds": ["XX"]})").empty());
    EXPECT_FALSE(error_message(R"({"version": 1, "n": 2, "s0": [], "rounds": [], "periodic": 1})").empty());
    EXPECT_FALSE(error_message(R"({"version": 1, "n": 2, "s0": [], "rounds": [], "labels": {"m": []}})").empty());
    EXPECT_FALSE(error_message(R"([1, 2])").empty());
}

TEST(CodeIo, SaveAndLoad) {
    auto path = std::filesystem::temp_directory_path() / "dyncode_code_io_test.json";
    DynamicalCode c = honeycomb(3, 3);
    save_code(c, path.string());
    EXPECT_EQ(load_code(path.string()), c);
    std::filesystem::remove(path);
    EXPECT_THROW(load_code(path.string()), std::invalid_argument);
}
