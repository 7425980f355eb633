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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyncode/code.h"
#include "dyncode/distance.h"
#include "dyncode/library.h"

namespace dyncode::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailure = 1,
    kCapExceeded = 2,
    kInvariantViolation = 3,
};

/// Exactly one of file and builtin is set.
struct InputSpec {
    std::string file;
    std::string builtin;
};

struct LoadedInput {
    DynamicalCode code;
    std::string source;
    /// SHA-256 of the file bytes, or of the canonical text for builtin codes.
    std::string sha256;
    std::optional<CodeSpec> spec;
};

LoadedInput load_input(const InputSpec &input);

struct Options {
    InputSpec input;
    bool text = false;
    /// Defaults come from the builtin spec, else the whole schedule (one cycle if periodic).
    std::optional<size_t> window;
    std::optional<size_t> isg_round;

    size_t cap = 6;
    TDestabPolicy policy = TDestabPolicy::Canonical;
    size_t choice_cap = 4096;
    size_t threads = 0;

    size_t max_cycles = 32;

    std::string errors;
    uint64_t seed = 0;
    std::optional<size_t> max_weight;

    /// export only; empty means standard output.
    std::string output;
};

struct CommandOutput {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

CommandOutput cmd_validate(const Options &options);
CommandOutput cmd_classify(const Options &options);
CommandOutput cmd_distance(const Options &options);
CommandOutput cmd_floquet(const Options &options);
CommandOutput cmd_simulate(const Options &options);
CommandOutput cmd_export(const Options &options);
CommandOutput cmd_list(const Options &options);

/// Runs a command by name and converts exceptions into exit codes and a
/// structured error document on standard output.
CommandOutput run_command(const std::string &name, const Options &options);

}  // namespace dyncode::cli
