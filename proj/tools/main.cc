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

#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.h"

int main(int argc, char **argv) {
    using namespace dyncode::cli;

    CLI::App app{"Analyze dynamical codes defined by Pauli measurement schedules"};
    app.require_subcommand(1);
    Options o;
    std::string policy = "canonical";

    auto add_input = [&](CLI::App *cmd) {
        cmd->add_option("file", o.input.file, "Code file (JSON)");
        cmd->add_option("--builtin", o.input.builtin, "Use a builtin code instead of a file");
        cmd->add_option_function<std::string>(
               "--format", [&](const std::string &f) { o.text = f == "text"; }, "json (default) or text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_window = [&](CLI::App *cmd) {
        cmd->add_option("--window", o.window, "Number of rounds to analyze");
        cmd->add_option("--isg-round", o.isg_round, "Round whose ISG is analyzed");
    };

    auto *validate = app.add_subcommand("validate", "Check a code file and list every problem");
    add_input(validate);

    auto *classify = app.add_subcommand("classify", "Classify ISG stabilizers as U, T or P");
    add_input(classify);
    add_window(classify);

    auto *distance = app.add_subcommand("distance", "Compute d_u, d_subsystem and d_ISG");
    add_input(distance);
    add_window(distance);
    distance->add_option("--cap", o.cap, "Largest weight searched");
    distance->add_option("--t-destab", policy, "canonical or exhaustive")->check(CLI::IsMember({"canonical", "exhaustive"}));
    distance->add_option("--choice-cap", o.choice_cap, "Largest number of destabilizer choices under exhaustive");
    distance->add_option("--threads", o.threads, "Search threads (0 = hardware concurrency)");

    auto *floquet = app.add_subcommand("floquet", "Initialization analysis of a periodic schedule");
    add_input(floquet);
    floquet->add_option("--max-cycles", o.max_cycles, "Cycles to iterate");
    floquet->add_option("--isg-round", o.isg_round, "Round whose ISG the unmask count starts from");

    auto *simulate = app.add_subcommand("simulate", "Inject spacetime errors and check outcome formulas");
    add_input(simulate);
    add_window(simulate);
    simulate->add_option("--errors", o.errors, "Errors as round:pauli items, e.g. 0:X1,2:Z6Z7");
    simulate->add_option("--seed", o.seed, "Seed for sampled symbol values");
    simulate->add_option("--max-weight", o.max_weight, "Largest round-0 error weight in the decoding check");
    simulate->add_option("--cap", o.cap, "Largest weight searched for d_u");

    auto *exporter = app.add_subcommand("export", "Write a builtin code in the file format");
    exporter->add_option("--builtin", o.input.builtin, "Builtin code name")->required();
    exporter->add_option("-o,--output", o.output, "Output path (default: standard output)");

    auto *list = app.add_subcommand("list", "List builtin codes");
    list->add_option_function<std::string>("--format", [&](const std::string &f) { o.text = f == "text"; })
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kValidationFailure;
    }
    o.policy = dyncode::parse_policy(policy);

    CommandOutput result = run_command(app.get_subcommands().front()->get_name(), o);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
