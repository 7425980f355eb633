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

#include "cli/commands.h"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "cli/report.h"
#include "dyncode/classification.h"
#include "dyncode/code_io.h"
#include "dyncode/errors.h"
#include "dyncode/floquet.h"
#include "dyncode/stabilizer.h"

namespace dyncode::cli {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CodeFormatError(path, 0, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string bits(const BitVector &v) {
    std::string out;
    for (size_t i = 0; i < v.size(); i++) {
        out.push_back(v[i] ? '1' : '0');
    }
    return out;
}

Json ops_json(const std::vector<PauliOperator> &ops) {
    Json out = Json::array();
    for (const auto &p : ops) {
        out.push_back(p.sparse_str());
    }
    return out;
}

size_t default_window(const LoadedInput &in, const Options &o, size_t isg_round) {
    if (o.window) {
        return *o.window;
    }
    if (in.spec) {
        return in.spec->window;
    }
    const DynamicalCode &c = in.code;
    if (c.periodic) {
        return c.cycle_length();
    }
    return c.num_rounds() > isg_round ? c.num_rounds() - isg_round : 0;
}

size_t default_isg_round(const LoadedInput &in, const Options &o) {
    if (o.isg_round) {
        return *o.isg_round;
    }
    return in.spec ? in.spec->isg_round : 0;
}

void echo_input(ReportDocument &doc, const LoadedInput &in) {
    doc.source = in.source;
    doc.input_sha256 = in.sha256;
}

// Reference values of a builtin code, each next to the computed value for the same key if any.
void attach_references(ReportDocument &doc, const LoadedInput &in, const std::map<std::string, long> &computed) {
    if (!in.spec) {
        return;
    }
    for (const auto &ref : in.spec->references) {
        ReferenceCheck check{ref, std::nullopt};
        auto it = computed.find(ref.key);
        if (it != computed.end()) {
            check.computed = it->second;
        }
        doc.references.push_back(check);
    }
}

int reference_exit(const ReportDocument &doc) {
    for (const auto &check : doc.references) {
        if (check.computed && *check.computed != check.reference.value) {
            return kInvariantViolation;
        }
    }
    return kOk;
}

std::string reference_text(const ReportDocument &doc) {
    std::ostringstream out;
    for (const auto &check : doc.references) {
        out << "reference " << check.reference.key << " = " << check.reference.value << " ("
            << provenance_name(check.reference.provenance) << ")";
        if (check.computed) {
            out << ", computed " << *check.computed << (*check.computed == check.reference.value ? " ok" : " MISMATCH");
        }
        out << "\n";
    }
    return out.str();
}

Json distance_json(const DistanceResult &d) {
    Json out = Json::object();
    switch (d.status) {
        case DistanceResult::Status::Found:
            out["status"] = "found";
            out["distance"] = number(static_cast<long>(d.value));
            break;
        case DistanceResult::Status::ExceedsCap:
            out["status"] = "exceeds-cap";
            out["cap"] = number(static_cast<long>(d.value));
            break;
        case DistanceResult::Status::Undefined:
            out["status"] = "undefined";
            break;
    }
    out["witness"] = d.witness ? Json(d.witness->sparse_str()) : Json(nullptr);
    return out;
}

Json classification_json(const ClassificationReport &r) {
    Json out = Json::object();
    out["n"] = number(static_cast<long>(r.n));
    out["isg_round"] = number(static_cast<long>(r.isg_round));
    out["window"] = number(static_cast<long>(r.window));
    out["s0"] = ops_json(r.s0);

    Json ms = Json::array();
    for (size_t k = 0; k < r.measurements.size(); k++) {
        const auto &rec = r.measurements[k];
        ms.push_back({{"symbol", OutcomeSymbol{SymbolKind::Measurement, static_cast<uint32_t>(k)}.str()},
                      {"round", number(static_cast<long>(rec.round))},
                      {"op", rec.op.sparse_str()},
                      {"label", rec.label}});
    }
    out["measurements"] = std::move(ms);

    Json u = Json::array();
    for (const auto &s : r.unmasked) {
        u.push_back({{"op", s.op.sparse_str()}, {"element", bits(s.element)}, {"syndrome", s.syndrome.str()}});
    }
    Json t = Json::array();
    for (const auto &s : r.temporarily_masked) {
        t.push_back({{"op", s.op.sparse_str()}, {"element", bits(s.element)}});
    }
    Json p = Json::array();
    for (const auto &s : r.permanently_masked) {
        p.push_back({{"op", s.op.sparse_str()}, {"element", bits(s.element)}, {"destabilizer", s.destabilizer.sparse_str()}});
    }
    out["counts"] = {{"num_u", number(static_cast<long>(r.unmasked.size()))},
                     {"num_t", number(static_cast<long>(r.temporarily_masked.size()))},
                     {"num_p", number(static_cast<long>(r.permanently_masked.size()))}};
    out["unmasked"] = std::move(u);
    out["temporarily_masked"] = std::move(t);
    out["permanently_masked"] = std::move(p);

    Json classes = Json::array();
    for (size_t i = 0; i < r.generator_classes.size(); i++) {
        classes.push_back({{"generator", i < r.s0_labels.size() ? r.s0_labels[i] : "s" + std::to_string(i)},
                           {"op", r.s0[i].sparse_str()},
                           {"class", stabilizer_class_name(r.generator_classes[i])}});
    }
    out["generator_classes"] = std::move(classes);
    out["diagnostics"] = r.diagnostics;
    return out;
}

std::string classification_text(const ClassificationReport &r) {
    std::ostringstream out;
    out << "window " << r.window << " after round " << r.isg_round << ", n = " << r.n << ", |S0| = " << r.s0.size() << "\n";
    out << "U (" << r.unmasked.size() << ")\n";
    for (const auto &s : r.unmasked) {
        out << "  " << s.op.sparse_str() << "  =  " << s.syndrome.str() << "\n";
    }
    out << "T (" << r.temporarily_masked.size() << ")\n";
    for (const auto &s : r.temporarily_masked) {
        out << "  " << s.op.sparse_str() << "\n";
    }
    out << "P (" << r.permanently_masked.size() << ") with destabilizers K\n";
    for (const auto &s : r.permanently_masked) {
        out << "  " << s.op.sparse_str() << "  |  " << s.destabilizer.sparse_str() << "\n";
    }
    for (const auto &d : r.diagnostics) {
        out << "note: " << d << "\n";
    }
    return out.str();
}

CommandOutput finish(const ReportDocument &doc, const Options &o, const std::string &text, int exit_code) {
    CommandOutput out;
    out.exit_code = exit_code;
    out.out = o.text ? text + reference_text(doc) : doc.dump();
    return out;
}

// Symbols of base kinds get seeded bits; every injected error is taken to have happened.
class SeededAssignment {
   public:
    SeededAssignment(uint64_t seed, size_t num_s0, size_t num_logicals, size_t num_random) {
        std::mt19937_64 rng(seed);
        for (size_t i = 0; i < num_s0; i++) {
            stabilizers_.push_back(rng() & 1);
        }
        for (size_t i = 0; i < num_logicals; i++) {
            logicals_.push_back(rng() & 1);
        }
        for (size_t i = 0; i < num_random; i++) {
            random_.push_back(rng() & 1);
        }
    }

    // Logical symbol 0 stands for logical `logical` of the code.
    bool operator()(const OutcomeSymbol &s, size_t logical = 0) const {
        switch (s.kind) {
            case SymbolKind::InitialStabilizer:
                return stabilizers_.at(s.index);
            case SymbolKind::InitialLogical:
                return logicals_.at(logical + s.index);
            case SymbolKind::RandomBit:
                return random_.at(s.index);
            case SymbolKind::ErrorSyndrome:
                return true;
            case SymbolKind::Measurement:
                break;
        }
        throw InvariantViolation("measurement symbol in a base assignment");
    }

   private:
    std::vector<bool> stabilizers_;
    std::vector<bool> logicals_;
    std::vector<bool> random_;
};

}  // namespace

LoadedInput load_input(const InputSpec &input) {
    if (input.file.empty() == input.builtin.empty()) {
        throw std::invalid_argument("give exactly one of a code file or --builtin NAME");
    }
    LoadedInput out;
    if (!input.builtin.empty()) {
        out.spec = builtin_code(input.builtin);
        out.code = out.spec->code;
        out.source = "builtin:" + input.builtin;
        out.sha256 = sha256_hex(dump_code(out.code));
    } else {
        std::string text = read_file(input.file);
        out.code = parse_code(text, input.file);
        out.source = input.file;
        out.sha256 = sha256_hex(text);
    }
    return out;
}

CommandOutput cmd_validate(const Options &o) {
    ReportDocument doc;
    doc.command = "validate";
    Json diags = Json::array();
    std::ostringstream text;
    try {
        LoadedInput in = load_input(o.input);
        echo_input(doc, in);
        for (const auto &d : validate_code(in.code)) {
            Json item = {{"kind", diagnostic_kind_name(d.kind)}, {"message", d.message}};
            item["round"] = d.round < 0 ? Json(nullptr) : number(d.round);
            item["first"] = d.first < 0 ? Json(nullptr) : number(d.first);
            item["second"] = d.second < 0 ? Json(nullptr) : number(d.second);
            diags.push_back(std::move(item));
            text << diagnostic_kind_name(d.kind) << ": " << d.message << "\n";
        }
        doc.payload["n"] = number(static_cast<long>(in.code.n));
        doc.payload["num_s0"] = number(static_cast<long>(in.code.s0.size()));
        doc.payload["num_rounds"] = number(static_cast<long>(in.code.num_rounds()));
    } catch (const CodeFormatError &e) {
        doc.source = o.input.file.empty() ? "builtin:" + o.input.builtin : o.input.file;
        if (!o.input.file.empty() && e.line() != 0) {
            doc.input_sha256 = sha256_hex(read_file(o.input.file));
        }
        Json item = {{"kind", "parse"}, {"message", e.what()}};
        item["line"] = e.line() ? number(static_cast<long>(e.line())) : Json(nullptr);
        diags.push_back(std::move(item));
        text << "parse: " << e.what() << "\n";
    }
    bool clean = diags.empty();
    doc.payload["clean"] = clean;
    doc.payload["diagnostics"] = std::move(diags);
    if (clean) {
        text << "ok\n";
    }
    return finish(doc, o, text.str(), clean ? kOk : kValidationFailure);
}

CommandOutput cmd_classify(const Options &o) {
    LoadedInput in = load_input(o.input);
    require_valid(in.code);
    size_t isg = default_isg_round(in, o);
    size_t window = default_window(in, o, isg);

    ReportDocument doc;
    doc.command = "classify";
    echo_input(doc, in);
    doc.parameters = {{"window", std::to_string(window)}, {"isg_round", std::to_string(isg)}};

    ClassificationReport r = run_classification(in.code, window, isg);
    doc.payload = classification_json(r);

    // Shortest prefix of the window that already leaves nothing temporarily masked.
    std::optional<size_t> unmask_window;
    if (r.temporarily_masked.empty()) {
        for (size_t w = 0; w <= window; w++) {
            if (run_classification(in.code, w, isg).temporarily_masked.empty()) {
                unmask_window = w;
                break;
            }
        }
    }
    doc.payload["unmask_window"] = optional_number(unmask_window);

    std::map<std::string, long> computed = {
        {"n", static_cast<long>(r.n)},
        {"num_u", static_cast<long>(r.unmasked.size())},
        {"num_t", static_cast<long>(r.temporarily_masked.size())},
        {"num_p", static_cast<long>(r.permanently_masked.size())},
    };
    if (unmask_window) {
        computed["unmask_window"] = static_cast<long>(*unmask_window);
    }
    attach_references(doc, in, computed);
    return finish(doc, o, classification_text(r), reference_exit(doc));
}

CommandOutput cmd_distance(const Options &o) {
    LoadedInput in = load_input(o.input);
    require_valid(in.code);
    size_t isg = default_isg_round(in, o);
    size_t window = default_window(in, o, isg);

    ReportDocument doc;
    doc.command = "distance";
    echo_input(doc, in);
    doc.parameters = {{"window", std::to_string(window)},
                      {"isg_round", std::to_string(isg)},
                      {"cap", std::to_string(o.cap)},
                      {"t_destab", policy_name(o.policy)}};

    ClassificationReport r = run_classification(in.code, window, isg);
    DistanceSummary s = distance_summary(r, o.policy, o.cap, o.choice_cap);
    doc.payload["d_u"] = distance_json(s.d_u);
    doc.payload["d_subsystem"] = distance_json(s.d_subsystem);
    doc.payload["d_isg"] = distance_json(s.d_isg);
    doc.payload["t_destabilizers"] = ops_json(s.t_destabilizers);
    doc.payload["counts"] = {{"num_u", number(static_cast<long>(r.unmasked.size()))},
                             {"num_t", number(static_cast<long>(r.temporarily_masked.size()))},
                             {"num_p", number(static_cast<long>(r.permanently_masked.size()))}};

    std::map<std::string, long> computed;
    for (auto [key, d] : {std::pair{"d_u", &s.d_u}, std::pair{"d_subsystem", &s.d_subsystem}, std::pair{"d_isg", &s.d_isg}}) {
        if (d->found()) {
            computed[key] = static_cast<long>(d->value);
        }
    }
    computed["n"] = static_cast<long>(r.n);
    computed["num_u"] = static_cast<long>(r.unmasked.size());
    computed["num_t"] = static_cast<long>(r.temporarily_masked.size());
    computed["num_p"] = static_cast<long>(r.permanently_masked.size());
    attach_references(doc, in, computed);

    std::ostringstream text;
    text << "d_u         " << s.d_u.str() << "\n";
    text << "d_subsystem " << s.d_subsystem.str() << "\n";
    text << "d_ISG       " << s.d_isg.str() << "\n";
    for (const auto &k : s.t_destabilizers) {
        text << "T destabilizer " << k.sparse_str() << "\n";
    }

    int code = reference_exit(doc);
    if (code == kOk) {
        for (const auto *d : {&s.d_u, &s.d_subsystem, &s.d_isg}) {
            if (d->status == DistanceResult::Status::ExceedsCap) {
                code = kCapExceeded;
            }
        }
    }
    return finish(doc, o, text.str(), code);
}

CommandOutput cmd_floquet(const Options &o) {
    LoadedInput in = load_input(o.input);
    require_valid(in.code);
    if (!in.code.periodic) {
        throw std::invalid_argument("floquet analysis needs a periodic schedule");
    }

    ReportDocument doc;
    doc.command = "floquet";
    echo_input(doc, in);

    CycleTrace trace = iterate_cycles(in.code, o.max_cycles);
    auto depth = initialization_depth(trace);
    // The inclusion and growth properties start from the maximally mixed state, so
    // they are checked on the cycle alone with any prefix dropped.
    DynamicalCode cycle_only = in.code;
    cycle_only.rounds.erase(cycle_only.rounds.begin(), cycle_only.rounds.begin() + static_cast<long>(in.code.prefix_rounds));
    cycle_only.prefix_rounds = 0;
    CycleTrace bare = iterate_cycles(cycle_only, o.max_cycles);
    auto violations = check_subset_monotonicity(bare);
    GrowthReport growth = growth_accounting(bare);

    size_t cycle_len = in.code.cycle_length();
    size_t isg = o.isg_round ? *o.isg_round : in.code.prefix_rounds + (depth ? *depth : 0) * cycle_len;
    doc.parameters = {{"max_cycles", std::to_string(o.max_cycles)}, {"isg_round", std::to_string(isg)}};

    Json end_ranks = Json::array();
    for (size_t j = 0; j <= trace.num_cycles(); j++) {
        end_ranks.push_back(number(static_cast<long>(trace.end_rank(j))));
    }
    Json mono = Json::array();
    for (const auto &v : violations) {
        mono.push_back({{"cycle", number(static_cast<long>(v.cycle))}, {"index", number(static_cast<long>(v.index))}});
    }
    Json deltas = Json::array();
    for (size_t d : growth.deltas) {
        deltas.push_back(number(static_cast<long>(d)));
    }
    doc.payload["cycle_length"] = number(static_cast<long>(cycle_len));
    doc.payload["prefix_rounds"] = number(static_cast<long>(in.code.prefix_rounds));
    doc.payload["cycles_run"] = number(static_cast<long>(trace.num_cycles()));
    doc.payload["initialization_depth"] = optional_number(depth);
    doc.payload["fixpoint_cycle"] = optional_number(trace.fixpoint);
    doc.payload["end_ranks"] = std::move(end_ranks);
    doc.payload["monotonic"] = violations.empty();
    doc.payload["monotonicity_violations"] = std::move(mono);
    doc.payload["growth_deltas"] = std::move(deltas);
    doc.payload["growth_ok"] = growth.ok();
    doc.payload["growth_violations"] = growth.violations;

    auto unmask = unmask_cycle_count(in.code, isg, o.max_cycles);
    if (unmask) {
        doc.payload["unmask"] = {{"cycles", number(static_cast<long>(unmask->cycles))},
                                 {"measurements", number(static_cast<long>(unmask->measurements))}};
    } else {
        doc.payload["unmask"] = nullptr;
    }

    std::map<std::string, long> computed;
    if (depth) {
        computed["initialization_depth"] = static_cast<long>(*depth);
    }
    computed["n"] = static_cast<long>(in.code.n);
    attach_references(doc, in, computed);

    std::ostringstream text;
    text << "cycle length " << cycle_len << ", prefix " << in.code.prefix_rounds << " rounds\n";
    text << "initialization depth " << (depth ? std::to_string(*depth) : "not reached") << "\n";
    text << "end-of-cycle ranks";
    for (size_t j = 0; j <= trace.num_cycles(); j++) {
        text << " " << trace.end_rank(j);
    }
    text << "\nmonotonicity " << (violations.empty() ? "holds" : "VIOLATED") << "\n";
    text << "growth accounting " << (growth.ok() ? "holds" : "VIOLATED") << "\n";
    if (unmask) {
        text << "everything unmasked after " << unmask->cycles << " cycles (" << unmask->measurements
             << " measurements) from round " << isg << "\n";
    }

    int code = reference_exit(doc);
    if (code == kOk && (!violations.empty() || !growth.ok())) {
        code = kInvariantViolation;
    }
    return finish(doc, o, text.str(), code);
}

CommandOutput cmd_simulate(const Options &o) {
    LoadedInput in = load_input(o.input);
    require_valid(in.code);
    const size_t n = in.code.n;
    size_t isg = default_isg_round(in, o);
    size_t window_len = default_window(in, o, isg);

    SpacetimeError error = SpacetimeError::parse(o.errors, n);
    if (error.last_round() > window_len) {
        throw std::invalid_argument(
            "error at round " + std::to_string(error.last_round()) + " lies past the window of " + std::to_string(window_len));
    }

    ReportDocument doc;
    doc.command = "simulate";
    echo_input(doc, in);
    doc.parameters = {{"window", std::to_string(window_len)},
                      {"isg_round", std::to_string(isg)},
                      {"errors", error.str()},
                      {"seed", std::to_string(o.seed)},
                      {"cap", std::to_string(o.cap)}};

    ClassificationReport r = run_classification(in.code, window_len, isg);
    Window window = make_window(in.code, window_len, isg);
    SpacetimeRun run = simulate_spacetime(window, n, error);
    SeededAssignment base(o.seed, window.s0.size(), in.code.logicals.size(), window.measurements.size() + 1);
    auto assign = [&](const OutcomeSymbol &s) { return base(s); };

    Json outcomes = Json::array();
    for (size_t k = 0; k < run.outcomes.size(); k++) {
        outcomes.push_back({{"symbol", OutcomeSymbol{SymbolKind::Measurement, static_cast<uint32_t>(k)}.str()},
                            {"expression", run.outcomes[k].str()},
                            {"sampled", run.outcomes[k].evaluate(assign) ? "-1" : "+1"}});
    }
    doc.payload["measurement_outcomes"] = std::move(outcomes);

    std::ostringstream text;
    text << "error " << (error.by_round.empty() ? "none" : error.str()) << "\n";

    // Each unmasked stabilizer's formula, once with recorded outcomes substituted,
    // must leave only the error symbols: that flip is the observed syndrome bit.
    Json syndromes = Json::array();
    for (const auto &u : r.unmasked) {
        auto decomposition = decomposition_from_formula(u.syndrome, r.measurements, isg, window_len, n);
        bool predicted = syndrome_of_spacetime_error(error, decomposition, u.op);
        OutcomeExpr observed = u.syndrome.substitute([&](const OutcomeSymbol &s) { return run.outcomes.at(s.index); });
        for (size_t i : u.element.ones()) {
            observed *= OutcomeExpr::symbol(SymbolKind::InitialStabilizer, static_cast<uint32_t>(i));
        }
        OutcomeExpr rest = observed.without(SymbolKind::ErrorSyndrome);
        if (!rest.is_constant() || rest.sign()) {
            throw InvariantViolation("syndrome of " + u.op.sparse_str() + " depends on " + rest.str());
        }
        bool flip = observed.evaluate(assign);
        if (flip != predicted) {
            throw InvariantViolation("spacetime syndrome of " + u.op.sparse_str() + " disagrees with simulation");
        }
        syndromes.push_back({{"stabilizer", u.op.sparse_str()}, {"formula", u.syndrome.str()}, {"flipped", flip}});
        text << "syndrome " << u.op.sparse_str() << " " << (flip ? "flipped" : "+") << "\n";
    }
    doc.payload["syndromes"] = std::move(syndromes);

    Json logicals = Json::array();
    for (size_t j = 0; j < in.code.logicals.size(); j++) {
        const PauliOperator &L = in.code.logicals[j];
        std::string label = j < in.code.logical_labels.size() ? in.code.logical_labels[j] : "L" + std::to_string(j);
        Json item = {{"logical", label}, {"op", L.sparse_str()}};
        try {
            LogicalTrace trace = trace_logical(window, n, L);
            SpacetimeRun forward = simulate_spacetime(window, n, error, {L});
            auto base_j = [&](const OutcomeSymbol &s) { return base(s, j); };
            auto recorded = [&](const OutcomeSymbol &s) {
                return s.kind == SymbolKind::Measurement ? forward.outcomes.at(s.index).evaluate(base_j) : base_j(s);
            };
            bool from_formula = logical_outcome(trace, error, recorded);
            bool simulated = forward.final_state.logicals().front().outcome.evaluate(base_j);
            bool error_free = trace.outcome.evaluate(base_j);
            if (from_formula != simulated) {
                throw InvariantViolation("logical outcome formula disagrees with simulation for " + label);
            }
            item["final"] = trace.final.sparse_str();
            item["error_free_outcome"] = trace.outcome.str();
            item["flipped"] = from_formula != error_free;
            text << "logical " << label << " -> " << trace.final.sparse_str() << (from_formula != error_free ? " flipped" : " kept")
                 << "\n";
        } catch (const LogicalMeasurementError &e) {
            item["final"] = nullptr;
            item["note"] = e.what();
        }
        logicals.push_back(std::move(item));
    }
    doc.payload["logicals"] = std::move(logicals);

    // Decoding check for round-0 errors up to the weight the unmasked distance guarantees.
    std::vector<GaugeGroup> gauges = build_gauge_group(r, TDestabPolicy::Canonical);
    DistanceResult d_u = unmasked_distance(r, gauges.front(), o.cap);
    size_t w = 1;
    if (o.max_weight) {
        w = *o.max_weight;
    } else if (d_u.found()) {
        w = (d_u.value - 1) / 2;
    } else if (d_u.status == DistanceResult::Status::ExceedsCap) {
        w = d_u.value / 2;
    }
    DecodingVerdict verdict = verify_round0_decoding(r, gauges.front(), w, d_u);
    Json v = Json::object();
    v["d_u"] = distance_json(d_u);
    v["max_weight"] = number(static_cast<long>(verdict.max_weight));
    v["num_errors"] = number(static_cast<long>(verdict.num_errors));
    v["num_syndromes"] = number(static_cast<long>(verdict.num_syndromes));
    v["within_distance"] = verdict.within_distance;
    v["gauge_equivalent_pairs"] = number(static_cast<long>(verdict.gauge_equivalent));
    v["decodable"] = verdict.ok();
    if (verdict.violation) {
        v["violation"] = {verdict.violation->first.sparse_str(), verdict.violation->second.sparse_str()};
    } else {
        v["violation"] = nullptr;
    }
    doc.payload["decoding"] = std::move(v);
    text << "round-0 errors of weight <= " << w << ": " << (verdict.ok() ? "decodable" : "NOT decodable") << " ("
         << verdict.num_errors << " errors, " << verdict.num_syndromes << " syndromes)\n";

    attach_references(doc, in, {});
    if (verdict.violation && verdict.within_distance) {
        throw InvariantViolation(
            "errors " + verdict.violation->first.sparse_str() + " and " + verdict.violation->second.sparse_str() +
            " share a syndrome below the unmasked distance");
    }
    return finish(doc, o, text.str(), kOk);
}

CommandOutput cmd_export(const Options &o) {
    if (o.input.builtin.empty()) {
        throw std::invalid_argument("export needs --builtin NAME");
    }
    std::string text = dump_code(builtin_code(o.input.builtin).code);
    CommandOutput out;
    if (o.output.empty()) {
        out.out = text;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + o.output);
        }
        f << text;
    }
    return out;
}

CommandOutput cmd_list(const Options &o) {
    Json items = Json::array();
    std::ostringstream text;
    for (const auto &spec : builtin_codes()) {
        items.push_back({{"name", spec.name}, {"description", spec.description}, {"n", number(static_cast<long>(spec.code.n))}});
        text << spec.name << "  " << spec.description << "\n";
    }
    CommandOutput out;
    out.out = o.text ? text.str() : items.dump(2) + "\n";
    return out;
}

CommandOutput run_command(const std::string &name, const Options &options) {
    static const std::map<std::string, CommandOutput (*)(const Options &)> commands = {
        {"validate", cmd_validate},
        {"classify", cmd_classify},
        {"distance", cmd_distance},
        {"floquet", cmd_floquet},
        {"simulate", cmd_simulate},
        {"export", cmd_export},
        {"list", cmd_list},
    };
    auto fail = [&](int code, const std::string &kind, const std::string &message) {
        CommandOutput out;
        out.exit_code = code;
        out.out = error_document(name, code, kind, message);
        out.err = "error: " + message + "\n";
        return out;
    };
    auto it = commands.find(name);
    if (it == commands.end()) {
        return fail(kValidationFailure, "usage", "unknown command " + name);
    }
    try {
        return it->second(options);
    } catch (const InvariantViolation &e) {
        return fail(kInvariantViolation, "invariant-violation", e.what());
    } catch (const std::length_error &e) {
        return fail(kCapExceeded, "cap-exceeded", e.what());
    } catch (const std::invalid_argument &e) {
        return fail(kValidationFailure, "invalid-input", e.what());
    } catch (const LogicalMeasurementError &e) {
        return fail(kValidationFailure, "logical-measurement", e.what());
    } catch (const std::out_of_range &e) {
        return fail(kValidationFailure, "invalid-input", e.what());
    } catch (const std::exception &e) {
        return fail(kInvariantViolation, "internal", e.what());
    }
}

}  // namespace dyncode::cli
