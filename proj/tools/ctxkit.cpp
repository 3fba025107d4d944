// Copyright 2026 The ctxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ctxkit command-line tool.

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctxkit/ctxkit.hpp"

namespace {

using namespace ctxkit;

struct RunConfig {
    std::string command;
    std::string scenario_path;
    std::string state_spec;
    std::string density_path;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t shots = 100000;
    std::string out_path;
    std::string eigenvalues;
    std::size_t paradox = 0;
    std::string event;
};

/// A readable file wins; otherwise "yu-oh" names the bundled scenario.
Scenario resolve_scenario(const std::string &path) {
    if (path == "yu-oh" && !std::filesystem::exists(path)) {
        return yu_oh::scenario();
    }
    return load_scenario(path).with_contexts();
}

std::optional<QuantumState> resolve_state(const RunConfig &cfg) {
    if (!cfg.state_spec.empty() && !cfg.density_path.empty()) {
        throw ValidationError("--state and --density are mutually exclusive");
    }
    if (!cfg.state_spec.empty()) {
        return parse_state(cfg.state_spec);
    }
    if (!cfg.density_path.empty()) {
        return load_density(cfg.density_path);
    }
    return std::nullopt;
}

std::array<Rational, 3> resolve_eigenvalues(const std::string &text) {
    if (text.empty()) {
        return {1, 2, 3};
    }
    Vector v = parse_vector(text, {}, false);
    if (v.size() != 3) {
        throw ValidationError("--eigenvalues needs exactly 3 values");
    }
    return {v[0].re(), v[1].re(), v[2].re()};
}

QuantumState require_state(const std::optional<QuantumState> &st, const std::string &command) {
    if (!st) {
        throw ValidationError(command + " requires --state or --density");
    }
    return *st;
}

/// Paradox entries for one state, or for every contextual pure state.
std::vector<ParadoxEntry> collect_paradoxes(const Scenario &s, const std::vector<KSAssignment> &assignments,
                                            const std::optional<QuantumState> &st,
                                            std::array<Rational, 3> eigenvalues) {
    if (st) {
        return paradox_entries(s, assignments, *st, eigenvalues);
    }
    std::vector<ParadoxEntry> out;
    for (const auto &ray : find_contextual_pure_states(s, assignments).states()) {
        auto entries = paradox_entries(s, assignments, QuantumState::pure(ray), eigenvalues);
        out.insert(out.end(), entries.begin(), entries.end());
    }
    return out;
}

std::string run(const RunConfig &cfg) {
    if (cfg.shots == 0) {
        throw ValidationError("--shots must be positive");
    }
    const bool json = cfg.format == "json";
    Scenario s = resolve_scenario(cfg.scenario_path);
    auto state = resolve_state(cfg);
    auto eigenvalues = resolve_eigenvalues(cfg.eigenvalues);
    if (state && state->dim() != s.dim()) {
        throw ValidationError("dimension mismatch: state has dimension " + std::to_string(state->dim()) +
                              ", scenario has " + std::to_string(s.dim()));
    }

    std::ostringstream text;
    Json doc = {{"schema", report_schema}, {"command", cfg.command}, {"scenario", scenario_json(s)}};

    if (cfg.command == "report") {
        Analysis a = analyze(s, eigenvalues);
        if (json) {
            return full_report_json(a, cfg.shots, cfg.seed).dump(2) + "\n";
        }
        return full_report_text(a, cfg.shots, cfg.seed);
    }

    if (cfg.command == "contexts") {
        auto check = check_distinct_complements(s);
        doc["contexts"] = contexts_json(s, check);
        write_contexts_text(text, s, check);
        return json ? doc.dump(2) + "\n" : text.str();
    }

    auto assignments = enumerate_assignments(s);

    if (cfg.command == "assignments") {
        doc["assignments"] = assignments_json(s, assignments);
        doc["event_lists"] = event_lists_json(s, assignments);
        write_assignments_text(text, s, assignments);
        text << "\n";
        write_event_lists_text(text, s, assignments);
    } else if (cfg.command == "states") {
        auto search = find_contextual_pure_states(s, assignments);
        auto classes = check_witnesses_outside_bases(s, search);
        auto mixed = analyze_mixed_states(s, assignments);
        doc["states"] = states_json(s, search, classes, mixed);
        write_states_text(text, s, search, classes, mixed);
    } else if (cfg.command == "check") {
        QuantumState st = require_state(state, "check");
        doc["check"] = verdict_json(s, assignments, st);
        write_verdict_text(text, s, assignments, st);
    } else if (cfg.command == "paradoxes") {
        auto entries = collect_paradoxes(s, assignments, state, eigenvalues);
        doc["paradoxes"] = paradoxes_json(s, entries);
        write_paradoxes_text(text, s, entries);
    } else if (cfg.command == "observables") {
        auto entries = collect_paradoxes(s, assignments, state, eigenvalues);
        doc["observables"] = observables_json(s, entries);
        write_observables_text(text, s, entries);
        if (!state && is_bundled_yu_oh(s)) {
            std::vector<HardyParadox> ps;
            for (const auto &e : entries) {
                ps.push_back(e.paradox);
            }
            auto table = yu_oh::compare_projector_table(s, ps);
            doc["projector_table"] = table_comparison_json(table);
            text << "\n";
            write_table_comparison_text(text, table);
        }
    } else if (cfg.command == "simulate") {
        QuantumState st = require_state(state, "simulate");
        if ((cfg.paradox != 0) == !cfg.event.empty()) {
            throw ValidationError("simulate requires exactly one of --paradox N or --event LABEL");
        }
        std::vector<Matrix> projectors;
        std::vector<std::string> outcomes;
        if (!cfg.event.empty()) {
            projectors = binary_measurement(s.vector(s.index_of(cfg.event)));
            outcomes = event_outcomes(cfg.event);
        } else {
            auto entries = paradox_entries(s, assignments, st, eigenvalues);
            if (cfg.paradox > entries.size()) {
                throw ValidationError("--paradox " + std::to_string(cfg.paradox) + " out of range: state has " +
                                      std::to_string(entries.size()) + " paradoxes");
            }
            const auto &e = entries[cfg.paradox - 1];
            if (!e.observable) {
                throw ValidationError(e.observable_error);
            }
            projectors.assign(e.observable->projectors.begin(), e.observable->projectors.end());
            outcomes = observable_outcomes(*e.observable);
        }
        auto result = simulate_measurement(st, projectors, cfg.shots, cfg.seed);
        doc["simulation"] = {{"seed", cfg.seed},
                             {"generator", "xoshiro256**"},
                             {"state", state_json(st)},
                             {"result", simulation_json(result, outcomes)}};
        text << "state " << st.str() << ", seed " << cfg.seed << " (xoshiro256**)\n";
        write_simulation_text(text, result, outcomes);
    }
    return json ? doc.dump(2) + "\n" : text.str();
}

void emit(const std::string &out_path, const std::string &content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + out_path + " for writing");
    }
    out << content;
    if (!out.flush()) {
        throw IoError("failed writing " + out_path);
    }
}

}  // namespace

int main(int argc, char **argv) {
    RunConfig cfg;
    CLI::App app{"Logical contextuality and Hardy paradox toolkit"};
    app.footer(
        "Exit codes: 0 success, 1 usage error, 2 parse error, 3 validation error,\n"
        "4 unknown ray label, 5 I/O error.\n"
        "--scenario yu-oh selects the bundled Yu-Oh set when no such file exists.");
    app.add_option("command", cfg.command, "Command to run")
        ->required()
        ->check(CLI::IsMember({"contexts", "assignments", "states", "check", "paradoxes", "observables",
                               "simulate", "report"}));
    app.add_option("--scenario", cfg.scenario_path, "Scenario file, or yu-oh")->required();
    app.add_option("--state", cfg.state_spec, "Pure state \"c1,c2,...\"");
    app.add_option("--density", cfg.density_path, "Density matrix file");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Sampler seed (default 0)");
    app.add_option("--shots", cfg.shots, "Number of simulated shots (default 100000)");
    app.add_option("--out", cfg.out_path, "Write output to FILE instead of standard output");
    app.add_option("--eigenvalues", cfg.eigenvalues, "Observable eigenvalues \"a1,a2,a3\" (default 1,2,3)");
    app.add_option("--paradox", cfg.paradox, "simulate: paradox number of the given state (1-based)")
        ->check(CLI::PositiveNumber);
    app.add_option("--event", cfg.event, "simulate: measure {P_v, I - P_v} for ray LABEL");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "ctxkit: usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        emit(cfg.out_path, run(cfg));
    } catch (const Error &e) {
        std::cerr << "ctxkit: error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "ctxkit: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
