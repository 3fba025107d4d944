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

// Text and JSON rendering of analysis results. Output depends only on the
// inputs, so repeated runs are byte-identical.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ctxkit/assignments.hpp"
#include "ctxkit/contextuality.hpp"
#include "ctxkit/hardy.hpp"
#include "ctxkit/sampler.hpp"
#include "ctxkit/scenario.hpp"
#include "ctxkit/yu_oh.hpp"
#include "json.hpp"

namespace ctxkit {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view report_schema = "ctxkit.report/1";

/// True iff `s` has exactly the bundled Yu-Oh labels and rays.
inline bool is_bundled_yu_oh(const Scenario &s) {
    static const Scenario ref = parse_scenario(yu_oh::scenario_text);
    if (s.size() != ref.size() || s.dim() != ref.dim()) {
        return false;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.label(i) != ref.label(i) || !(s.vector(i) == ref.vector(i))) {
            return false;
        }
    }
    return true;
}

struct ParadoxEntry {
    HardyParadox paradox;
    std::optional<int> published;
    std::optional<WitnessObservable> observable;
    std::string observable_error;
    ObservableCheck check;
    ContradictionReplay replay;
};

/// Everything the full report shows.
struct Analysis {
    Scenario scenario;
    std::vector<KSAssignment> assignments;
    ComplementCheck complements;
    PureStateSearch search;
    WitnessClassCheck witness_classes;
    MixedAnalysisReport mixed;
    std::vector<ParadoxEntry> paradoxes;
    std::optional<yu_oh::ProjectorTableComparison> table;
};

inline std::vector<ParadoxEntry> paradox_entries(const Scenario &s, std::span<const KSAssignment> assignments,
                                                 const QuantumState &state, std::array<Rational, 3> eigenvalues) {
    std::vector<ParadoxEntry> out;
    bool bundled = is_bundled_yu_oh(s);
    for (auto &p : derive_paradoxes(s, assignments, state).paradoxes) {
        ParadoxEntry e{p, std::nullopt, std::nullopt, {}, {}, replay_contradiction(assignments, p)};
        if (bundled) {
            e.published = yu_oh::published_number(s, p);
        }
        try {
            e.observable = build_witness_observable(s, p, eigenvalues);
            e.check = verify_observable(p, *e.observable);
        } catch (const ValidationError &err) {
            e.observable_error = err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

inline Analysis analyze(const Scenario &input, std::array<Rational, 3> eigenvalues = {1, 2, 3}) {
    Scenario s = input.has_contexts() ? input : input.with_contexts();
    Analysis a{s, enumerate_assignments(s), check_distinct_complements(s), {}, {}, {}, {}, std::nullopt};
    a.search = find_contextual_pure_states(s, a.assignments);
    a.witness_classes = check_witnesses_outside_bases(s, a.search);
    a.mixed = analyze_mixed_states(s, a.assignments);
    for (const auto &st : a.search.states()) {
        auto entries = paradox_entries(s, a.assignments, QuantumState::pure(st), eigenvalues);
        a.paradoxes.insert(a.paradoxes.end(), entries.begin(), entries.end());
    }
    if (is_bundled_yu_oh(s)) {
        std::vector<HardyParadox> ps;
        for (const auto &e : a.paradoxes) {
            ps.push_back(e.paradox);
        }
        a.table = yu_oh::compare_projector_table(s, ps);
    }
    return a;
}

// ---- shared formatting ----

/// "vA" -> "v_A"; other labels unchanged.
inline std::string subscript_label(const std::string &label) {
    if (label.size() > 1 && label[0] == 'v') {
        return "v_" + label.substr(1);
    }
    return label;
}

/// `ρ(v_A)>0, ρ(v_5)=ρ(v_6)=0, SP=1/9 (11.1%)`
inline std::string format_conditions(const Scenario &s, const HardyParadox &p) {
    std::string out = "ρ(" + subscript_label(s.label(p.witness)) + ")>0, ";
    for (auto z : p.zero_set) {
        out += "ρ(" + subscript_label(s.label(z)) + ")=";
    }
    return out + "0, SP=" + to_string(p.sp) + " (" + format_percent(p.sp) + ")";
}

/// `λ2: 1000110001000 support={v1,v5,v6,vA}`
inline std::string format_assignment_line(const Scenario &s, const KSAssignment &a, std::size_t number) {
    return "λ" + std::to_string(number) + ": " + a.bitstring() + " support=" + format_labels(s, a.support());
}

inline std::string format_event_refs(std::span<const std::size_t> events) {
    std::string out = "{";
    for (std::size_t i = 0; i < events.size(); ++i) {
        out += (i ? ",λ" : "λ") + std::to_string(events[i] + 1);
    }
    return out + "}";
}

inline Json matrix_json(const Matrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json labels_json(const Scenario &s, const std::vector<std::size_t> &indices) {
    Json out = Json::array();
    for (auto i : indices) {
        out.push_back(s.label(i));
    }
    return out;
}

inline Json state_json(const QuantumState &st) {
    if (st.is_pure()) {
        return Json{{"kind", "pure"}, {"ray", st.ray().str()}};
    }
    return Json{{"kind", "density"}, {"matrix", matrix_json(st.density_matrix().matrix())}};
}

// ---- sections: text ----

inline void write_scenario_text(std::ostream &os, const Scenario &s) {
    os << "scenario " << s.name() << " dim " << s.dim() << " field " << to_string(s.field()) << ", " << s.size()
       << " rays\n";
    for (const auto &r : s.rays()) {
        os << "  " << r.label << " " << r.vector.str() << "\n";
    }
}

inline void write_contexts_text(std::ostream &os, const Scenario &s, const ComplementCheck &check) {
    std::size_t bases = s.basis_contexts().size();
    os << "contexts (" << s.contexts().size() << ": " << bases << " basis, " << s.contexts().size() - bases
       << " deficient)\n";
    for (const auto &c : s.contexts()) {
        os << "  " << format_labels(s, c.members);
        if (c.kind == ContextKind::basis) {
            os << " | basis\n";
            continue;
        }
        os << " | complement";
        for (const auto &v : c.complement) {
            os << " " << v.str();
        }
        os << "\n";
    }
    os << "complements distinct: " << (check.distinct ? "yes" : "no") << "\n";
    for (const auto &col : check.collisions) {
        os << "  collision " << format_labels(s, s.contexts()[col.first].members) << " "
           << format_labels(s, s.contexts()[col.second].members) << "\n";
    }
}

inline void write_assignments_text(std::ostream &os, const Scenario &s, std::span<const KSAssignment> assignments) {
    os << "assignments (" << assignments.size() << ")\n";
    os << "  order:";
    for (const auto &r : s.rays()) {
        os << " " << r.label;
    }
    os << "\n";
    for (std::size_t k = 0; k < assignments.size(); ++k) {
        os << "  " << format_assignment_line(s, assignments[k], k + 1) << "\n";
    }
}

inline std::vector<std::size_t> event_indices(std::span<const KSAssignment> assignments, std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < assignments.size(); ++e) {
        if (assignments[e].contains(v)) {
            out.push_back(e);
        }
    }
    return out;
}

/// S(v) for rays in no Basis context.
inline void write_event_lists_text(std::ostream &os, const Scenario &s, std::span<const KSAssignment> assignments) {
    auto membership = classify_rays(s);
    os << "global events containing rays outside every basis\n";
    for (std::size_t v = 0; v < s.size(); ++v) {
        if (membership[v] != 0) {
            continue;
        }
        auto events = event_indices(assignments, v);
        os << "  S(" << s.label(v) << ") = " << format_event_refs(events);
        for (auto e : events) {
            os << " " << format_labels(s, assignments[e].support());
        }
        os << "\n";
    }
}

inline void write_states_text(std::ostream &os, const Scenario &s, const PureStateSearch &search,
                              const WitnessClassCheck &classes, const MixedAnalysisReport &mixed) {
    auto states = search.states();
    os << "contextual pure states (" << states.size() << ")\n";
    for (const auto &st : states) {
        os << "  " << st.str() << " witnesses";
        for (const auto &e : search.entries) {
            if (e.state == st) {
                os << " " << s.label(e.witness) << (e.confirmed ? "" : "(unconfirmed)");
            }
        }
        os << "\n";
    }
    os << "witnesses outside every basis: " << (classes.ok ? "yes" : "no") << "\n";
    for (auto w : classes.offending) {
        os << "  in a basis: " << s.label(w) << "\n";
    }
    os << "undetermined families: " << search.undetermined.size() << "\n";
    for (const auto &f : search.undetermined) {
        os << "  witness " << s.label(f.witness) << " selection " << format_labels(s, f.selection) << " span";
        for (const auto &v : f.basis) {
            os << " " << v.str();
        }
        os << "\n";
    }
    os << "mixed states: "
       << (mixed.no_mixed_states ? "none logically contextual" : "not excluded by the rank test") << "\n";
    for (const auto &w : mixed.witnesses) {
        os << "  " << s.label(w.witness) << ": " << w.event_count << " events, " << w.selection_count.str()
           << " selections in " << w.classes.size() << " span classes, min rank " << w.min_rank() << ", max nullity " << w.max_nullity()
           << ", common rays " << format_labels(s, w.common_rays) << "\n";
    }
}

inline void write_verdict_text(std::ostream &os, const Scenario &s, std::span<const KSAssignment> assignments,
                               const QuantumState &state) {
    auto model = possibilistic_model(s, state);
    auto verdict = is_logically_contextual(s, assignments, state);
    bool oracle = noncontextuality_oracle(s, assignments, state);
    os << "state " << state.str() << "\n";
    os << "probabilities";
    for (std::size_t v = 0; v < s.size(); ++v) {
        os << " " << s.label(v) << "=" << to_string(model.probabilities[v]);
    }
    os << "\n";
    os << "verdict: " << (verdict.contextual ? "contextual" : "not contextual") << "\n";
    if (verdict.contextual) {
        os << "witness: " << s.label(*verdict.witness) << "\n";
        os << "blockers:\n";
        for (const auto &b : verdict.blockers) {
            os << "  λ" << b.event + 1 << " " << format_labels(s, assignments[b.event].support()) << ": "
               << s.label(b.ray) << "\n";
        }
    }
    os << "noncontextual model exists: " << (oracle ? "yes" : "no") << "\n";
}

inline void write_paradoxes_text(std::ostream &os, const Scenario &s, std::span<const ParadoxEntry> entries) {
    os << "paradoxes (" << entries.size() << ")\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        os << "  paradox " << i + 1;
        if (e.published) {
            os << " [published (" << *e.published << ")]";
        }
        os << ": state " << e.paradox.state.str() << "\n";
        os << "    " << format_conditions(s, e.paradox) << "\n";
        os << "    contradiction: " << (e.replay.contradiction ? "yes" : "no") << ", "
           << e.replay.forced_zero.size() << " events forced to 0, witness events "
           << format_event_refs(e.replay.witness_events) << "\n";
    }
}

inline void write_observables_text(std::ostream &os, const Scenario &s, std::span<const ParadoxEntry> entries) {
    os << "observables (" << entries.size() << ")\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        os << "  paradox " << i + 1 << ": " << format_conditions(s, e.paradox) << "\n";
        if (!e.observable) {
            os << "    unavailable: " << e.observable_error << "\n";
            continue;
        }
        const auto &w = *e.observable;
        os << "    eigenvalues " << to_string(w.eigenvalues[0]) << "," << to_string(w.eigenvalues[1]) << ","
           << to_string(w.eigenvalues[2]) << "; input " << s.label(w.source[0]) << "," << s.label(w.source[1])
           << "," << s.label(w.source[2]) << "\n";
        for (std::size_t k = 0; k < 3; ++k) {
            os << "    P" << k + 1 << " = " << w.projectors[k].str() << "  onto " << w.directions[k].str() << "\n";
        }
        os << "    verified: " << (e.check.ok ? "yes" : "no");
        for (const auto &f : e.check.failures) {
            os << "; " << f;
        }
        os << "\n";
    }
}

inline void write_table_comparison_text(std::ostream &os, const yu_oh::ProjectorTableComparison &t) {
    auto list = [](const std::vector<int> &rows) {
        std::string out;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out += (i ? "," : "") + std::to_string(rows[i]);
        }
        return out.empty() ? std::string("none") : out;
    };
    os << "printed projector table\n";
    os << "  rows failing P1+P2+P3=I: " << list(t.identity_errata) << "\n";
    os << "  rows differing from derived: " << list(t.mismatched_rows) << "\n";
    if (!t.missing.empty()) {
        os << "  rows without a derived paradox: " << list(t.missing) << "\n";
    }
    for (const auto &r : t.rows) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (r.matches[k]) {
                continue;
            }
            os << "  row " << r.number << " P" << k + 1 << ": printed " << r.printed[k].str() << ", derived "
               << r.derived[k].str() << "\n";
        }
    }
}

inline void write_simulation_text(std::ostream &os, const SimulationResult &r,
                                  const std::vector<std::string> &outcomes) {
    os << "shots " << r.shots << "\n";
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
        char freq[64];
        std::snprintf(freq, sizeof freq, "%.6f +- %.6f", r.frequencies[i], r.standard_errors[i]);
        os << "  " << outcomes[i] << ": count " << r.counts[i] << ", frequency " << freq << ", exact "
           << to_string(r.probabilities[i]) << "\n";
    }
}

// ---- sections: JSON ----

inline Json scenario_json(const Scenario &s) {
    Json rays = Json::array();
    for (const auto &r : s.rays()) {
        rays.push_back({{"label", r.label}, {"vector", r.vector.str()}});
    }
    return {{"name", s.name()}, {"dim", s.dim()}, {"field", std::string(to_string(s.field()))}, {"rays", rays}};
}

inline Json contexts_json(const Scenario &s, const ComplementCheck &check) {
    Json list = Json::array();
    for (const auto &c : s.contexts()) {
        Json comp = Json::array();
        for (const auto &v : c.complement) {
            comp.push_back(v.str());
        }
        list.push_back({{"members", labels_json(s, c.members)},
                        {"kind", c.kind == ContextKind::basis ? "basis" : "deficient"},
                        {"complement", comp}});
    }
    Json collisions = Json::array();
    for (const auto &col : check.collisions) {
        collisions.push_back({col.first, col.second});
    }
    return {{"contexts", list}, {"complements_distinct", check.distinct}, {"collisions", collisions}};
}

/// One row per assignment, one 0/1 column per ray.
inline Json assignments_json(const Scenario &s, std::span<const KSAssignment> assignments) {
    Json columns = Json::array();
    for (const auto &r : s.rays()) {
        columns.push_back(r.label);
    }
    Json rows = Json::array();
    for (std::size_t k = 0; k < assignments.size(); ++k) {
        Json bits = Json::array();
        for (bool b : assignments[k].bits()) {
            bits.push_back(b ? 1 : 0);
        }
        rows.push_back({{"name", "λ" + std::to_string(k + 1)},
                        {"values", bits},
                        {"support", labels_json(s, assignments[k].support())}});
    }
    return {{"columns", columns}, {"rows", rows}};
}

inline Json event_lists_json(const Scenario &s, std::span<const KSAssignment> assignments) {
    auto membership = classify_rays(s);
    Json out = Json::object();
    for (std::size_t v = 0; v < s.size(); ++v) {
        if (membership[v] != 0) {
            continue;
        }
        Json events = Json::array();
        for (auto e : event_indices(assignments, v)) {
            events.push_back({{"event", "λ" + std::to_string(e + 1)},
                              {"support", labels_json(s, assignments[e].support())}});
        }
        out[s.label(v)] = events;
    }
    return out;
}

inline Json states_json(const Scenario &s, const PureStateSearch &search, const WitnessClassCheck &classes,
                        const MixedAnalysisReport &mixed) {
    Json states = Json::array();
    for (const auto &st : search.states()) {
        Json witnesses = Json::array();
        for (const auto &e : search.entries) {
            if (e.state == st) {
                witnesses.push_back({{"witness", s.label(e.witness)},
                                     {"selection", labels_json(s, e.selection)},
                                     {"confirmed", e.confirmed}});
            }
        }
        states.push_back({{"ray", st.str()}, {"witnesses", witnesses}});
    }
    Json undetermined = Json::array();
    for (const auto &f : search.undetermined) {
        Json span = Json::array();
        for (const auto &v : f.basis) {
            span.push_back(v.str());
        }
        undetermined.push_back(
            {{"witness", s.label(f.witness)}, {"selection", labels_json(s, f.selection)}, {"span", span}});
    }
    Json witnesses = Json::array();
    for (const auto &w : mixed.witnesses) {
        witnesses.push_back({{"witness", s.label(w.witness)},
                             {"events", w.event_count},
                             {"selections", w.selection_count.str()},
                             {"span_classes", w.classes.size()},
                             {"min_rank", w.min_rank()},
                             {"max_nullity", w.max_nullity()},
                             {"common_rays", labels_json(s, w.common_rays)}});
    }
    return {{"pure_states", states},
            {"witnesses_outside_bases", classes.ok},
            {"undetermined_families", undetermined},
            {"mixed", {{"no_mixed_states", mixed.no_mixed_states}, {"witnesses", witnesses}}}};
}

inline Json verdict_json(const Scenario &s, std::span<const KSAssignment> assignments, const QuantumState &state) {
    auto model = possibilistic_model(s, state);
    auto verdict = is_logically_contextual(s, assignments, state);
    Json probs = Json::object();
    for (std::size_t v = 0; v < s.size(); ++v) {
        probs[s.label(v)] = to_string(model.probabilities[v]);
    }
    Json blockers = Json::array();
    for (const auto &b : verdict.blockers) {
        blockers.push_back({{"event", "λ" + std::to_string(b.event + 1)},
                            {"support", labels_json(s, assignments[b.event].support())},
                            {"ray", s.label(b.ray)}});
    }
    return {{"state", state_json(state)},
            {"probabilities", probs},
            {"contextual", verdict.contextual},
            {"witness", verdict.witness ? Json(s.label(*verdict.witness)) : Json(nullptr)},
            {"blockers", blockers},
            {"noncontextual_model_exists", noncontextuality_oracle(s, assignments, state)}};
}

inline Json paradoxes_json(const Scenario &s, std::span<const ParadoxEntry> entries) {
    Json out = Json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        out.push_back({{"index", i + 1},
                       {"published", e.published ? Json(*e.published) : Json(nullptr)},
                       {"state", state_json(e.paradox.state)},
                       {"witness", s.label(e.paradox.witness)},
                       {"zero_set", labels_json(s, e.paradox.zero_set)},
                       {"sp", to_string(e.paradox.sp)},
                       {"sp_percent", format_percent(e.paradox.sp)},
                       {"conditions", format_conditions(s, e.paradox)},
                       {"contradiction", e.replay.contradiction}});
    }
    return out;
}

inline Json observables_json(const Scenario &s, std::span<const ParadoxEntry> entries) {
    Json out = Json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        Json row = {{"index", i + 1}, {"published", e.published ? Json(*e.published) : Json(nullptr)}};
        if (!e.observable) {
            row["error"] = e.observable_error;
            out.push_back(std::move(row));
            continue;
        }
        const auto &w = *e.observable;
        row["state"] = state_json(e.paradox.state);
        row["input"] = {s.label(w.source[0]), s.label(w.source[1]), s.label(w.source[2])};
        row["eigenvalues"] = {to_string(w.eigenvalues[0]), to_string(w.eigenvalues[1]), to_string(w.eigenvalues[2])};
        row["P1"] = matrix_json(w.projectors[0]);
        row["P2"] = matrix_json(w.projectors[1]);
        row["P3"] = matrix_json(w.projectors[2]);
        row["verified"] = e.check.ok;
        row["failures"] = e.check.failures;
        out.push_back(std::move(row));
    }
    return out;
}

inline Json table_comparison_json(const yu_oh::ProjectorTableComparison &t) {
    Json rows = Json::array();
    for (const auto &r : t.rows) {
        Json mismatches = Json::array();
        for (std::size_t k = 0; k < 3; ++k) {
            if (!r.matches[k]) {
                mismatches.push_back({{"projector", "P" + std::to_string(k + 1)},
                                      {"printed", matrix_json(r.printed[k])},
                                      {"derived", matrix_json(r.derived[k])}});
            }
        }
        rows.push_back({{"row", r.number},
                        {"printed_sums_to_identity", r.printed_sums_to_identity},
                        {"mismatches", mismatches}});
    }
    return {{"identity_errata", t.identity_errata},
            {"mismatched_rows", t.mismatched_rows},
            {"missing", t.missing},
            {"rows", rows}};
}

inline Json simulation_json(const SimulationResult &r, const std::vector<std::string> &outcomes) {
    Json list = Json::array();
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
        list.push_back({{"outcome", outcomes[i]},
                        {"count", r.counts[i]},
                        {"frequency", r.frequencies[i]},
                        {"standard_error", r.standard_errors[i]},
                        {"exact", to_string(r.probabilities[i])}});
    }
    return {{"shots", r.shots}, {"outcomes", list}};
}

// ---- full report ----

struct ParadoxSimulation {
    SimulationResult witness_event;  // {P_witness, I - P_witness}
    std::optional<SimulationResult> observable;
};

/// Samples, for each paradox, the witness event (empirical SP) and the witness
/// observable (outcome a3 every shot).
inline std::vector<ParadoxSimulation> simulate_paradoxes(const Scenario &s, std::span<const ParadoxEntry> entries,
                                                         std::uint64_t shots, std::uint64_t seed) {
    std::vector<ParadoxSimulation> out;
    for (const auto &e : entries) {
        auto binary = binary_measurement(s.vector(e.paradox.witness));
        ParadoxSimulation sim{simulate_measurement(e.paradox.state, binary, shots, seed), std::nullopt};
        if (e.observable) {
            sim.observable = simulate_measurement(e.paradox.state, e.observable->projectors, shots, seed);
        }
        out.push_back(std::move(sim));
    }
    return out;
}

inline std::vector<std::string> observable_outcomes(const WitnessObservable &w) {
    return {"a1=" + to_string(w.eigenvalues[0]), "a2=" + to_string(w.eigenvalues[1]),
            "a3=" + to_string(w.eigenvalues[2])};
}

inline std::vector<std::string> event_outcomes(const std::string &label) {
    return {label + "=1", label + "=0"};
}

inline std::string full_report_text(const Analysis &a, std::uint64_t shots, std::uint64_t seed) {
    std::ostringstream os;
    const Scenario &s = a.scenario;
    write_scenario_text(os, s);
    os << "\n";
    write_contexts_text(os, s, a.complements);
    os << "\n";
    write_assignments_text(os, s, a.assignments);
    os << "\n";
    write_event_lists_text(os, s, a.assignments);
    os << "\n";
    write_states_text(os, s, a.search, a.witness_classes, a.mixed);
    os << "\n";
    write_paradoxes_text(os, s, a.paradoxes);
    os << "\n";
    write_observables_text(os, s, a.paradoxes);
    if (a.table) {
        os << "\n";
        write_table_comparison_text(os, *a.table);
    }
    os << "\nsimulation (seed " << seed << ", xoshiro256**)\n";
    auto sims = simulate_paradoxes(s, a.paradoxes, shots, seed);
    for (std::size_t i = 0; i < sims.size(); ++i) {
        const auto &e = a.paradoxes[i];
        os << "paradox " << i + 1 << " witness event, ";
        write_simulation_text(os, sims[i].witness_event, event_outcomes(s.label(e.paradox.witness)));
        if (sims[i].observable) {
            os << "paradox " << i + 1 << " observable, ";
            write_simulation_text(os, *sims[i].observable, observable_outcomes(*e.observable));
        }
    }
    return os.str();
}

inline Json full_report_json(const Analysis &a, std::uint64_t shots, std::uint64_t seed) {
    const Scenario &s = a.scenario;
    Json doc = {{"schema", report_schema}, {"command", "report"}, {"scenario", scenario_json(s)}};
    doc["contexts"] = contexts_json(s, a.complements);
    doc["assignments"] = assignments_json(s, a.assignments);
    doc["event_lists"] = event_lists_json(s, a.assignments);
    doc["states"] = states_json(s, a.search, a.witness_classes, a.mixed);
    doc["paradoxes"] = paradoxes_json(s, a.paradoxes);
    doc["observables"] = observables_json(s, a.paradoxes);
    doc["projector_table"] = a.table ? table_comparison_json(*a.table) : Json(nullptr);
    Json sims = Json::array();
    auto results = simulate_paradoxes(s, a.paradoxes, shots, seed);
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto &e = a.paradoxes[i];
        sims.push_back({{"index", i + 1},
                        {"witness_event",
                         simulation_json(results[i].witness_event, event_outcomes(s.label(e.paradox.witness)))},
                        {"observable", results[i].observable
                                           ? simulation_json(*results[i].observable, observable_outcomes(*e.observable))
                                           : Json(nullptr)}});
    }
    doc["simulation"] = {{"seed", seed}, {"generator", "xoshiro256**"}, {"runs", sims}};
    return doc;
}

}  // namespace ctxkit
