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

// Logical (possibilistic) contextuality of quantum states on a scenario.

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ctxkit/assignments.hpp"
#include "ctxkit/exact.hpp"
#include "ctxkit/scenario.hpp"

namespace ctxkit {

/// A pure state (kept as its canonical ray) or a validated density matrix.
class QuantumState {
   public:
    static QuantumState pure(const Vector &psi) {
        if (psi.size() < 2) {
            throw ValidationError("state dimension must be at least 2");
        }
        if (psi.is_zero()) {
            throw ValidationError("pure state must be a non-zero vector");
        }
        return QuantumState(canonical_ray(psi));
    }
    static QuantumState density(DensityMatrix rho) {
        return QuantumState(std::move(rho));
    }

    bool is_pure() const noexcept {
        return std::holds_alternative<Vector>(repr_);
    }
    std::size_t dim() const {
        return is_pure() ? std::get<Vector>(repr_).size() : std::get<DensityMatrix>(repr_).dim();
    }
    const Vector &ray() const {
        if (!is_pure()) {
            throw ValidationError("state is not pure");
        }
        return std::get<Vector>(repr_);
    }
    DensityMatrix density_matrix() const {
        return is_pure() ? DensityMatrix::pure(std::get<Vector>(repr_)) : std::get<DensityMatrix>(repr_);
    }

    /// Born probability of the rank-1 event `v`.
    Rational probability(const Vector &v) const {
        if (v.size() != dim()) {
            throw ValidationError("dimension mismatch: state has dimension " + std::to_string(dim()) +
                                  ", event has " + std::to_string(v.size()));
        }
        if (is_pure()) {
            const Vector &psi = std::get<Vector>(repr_);
            return Rational(inner_product(v, psi).norm() / (norm_squared(v) * norm_squared(psi)));
        }
        return born_probability(std::get<DensityMatrix>(repr_), v);
    }

    /// tr(rho P).
    Rational expectation(const Matrix &p) const {
        return ctxkit::expectation(density_matrix(), p);
    }

    std::string str() const {
        return is_pure() ? std::get<Vector>(repr_).str() : std::get<DensityMatrix>(repr_).matrix().str();
    }

    friend bool operator==(const QuantumState &a, const QuantumState &b) {
        if (a.is_pure() != b.is_pure()) {
            return false;
        }
        if (a.is_pure()) {
            return std::get<Vector>(a.repr_) == std::get<Vector>(b.repr_);
        }
        return std::get<DensityMatrix>(a.repr_).matrix() == std::get<DensityMatrix>(b.repr_).matrix();
    }

   private:
    explicit QuantumState(Vector psi) : repr_(std::move(psi)) {}
    explicit QuantumState(DensityMatrix rho) : repr_(std::move(rho)) {}

    std::variant<Vector, DensityMatrix> repr_;
};

/// `c1,c2,...,cD`
inline QuantumState parse_state(std::string_view text) {
    return QuantumState::pure(parse_vector(text));
}

/// D lines of D literals separated by commas and/or blanks. Lines starting
/// with '#' and empty lines are ignored.
inline QuantumState parse_density(std::string_view text) {
    std::vector<std::vector<Scalar>> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        std::vector<Scalar> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) {
                ++i;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',') {
                ++i;
            }
            if (i > start) {
                row.push_back(parse_scalar(line.substr(start, i - start), SourcePos{line_no, start + 1}));
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("density matrix file is empty");
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) {
            throw ValidationError("density matrix row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " +
                                  std::to_string(rows.size()));
        }
    }
    return QuantumState::density(DensityMatrix::from_matrix(Matrix::from_rows(rows)));
}

inline QuantumState load_density(const std::filesystem::path &path) {
    return parse_density(read_text_file(path));
}

/// The 0/1 coarse-graining of the Born probabilities: value 1 iff the event
/// has non-zero probability.
struct PossibilisticModel {
    std::vector<Rational> probabilities;
    std::vector<bool> values;

    bool operator[](std::size_t i) const {
        return values[i];
    }
};

inline PossibilisticModel possibilistic_model(const Scenario &s, const QuantumState &state) {
    if (state.dim() != s.dim()) {
        throw ValidationError("dimension mismatch: state has dimension " + std::to_string(state.dim()) +
                              ", scenario has " + std::to_string(s.dim()));
    }
    PossibilisticModel m;
    m.probabilities.reserve(s.size());
    m.values.reserve(s.size());
    for (const auto &r : s.rays()) {
        m.probabilities.push_back(state.probability(r.vector));
        m.values.push_back(m.probabilities.back() != 0);
    }
    return m;
}

struct Blocker {
    std::size_t event;  // index into the assignment list
    std::size_t ray;    // possible-never ray inside that event
};

struct ContextualityVerdict {
    bool contextual = false;
    std::optional<std::size_t> witness;
    std::vector<Blocker> blockers;
};

/// A state is logically contextual iff some ray v with non-zero probability
/// has every global event containing v also containing another ray of zero
/// probability. Rays contained in no global event are never witnesses. The
/// first witness in ray order is reported, with the first blocking ray (in
/// ray order) of each of its events.
inline ContextualityVerdict is_logically_contextual(const Scenario &s, std::span<const KSAssignment> assignments,
                                                    const QuantumState &state) {
    PossibilisticModel model = possibilistic_model(s, state);
    for (std::size_t v = 0; v < s.size(); ++v) {
        if (!model[v]) {
            continue;
        }
        std::vector<Blocker> blockers;
        bool blocked = true;
        for (std::size_t e = 0; e < assignments.size() && blocked; ++e) {
            if (!assignments[e].contains(v)) {
                continue;
            }
            blocked = false;
            for (auto u : assignments[e].support()) {
                if (u != v && !model[u]) {
                    blockers.push_back({e, u});
                    blocked = true;
                    break;
                }
            }
        }
        if (blocked && !blockers.empty()) {
            return {true, v, std::move(blockers)};
        }
    }
    return {};
}

/// Independent check of logical non-contextuality. Builds the candidate
/// possibilistic distribution p(lambda) = AND of the model over the support of
/// lambda and tests that it is normalized (OR over lambda is 1) and that its
/// marginal OR_{lambda : lambda(v) = 1} p(lambda) equals the model value for
/// every ray of every context.
inline bool noncontextuality_oracle(const Scenario &s, std::span<const KSAssignment> assignments,
                                    const QuantumState &state) {
    PossibilisticModel model = possibilistic_model(s, state);
    std::vector<bool> p(assignments.size(), true);
    bool normalized = false;
    for (std::size_t e = 0; e < assignments.size(); ++e) {
        for (std::size_t v = 0; v < s.size(); ++v) {
            if (assignments[e][v] && !model[v]) {
                p[e] = false;
            }
        }
        normalized = normalized || p[e];
    }
    if (!normalized) {
        return false;
    }
    for (const auto &c : s.contexts()) {
        for (auto v : c.members) {
            bool marginal = false;
            for (std::size_t e = 0; e < assignments.size(); ++e) {
                marginal = marginal || (assignments[e][v] && p[e]);
            }
            if (marginal != model[v]) {
                return false;
            }
        }
    }
    return true;
}

/// One contextual pure state found by the blocking-selection search.
struct ContextualPureState {
    std::size_t witness;
    Vector state;                       // canonical ray
    std::vector<std::size_t> selection; // one blocking ray per event of the witness
    bool confirmed = false;             // passed is_logically_contextual
};

/// A selection whose solution space has dimension >= 2: a family of states
/// rather than a single ray. Reported, not classified.
struct UndeterminedFamily {
    std::size_t witness;
    std::vector<std::size_t> selection;
    std::vector<Vector> basis;
};

struct PureStateSearch {
    std::vector<ContextualPureState> entries;
    std::vector<UndeterminedFamily> undetermined;

    /// Distinct states in order of discovery.
    std::vector<Vector> states() const {
        std::vector<Vector> out;
        for (const auto &e : entries) {
            if (std::find(out.begin(), out.end(), e.state) == out.end()) {
                out.push_back(e.state);
            }
        }
        return out;
    }
};

namespace detail {

/// For witness v: for each event containing v, its other members.
inline std::vector<std::vector<std::size_t>> blocking_options(std::span<const KSAssignment> assignments,
                                                              std::size_t v) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto &a : assignments) {
        if (!a.contains(v)) {
            continue;
        }
        std::vector<std::size_t> others;
        for (auto u : a.support()) {
            if (u != v) {
                others.push_back(u);
            }
        }
        out.push_back(std::move(others));
    }
    return out;
}

inline std::vector<std::size_t> distinct_sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace detail

/// All selections (one ray from each option list) whose chosen rays span the
/// same subspace. Only the span matters for rank and for the states
/// annihilated by the selection.
struct SelectionClass {
    std::vector<std::size_t> selection;   // first selection, in odometer order, with this span
    std::vector<std::size_t> generators;  // independent chosen rays spanning it
    std::size_t rank = 0;
    std::size_t nullity = 0;
    Integer count = 0;                    // number of selections with this span
    std::vector<Vector> solutions;        // basis of the common orthogonal complement
};

/// Groups every selection by span. Works level by level, merging partial
/// selections with equal spans, so the cost follows the number of distinct
/// spans rather than the number of selections.
inline std::vector<SelectionClass> selection_classes(const Scenario &s,
                                                     const std::vector<std::vector<std::size_t>> &options) {
    if (options.empty() ||
        std::any_of(options.begin(), options.end(), [](const auto &o) { return o.empty(); })) {
        return {};
    }
    auto rows_of = [&](const std::vector<std::size_t> &idx) {
        std::vector<Vector> rows;
        for (auto i : idx) {
            rows.push_back(s.vector(i));
        }
        return rows;
    };
    auto key_of = [](const std::vector<Vector> &solutions) {
        std::string key;
        for (const auto &v : solutions) {
            key += v.str();
        }
        return key;
    };

    SelectionClass start;
    start.count = 1;
    start.solutions = nullspace(std::vector<Vector>{}, s.dim());
    std::vector<SelectionClass> level{start};
    for (const auto &choices : options) {
        std::vector<SelectionClass> next;
        std::map<std::string, std::size_t> index;
        for (const auto &partial : level) {
            for (auto o : choices) {
                std::vector<std::size_t> gens = partial.generators;
                std::vector<Vector> solutions = partial.solutions;
                bool annihilates = std::all_of(solutions.begin(), solutions.end(),
                                               [&](const Vector &x) { return orthogonal(s.vector(o), x); });
                if (!annihilates) {
                    gens.push_back(o);
                    std::sort(gens.begin(), gens.end());
                    solutions = nullspace(rows_of(gens), s.dim());
                }
                std::string key = key_of(solutions);
                auto it = index.find(key);
                if (it != index.end()) {
                    next[it->second].count += partial.count;
                    continue;
                }
                SelectionClass c;
                c.selection = partial.selection;
                c.selection.push_back(o);
                c.generators = std::move(gens);
                c.count = partial.count;
                c.solutions = std::move(solutions);
                index.emplace(std::move(key), next.size());
                next.push_back(std::move(c));
            }
        }
        level = std::move(next);
    }
    for (auto &c : level) {
        c.rank = c.generators.size();
        c.nullity = c.solutions.size();
    }
    return level;
}

/// Exhausts contextual pure states: for every ray v_k contained in at least one
/// global event, and every choice of one other ray from each such event, the
/// states orthogonal to all chosen rays are solved for exactly. A
/// one-dimensional solution psi with <v_k|psi> != 0 is a contextual state
/// witnessed by v_k. Entries are unique per (witness, state).
inline PureStateSearch find_contextual_pure_states(const Scenario &s, std::span<const KSAssignment> assignments) {
    PureStateSearch out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        for (auto &c : selection_classes(s, detail::blocking_options(assignments, k))) {
            if (c.nullity >= 2) {
                out.undetermined.push_back({k, c.selection, c.solutions});
                continue;
            }
            if (c.nullity != 1 || orthogonal(s.vector(k), c.solutions.front())) {
                continue;
            }
            out.entries.push_back({k, c.solutions.front(), c.selection, false});
        }
    }
    for (auto &e : out.entries) {
        e.confirmed = is_logically_contextual(s, assignments, QuantumState::pure(e.state)).contextual;
    }
    return out;
}

struct WitnessMixedAnalysis {
    std::size_t witness;
    std::size_t event_count;
    Integer selection_count;
    std::vector<SelectionClass> classes;
    /// Rays other than the witness lying in every event that contains it.
    std::vector<std::size_t> common_rays;

    std::size_t min_rank() const {
        std::size_t m = SIZE_MAX;
        for (const auto &c : classes) {
            m = std::min(m, c.rank);
        }
        return classes.empty() ? 0 : m;
    }
    std::size_t max_nullity() const {
        std::size_t m = 0;
        for (const auto &c : classes) {
            m = std::max(m, c.nullity);
        }
        return m;
    }
};

struct MixedAnalysisReport {
    std::vector<WitnessMixedAnalysis> witnesses;
    bool no_mixed_states = true;
};

/// For every candidate witness and every blocking selection, records the rank
/// of the selected rays and the dimension of their common orthogonal
/// complement. When every complement is at most one-dimensional, a state whose
/// components are all annihilated by a selection is a single ray, so no
/// mixed state can be logically contextual. A ray shared by every event of a
/// witness would allow a one-ray selection and is reported as a common ray.
inline MixedAnalysisReport analyze_mixed_states(const Scenario &s, std::span<const KSAssignment> assignments) {
    MixedAnalysisReport out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        auto options = detail::blocking_options(assignments, k);
        if (options.empty()) {
            continue;
        }
        WitnessMixedAnalysis w{k, options.size(), 1, {}, {}};
        std::vector<std::size_t> common = detail::distinct_sorted(options.front());
        for (const auto &o : options) {
            w.selection_count *= o.size();
            auto sorted = detail::distinct_sorted(o);
            std::vector<std::size_t> keep;
            std::set_intersection(common.begin(), common.end(), sorted.begin(), sorted.end(),
                                  std::back_inserter(keep));
            common = std::move(keep);
        }
        w.common_rays = common;
        w.classes = selection_classes(s, options);
        if (!w.common_rays.empty() || w.max_nullity() > 1) {
            out.no_mixed_states = false;
        }
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

struct WitnessClassCheck {
    bool ok = true;
    std::vector<std::size_t> offending;  // witnesses that belong to some Basis context
};

/// Every witness emitted by the pure-state search should lie in no Basis
/// context; any that does is a counterexample for this scenario.
inline WitnessClassCheck check_witnesses_outside_bases(const Scenario &s, const PureStateSearch &search) {
    auto membership = classify_rays(s);
    WitnessClassCheck out;
    for (const auto &e : search.entries) {
        if (membership[e.witness] != 0 &&
            std::find(out.offending.begin(), out.offending.end(), e.witness) == out.offending.end()) {
            out.offending.push_back(e.witness);
        }
    }
    out.ok = out.offending.empty();
    return out;
}

}  // namespace ctxkit
