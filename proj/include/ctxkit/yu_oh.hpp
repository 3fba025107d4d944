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

// The bundled 13-ray Yu-Oh scenario and its published reference tables.

#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctxkit/assignments.hpp"
#include "ctxkit/contextuality.hpp"
#include "ctxkit/hardy.hpp"
#include "ctxkit/scenario.hpp"

namespace ctxkit::yu_oh {

inline constexpr std::string_view scenario_text =
    "# Yu-Oh set: 13 rays in a qutrit\n"
    "scenario yu-oh dim 3 field rational\n"
    "v1: 1,0,0\n"
    "v2: 0,1,0\n"
    "v3: 0,0,1\n"
    "v4: 0,1,-1\n"
    "v5: 1,0,-1\n"
    "v6: 1,-1,0\n"
    "v7: 0,1,1\n"
    "v8: 1,0,1\n"
    "v9: 1,1,0\n"
    "vA: -1,1,1\n"
    "vB: 1,-1,1\n"
    "vC: 1,1,-1\n"
    "vD: 1,1,1\n";

inline Scenario scenario() {
    return parse_scenario(scenario_text).with_contexts();
}

struct PublishedComplement {
    std::string first;
    std::string second;
    Vector complement;
};

/// Two-ray contexts with their orthogonal completions, as printed.
inline std::vector<PublishedComplement> published_complements() {
    return {
        {"v4", "vA", {2, 1, 1}},    {"v8", "vA", {-1, -2, 1}}, {"v9", "vA", {1, -1, 2}},
        {"v5", "vB", {-1, -2, -1}}, {"v7", "vB", {2, 1, -1}},  {"v9", "vB", {1, -1, -2}},
        {"v6", "vC", {1, 1, 2}},    {"v7", "vC", {-2, 1, -1}}, {"v8", "vC", {-1, 2, 1}},
        {"v4", "vD", {2, -1, -1}},  {"v5", "vD", {1, -2, 1}},  {"v6", "vD", {-1, -1, 2}},
    };
}

/// Supports of the 24 global events, rows 1..24 in printed order.
inline std::vector<std::vector<std::string>> published_assignments() {
    return {
        {"v1", "v5", "v6"}, {"v1", "v5", "v6", "vA"}, {"v1", "v5", "v9"}, {"v1", "v5", "v9", "vC"},
        {"v1", "v6", "v8"}, {"v1", "v6", "v8", "vB"}, {"v1", "v8", "v9"}, {"v1", "v8", "v9", "vD"},
        {"v2", "v4", "v6"}, {"v2", "v4", "v6", "vB"}, {"v2", "v4", "v9"}, {"v2", "v4", "v9", "vC"},
        {"v2", "v6", "v7"}, {"v2", "v6", "v7", "vA"}, {"v2", "v7", "v9"}, {"v2", "v7", "v9", "vD"},
        {"v3", "v4", "v5"}, {"v3", "v4", "v5", "vC"}, {"v3", "v4", "v8"}, {"v3", "v4", "v8", "vB"},
        {"v3", "v5", "v7"}, {"v3", "v5", "v7", "vA"}, {"v3", "v7", "v8"}, {"v3", "v7", "v8", "vD"},
    };
}

struct PublishedEventList {
    std::string witness;
    std::vector<std::vector<std::string>> events;
};

inline std::vector<PublishedEventList> published_event_lists() {
    return {
        {"vA", {{"v1", "v5", "v6", "vA"}, {"v2", "v6", "v7", "vA"}, {"v3", "v5", "v7", "vA"}}},
        {"vB", {{"v1", "v6", "v8", "vB"}, {"v2", "v4", "v6", "vB"}, {"v3", "v4", "v8", "vB"}}},
        {"vC", {{"v1", "v5", "v9", "vC"}, {"v2", "v4", "v9", "vC"}, {"v3", "v4", "v5", "vC"}}},
        {"vD", {{"v1", "v8", "v9", "vD"}, {"v2", "v7", "v9", "vD"}, {"v3", "v7", "v8", "vD"}}},
    };
}

/// The logically contextual pure states, as printed (unnormalized).
inline std::vector<Vector> published_states() {
    return {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
}

struct PublishedParadox {
    int number;
    Vector state;
    std::string witness;
    std::array<std::string, 2> zeros;
};

inline std::vector<PublishedParadox> published_paradoxes() {
    return {
        {1, {1, 1, 1}, "vA", {"v5", "v6"}},   {2, {1, 1, 1}, "vB", {"v4", "v6"}},
        {3, {1, 1, 1}, "vC", {"v4", "v5"}},   {4, {-1, 1, 1}, "vB", {"v4", "v8"}},
        {5, {-1, 1, 1}, "vC", {"v4", "v9"}},  {6, {-1, 1, 1}, "vD", {"v8", "v9"}},
        {7, {1, -1, 1}, "vA", {"v5", "v7"}},  {8, {1, -1, 1}, "vC", {"v5", "v9"}},
        {9, {1, -1, 1}, "vD", {"v7", "v9"}},  {10, {1, 1, -1}, "vA", {"v6", "v7"}},
        {11, {1, 1, -1}, "vB", {"v6", "v8"}}, {12, {1, 1, -1}, "vD", {"v7", "v8"}},
    };
}

namespace detail {

/// (1/den) * entries
inline Matrix scaled(long long den, std::initializer_list<std::initializer_list<long long>> entries) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto &r : entries) {
        std::vector<Scalar> row;
        for (auto x : r) {
            row.emplace_back(Rational(x, den));
        }
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows);
}

}  // namespace detail

struct PublishedProjectors {
    int number;
    std::array<Matrix, 3> projectors;
};

/// The projector table exactly as printed, misprints included.
inline std::vector<PublishedProjectors> published_projector_table() {
    using detail::scaled;
    const Matrix p_v5 = scaled(2, {{1, 0, -1}, {0, 0, 0}, {-1, 0, 1}});
    const Matrix p_v4 = scaled(2, {{0, 0, 0}, {0, 1, -1}, {0, -1, 1}});
    const Matrix p_v7 = scaled(2, {{0, 0, 0}, {0, 1, 1}, {0, 1, 1}});
    const Matrix p_v6 = scaled(2, {{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}});
    const Matrix all_ones = scaled(3, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    const Matrix p_1m21 = scaled(6, {{1, -2, 1}, {-2, 4, -2}, {1, -2, 1}});
    const Matrix p_2m1m1 = scaled(6, {{4, -2, -2}, {-2, 1, 1}, {-2, 1, 1}});
    const Matrix p_211 = scaled(6, {{4, 2, 2}, {2, 1, 1}, {2, 1, 1}});
    const Matrix p_011 = scaled(2, {{0, 0, 0}, {0, 1, 1}, {0, 1, 1}});
    const Matrix p_1m11 = scaled(3, {{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}});
    const Matrix p_11m1 = scaled(3, {{1, 1, -1}, {1, 1, -1}, {-1, -1, 1}});
    const Matrix p_112 = scaled(6, {{1, 1, 2}, {1, 1, 2}, {2, 2, 4}});
    return {
        {1, {p_v5, p_1m21, all_ones}},
        {2, {p_v4, p_2m1m1, all_ones}},
        {3, {p_v4, p_2m1m1, all_ones}},
        {4, {p_v4, p_211, p_011}},
        {5, {p_v4, p_211, p_011}},
        {6,
         {scaled(2, {{1, 0, 1}, {0, 0, 0}, {1, 0, 1}}), scaled(6, {{1, 2, -1}, {2, 4, -2}, {-1, -2, 1}}),
          scaled(3, {{-1, -1, -1}, {-1, 1, 1}, {-1, 1, 1}})}},
        {7, {p_v5, p_1m21, all_ones}},
        {8, {p_v5, scaled(6, {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}), p_1m11}},
        {9, {p_v7, scaled(6, {{4, 2, -2}, {2, 1, -1}, {-2, -1, 1}}), p_1m11}},
        {10, {p_v6, p_112, p_11m1}},
        {11, {p_v6, p_112, p_11m1}},
        {12, {p_v7, scaled(6, {{4, -2, 2}, {-2, 1, -1}, {2, -1, 1}}), p_11m1}},
    };
}

/// Published number of a derived paradox, matched on (state ray, witness, zeros).
inline std::optional<int> published_number(const Scenario &s, const HardyParadox &p) {
    if (!p.state.is_pure() || p.zero_set.size() != 2) {
        return std::nullopt;
    }
    for (const auto &pub : published_paradoxes()) {
        auto w = s.find(pub.witness);
        auto z0 = s.find(pub.zeros[0]);
        auto z1 = s.find(pub.zeros[1]);
        if (!w || !z0 || !z1 || pub.state.size() != p.state.dim()) {
            continue;
        }
        std::vector<std::size_t> zeros{*z0, *z1};
        std::sort(zeros.begin(), zeros.end());
        if (same_ray(pub.state, p.state.ray()) && *w == p.witness && zeros == p.zero_set) {
            return pub.number;
        }
    }
    return std::nullopt;
}

struct ProjectorRowComparison {
    int number;
    std::array<Matrix, 3> derived;
    std::array<Matrix, 3> printed;
    std::array<bool, 3> matches;
    bool printed_sums_to_identity;
};

struct ProjectorTableComparison {
    std::vector<ProjectorRowComparison> rows;
    /// Rows whose printed triple fails P1+P2+P3 = I.
    std::vector<int> identity_errata;
    /// Rows where any printed projector differs from the derived one.
    std::vector<int> mismatched_rows;
    /// Published rows with no derived paradox.
    std::vector<int> missing;
};

/// Compares derived witness observables with the printed table row by row.
inline ProjectorTableComparison compare_projector_table(const Scenario &s,
                                                        std::span<const HardyParadox> paradoxes) {
    ProjectorTableComparison out;
    for (const auto &row : published_projector_table()) {
        const HardyParadox *match = nullptr;
        for (const auto &p : paradoxes) {
            if (published_number(s, p) == row.number) {
                match = &p;
                break;
            }
        }
        if (match == nullptr) {
            out.missing.push_back(row.number);
            continue;
        }
        auto w = build_witness_observable(s, *match);
        ProjectorRowComparison cmp{row.number, w.projectors, row.projectors, {}, false};
        bool all = true;
        for (std::size_t i = 0; i < 3; ++i) {
            cmp.matches[i] = w.projectors[i] == row.projectors[i];
            all = all && cmp.matches[i];
        }
        cmp.printed_sums_to_identity =
            row.projectors[0] + row.projectors[1] + row.projectors[2] == Matrix::identity(3);
        if (!cmp.printed_sums_to_identity) {
            out.identity_errata.push_back(row.number);
        }
        if (!all) {
            out.mismatched_rows.push_back(row.number);
        }
        out.rows.push_back(std::move(cmp));
    }
    return out;
}

}  // namespace ctxkit::yu_oh
