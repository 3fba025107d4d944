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

#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

#include "ctxkit/contextuality.hpp"
#include "ctxkit/yu_oh.hpp"
#include "oracle.hpp"

namespace ctxkit {
namespace {

const std::string data_dir = CTXKIT_TEST_DATA;

Vector to_vector(const oracle::IVec &v) {
    std::vector<Scalar> c;
    for (auto x : v) {
        c.emplace_back(x);
    }
    return Vector(c);
}

oracle::IVec to_ints(const Vector &v) {
    oracle::IVec out;
    for (const auto &c : v) {
        out.push_back(static_cast<oracle::Int>(c.re()));
    }
    return out;
}

std::vector<std::vector<std::size_t>> supports(const std::vector<KSAssignment> &as) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto &a : as) {
        out.push_back(a.support());
    }
    return out;
}

class YuOh : public ::testing::Test {
   protected:
    Scenario s = yu_oh::scenario();
    std::vector<KSAssignment> events = enumerate_assignments(s);
    std::vector<oracle::IVec> rays = oracle::yu_oh_rays();

    bool oracle_contextual(const oracle::IVec &state) {
        auto ref = oracle::contextual_states(rays, supports(events));
        auto p = oracle::primitive(state);
        return std::any_of(ref.begin(), ref.end(), [&](const auto &w) { return w.state == p; });
    }

    void expect_agreement(const QuantumState &st, const std::string &what) {
        auto verdict = is_logically_contextual(s, events, st);
        EXPECT_EQ(verdict.contextual, !noncontextuality_oracle(s, events, st)) << what;
        if (st.is_pure()) {
            EXPECT_EQ(verdict.contextual, oracle_contextual(to_ints(st.ray()))) << what;
        }
    }
};

TEST(QuantumStateParse, Rejections) {
    EXPECT_THROW(parse_state("0,0,0"), ValidationError);
    EXPECT_THROW(parse_state("1"), ValidationError);
    EXPECT_THROW(parse_state("1,x,0"), ParseError);
    EXPECT_EQ(parse_state("-2,2,2").ray().str(), "(1,-1,-1)");
}

TEST(QuantumStateParse, DensityFile) {
    QuantumState st = load_density(data_dir + "/mixed.density");
    EXPECT_FALSE(st.is_pure());
    EXPECT_EQ(st.dim(), 3u);
    EXPECT_EQ(st.probability(Vector{1, 0, 1}), Rational(2, 3));
    EXPECT_THROW(st.ray(), ValidationError);
    EXPECT_THROW(parse_density("# nothing\n"), ParseError);
    EXPECT_THROW(parse_density("1,0\n0,0,0\n"), ValidationError);
    EXPECT_THROW(parse_density("1,0\n0,1\n"), ValidationError);
    EXPECT_THROW(load_density(data_dir + "/absent.density"), IoError);
}

TEST_F(YuOh, FourStatesMatchCrossProductOracle) {
    auto search = find_contextual_pure_states(s, events);
    auto ref = oracle::contextual_states(rays, supports(events));
    ASSERT_EQ(ref.size(), 12u);
    std::vector<oracle::WitnessedState> got;
    for (const auto &e : search.entries) {
        EXPECT_TRUE(e.confirmed);
        got.push_back({e.witness, oracle::primitive(to_ints(e.state))});
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, ref);
    EXPECT_TRUE(search.undetermined.empty());

    auto states = search.states();
    ASSERT_EQ(states.size(), 4u);
    for (const auto &p : yu_oh::published_states()) {
        EXPECT_EQ(std::count_if(states.begin(), states.end(), [&](const Vector &v) { return same_ray(v, p); }), 1)
            << p.str();
    }
}

TEST_F(YuOh, WitnessAndBlockersForUniformState) {
    auto verdict = is_logically_contextual(s, events, parse_state("1,1,1"));
    ASSERT_TRUE(verdict.contextual);
    EXPECT_EQ(s.label(*verdict.witness), "vA");
    ASSERT_EQ(verdict.blockers.size(), 3u);
    std::vector<std::string> blocking;
    for (const auto &b : verdict.blockers) {
        EXPECT_TRUE(events[b.event].contains(*verdict.witness));
        blocking.push_back(s.label(b.ray));
    }
    EXPECT_EQ(blocking, (std::vector<std::string>{"v5", "v6", "v5"}));
}

TEST_F(YuOh, PossibilisticModelOfUniformState) {
    auto m = possibilistic_model(s, parse_state("1,1,1"));
    std::string bits;
    for (bool b : m.values) {
        bits += b ? '1' : '0';
    }
    EXPECT_EQ(bits, "1110001111111");
    EXPECT_EQ(m.probabilities[9], Rational(1, 9));
    EXPECT_EQ(m.probabilities[12], Rational(1));
    EXPECT_THROW(possibilistic_model(s, parse_state("1,1")), ValidationError);
}

TEST_F(YuOh, OracleAgreesOnPublishedStates) {
    for (const auto &p : yu_oh::published_states()) {
        expect_agreement(QuantumState::pure(p), p.str());
        EXPECT_TRUE(is_logically_contextual(s, events, QuantumState::pure(p)).contextual);
    }
}

TEST_F(YuOh, OracleAgreesOnRayStates) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        expect_agreement(QuantumState::pure(s.vector(i)), s.label(i));
    }
}

// Sums of two scenario rays, taken in index order (0,1), (0,2), ... .
TEST_F(YuOh, OracleAgreesOnPairSumStates) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < rays.size() && checked < 20; ++i) {
        for (std::size_t j = i + 1; j < rays.size() && checked < 20; ++j) {
            oracle::IVec sum(3);
            for (std::size_t c = 0; c < 3; ++c) {
                sum[c] = rays[i][c] + rays[j][c];
            }
            if (oracle::is_zero(sum)) {
                continue;
            }
            expect_agreement(QuantumState::pure(to_vector(sum)), s.label(i) + "+" + s.label(j));
            ++checked;
        }
    }
    EXPECT_EQ(checked, 20u);
}

TEST_F(YuOh, OracleAgreesOnSeededRandomStates) {
    oracle::RationalStateGenerator gen(2026);
    for (int k = 0; k < 50; ++k) {
        auto coords = gen.next(3);
        QuantumState st = parse_state(oracle::RationalStateGenerator::to_literal(coords));
        EXPECT_TRUE(same_ray(st.ray(), to_vector(oracle::RationalStateGenerator::to_integers(coords))));
        expect_agreement(st, oracle::RationalStateGenerator::to_literal(coords));
    }
}

TEST_F(YuOh, MixturesOfContextualStatesAreNotContextual) {
    auto states = yu_oh::published_states();
    const std::vector<std::pair<Rational, Rational>> weights{{Rational(1, 2), Rational(1, 2)},
                                                             {Rational(1, 3), Rational(2, 3)},
                                                             {Rational(9, 10), Rational(1, 10)}};
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            for (const auto &[a, b] : weights) {
                std::vector<Rational> w{a, b};
                std::vector<Vector> parts{states[i], states[j]};
                auto st = QuantumState::density(DensityMatrix::mixture(w, parts));
                EXPECT_FALSE(is_logically_contextual(s, events, st).contextual);
                EXPECT_TRUE(noncontextuality_oracle(s, events, st));
            }
        }
    }
    auto fixture = load_density(data_dir + "/mixed.density");
    EXPECT_FALSE(is_logically_contextual(s, events, fixture).contextual);
    EXPECT_TRUE(noncontextuality_oracle(s, events, fixture));
}

TEST_F(YuOh, NoMixedStatesAndSelectionRanksMatchOracle) {
    auto report = analyze_mixed_states(s, events);
    EXPECT_TRUE(report.no_mixed_states);
    ASSERT_EQ(report.witnesses.size(), 13u);
    for (const auto &w : report.witnesses) {
        EXPECT_TRUE(w.common_rays.empty());
        EXPECT_LE(w.max_nullity(), 1u);
        if (w.witness < 9) {
            continue;
        }
        ASSERT_EQ(w.event_count, 3u);
        EXPECT_EQ(w.selection_count, 27);

        // Rank histogram over all 27 selections, by cross products.
        std::map<std::size_t, long long> expected;
        auto options = detail::blocking_options(events, w.witness);
        for (auto a : options[0]) {
            for (auto b : options[1]) {
                for (auto c : options[2]) {
                    std::size_t r = 0;
                    if (oracle::det3(rays[a], rays[b], rays[c]) != 0) {
                        r = 3;
                    } else if (!oracle::parallel(rays[a], rays[b]) || !oracle::parallel(rays[a], rays[c]) ||
                               !oracle::parallel(rays[b], rays[c])) {
                        r = 2;
                    } else {
                        r = 1;
                    }
                    ++expected[r];
                }
            }
        }
        std::map<std::size_t, long long> got;
        Integer total = 0;
        for (const auto &c : w.classes) {
            EXPECT_EQ(c.rank + c.nullity, 3u);
            got[c.rank] += static_cast<long long>(c.count);
            total += c.count;
        }
        EXPECT_EQ(total, 27);
        EXPECT_EQ(got, expected) << s.label(w.witness);
        EXPECT_GE(w.min_rank(), 2u);
    }
}

TEST_F(YuOh, WitnessesLieOutsideBases) {
    auto search = find_contextual_pure_states(s, events);
    auto check = check_witnesses_outside_bases(s, search);
    EXPECT_TRUE(check.ok);
    EXPECT_TRUE(check.offending.empty());
}

TEST(SelectionClasses, CountsMultiplyOut) {
    Scenario s = yu_oh::scenario();
    std::vector<std::vector<std::size_t>> options{{0, 1}, {0, 1, 2}, {4}};
    auto classes = selection_classes(s, options);
    Integer total = 0;
    for (const auto &c : classes) {
        total += c.count;
        EXPECT_EQ(c.selection.size(), 3u);
    }
    EXPECT_EQ(total, 6);
    EXPECT_TRUE(selection_classes(s, {}).empty());
    EXPECT_TRUE(selection_classes(s, {{0}, {}}).empty());
}

TEST(ExtendedFixture, DegenerateWitnessIsReported) {
    Scenario s = load_scenario(data_dir + "/yu-oh-extended.scenario").with_contexts();
    auto events = enumerate_assignments(s);
    auto search = find_contextual_pure_states(s, events);
    EXPECT_EQ(search.states().size(), 8u);
    for (const auto &e : search.entries) {
        EXPECT_TRUE(e.confirmed);
    }
    ASSERT_EQ(search.undetermined.size(), 1u);
    const auto &u = search.undetermined[0];
    EXPECT_EQ(s.label(u.witness), "vD");
    std::size_t e = s.index_of("vE");
    EXPECT_EQ(u.selection, (std::vector<std::size_t>{e, e, e}));
    EXPECT_EQ(u.basis.size(), 2u);

    auto mixed = analyze_mixed_states(s, events);
    EXPECT_FALSE(mixed.no_mixed_states);
    bool found = false;
    for (const auto &w : mixed.witnesses) {
        if (w.witness == s.index_of("vD")) {
            found = true;
            EXPECT_EQ(w.common_rays, (std::vector<std::size_t>{e}));
            EXPECT_EQ(w.max_nullity(), 2u);
        }
    }
    EXPECT_TRUE(found);

    auto ref = oracle::contextual_states(
        [&] {
            std::vector<oracle::IVec> r;
            for (const auto &ray : s.rays()) {
                r.push_back(to_ints(ray.vector));
            }
            return r;
        }(),
        supports(events));
    std::vector<oracle::WitnessedState> got;
    for (const auto &x : search.entries) {
        got.push_back({x.witness, oracle::primitive(to_ints(x.state))});
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, ref);
}

TEST(GaussianFixture, StatesAreContextualOnlyWhenBlocked) {
    Scenario s = load_scenario(data_dir + "/gaussian.scenario").with_contexts();
    auto events = enumerate_assignments(s);
    for (const char *text : {"1,0", "1,1", "1,0+1i", "2,1"}) {
        auto st = parse_state(text);
        EXPECT_EQ(is_logically_contextual(s, events, st).contextual, !noncontextuality_oracle(s, events, st))
            << text;
    }
    EXPECT_TRUE(find_contextual_pure_states(s, events).entries.empty());
}

}  // namespace
}  // namespace ctxkit
