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

// Hardy-type paradoxes and their single-observable witnesses.

#pragma once

#include <array>
#include <cstddef>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "ctxkit/assignments.hpp"
#include "ctxkit/contextuality.hpp"
#include "ctxkit/exact.hpp"
#include "ctxkit/scenario.hpp"

namespace ctxkit {

/// rho(witness) > 0 and rho(z) = 0 for every z in zero_set, where zero_set
/// meets every global event containing the witness.
struct HardyParadox {
    QuantumState state;
    std::size_t witness;
    std::vector<std::size_t> zero_set;  // ascending ray indices
    Rational sp;
};

struct ParadoxDerivation {
    std::vector<HardyParadox> paradoxes;
    std::string reason;  // set when no paradox was derived
};

namespace detail {

/// Smallest subset of `pool` meeting every set in `events`; among subsets of
/// that size the lexicographically first. Empty if none exists.
inline std::vector<std::size_t> minimum_hitting_set(const std::vector<std::size_t> &pool,
                                                    const std::vector<std::vector<std::size_t>> &events) {
    auto hits = [&](const std::vector<std::size_t> &chosen) {
        for (const auto &e : events) {
            bool met = false;
            for (auto c : chosen) {
                met = met || std::find(e.begin(), e.end(), c) != e.end();
            }
            if (!met) {
                return false;
            }
        }
        return true;
    };
    for (std::size_t k = 1; k <= pool.size(); ++k) {
        std::vector<std::size_t> pos(k);
        for (std::size_t i = 0; i < k; ++i) {
            pos[i] = i;
        }
        while (true) {
            std::vector<std::size_t> chosen;
            for (auto p : pos) {
                chosen.push_back(pool[p]);
            }
            if (hits(chosen)) {
                return chosen;
            }
            std::size_t i = k;
            while (i > 0 && pos[i - 1] == pool.size() - k + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++pos[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
    return {};
}

}  // namespace detail

/// One paradox per ray with non-zero probability whose global events can all
/// be blocked by zero-probability rays.
inline ParadoxDerivation derive_paradoxes(const Scenario &s, std::span<const KSAssignment> assignments,
                                          const QuantumState &state) {
    ParadoxDerivation out;
    if (!is_logically_contextual(s, assignments, state).contextual) {
        out.reason = "state is not logically contextual";
        return out;
    }
    PossibilisticModel model = possibilistic_model(s, state);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!model[k]) {
            continue;
        }
        std::vector<std::vector<std::size_t>> events;
        std::vector<std::size_t> pool;
        bool blockable = true;
        for (const auto &a : assignments) {
            if (!a.contains(k)) {
                continue;
            }
            std::vector<std::size_t> zeros;
            for (auto u : a.support()) {
                if (!model[u]) {
                    zeros.push_back(u);
                    pool.push_back(u);
                }
            }
            blockable = blockable && !zeros.empty();
            events.push_back(std::move(zeros));
        }
        if (events.empty() || !blockable) {
            continue;
        }
        pool = detail::distinct_sorted(std::move(pool));
        auto zero_set = detail::minimum_hitting_set(pool, events);
        out.paradoxes.push_back({state, k, std::move(zero_set), model.probabilities[k]});
    }
    return out;
}

inline Rational success_probability(const HardyParadox &p) {
    return p.sp;
}

/// Percentage to three significant figures, e.g. 1/9 -> "11.1%".
inline std::string format_percent(const Rational &q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g%%", static_cast<double>(q) * 100.0);
    return buf;
}

struct WitnessObservable {
    std::array<Matrix, 3> projectors;
    std::array<Rational, 3> eigenvalues;
    std::array<std::size_t, 3> source;  // Gram-Schmidt input: lower zero ray, higher zero ray, witness
    std::array<Vector, 3> directions;   // orthogonalized rays, canonical

    /// sum of a_i P_i
    Matrix observable() const {
        Matrix a(projectors[0].rows(), projectors[0].cols());
        for (std::size_t i = 0; i < 3; ++i) {
            a = a + Scalar(eigenvalues[i]) * projectors[i];
        }
        return a;
    }
};

/// Orthogonalizes (lower zero ray, higher zero ray, witness). The first two
/// outcomes then never occur and the third always does.
inline WitnessObservable build_witness_observable(const Scenario &s, const HardyParadox &p,
                                                  std::array<Rational, 3> eigenvalues = {1, 2, 3}) {
    if (p.zero_set.size() != 2) {
        throw ValidationError("witness observable needs exactly 2 zero rays, paradox has " +
                              std::to_string(p.zero_set.size()));
    }
    if (s.dim() != 3) {
        throw ValidationError("witness observable needs dimension 3, scenario has " + std::to_string(s.dim()));
    }
    if (eigenvalues[0] == eigenvalues[1] || eigenvalues[0] == eigenvalues[2] || eigenvalues[1] == eigenvalues[2]) {
        throw ValidationError("eigenvalues must be distinct");
    }
    WitnessObservable w;
    w.eigenvalues = eigenvalues;
    w.source = {std::min(p.zero_set[0], p.zero_set[1]), std::max(p.zero_set[0], p.zero_set[1]), p.witness};
    std::vector<Vector> input{s.vector(w.source[0]), s.vector(w.source[1]), s.vector(w.source[2])};
    auto ortho = gram_schmidt(input);
    for (std::size_t i = 0; i < 3; ++i) {
        w.directions[i] = ortho[i];
        w.projectors[i] = rank1_projector(ortho[i]);
    }
    return w;
}

struct ObservableCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

inline ObservableCheck verify_observable(const HardyParadox &p, const WitnessObservable &w) {
    ObservableCheck out;
    auto fail = [&](std::string what) {
        out.ok = false;
        out.failures.push_back(std::move(what));
    };
    const std::size_t n = p.state.dim();
    Matrix sum(n, n);
    for (std::size_t i = 0; i < 3; ++i) {
        const Matrix &pi = w.projectors[i];
        std::string name = "P" + std::to_string(i + 1);
        if (pi.rows() != n || pi.cols() != n) {
            fail(name + " has the wrong shape");
            return out;
        }
        if (!pi.is_hermitian()) {
            fail(name + " not Hermitian");
        }
        if (!(pi * pi == pi)) {
            fail(name + " not idempotent");
        }
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!(pi * w.projectors[j] == Matrix(n, n))) {
                fail(name + "P" + std::to_string(j + 1) + " != 0");
            }
        }
        sum = sum + pi;
    }
    if (!(sum == Matrix::identity(n))) {
        fail("P1+P2+P3 != I");
    }
    if (p.state.expectation(w.projectors[0]) != 0) {
        fail("tr(rho P1) != 0");
    }
    if (p.state.expectation(w.projectors[1]) != 0) {
        fail("tr(rho P2) != 0");
    }
    if (p.state.expectation(w.projectors[2]) != 1) {
        fail("tr(rho P3) != 1");
    }
    if (p.state.is_pure() && !(w.projectors[2] == rank1_projector(p.state.ray()))) {
        fail("P3 != projector onto the state");
    }
    return out;
}

struct ContradictionReplay {
    std::vector<std::size_t> witness_events;  // assignment indices containing the witness
    std::vector<std::size_t> forced_zero;     // assignment indices meeting the zero set
    bool witness_marginal = true;             // OR of p(lambda) over the witness events
    bool contradiction = false;
};

/// Forces p(lambda) = 0 on every global event meeting the zero set, leaves the
/// rest at 1, and recomputes the marginal of the witness. A contradiction is a
/// zero marginal against a non-zero probability for the witness.
inline ContradictionReplay replay_contradiction(std::span<const KSAssignment> assignments, const HardyParadox &p) {
    ContradictionReplay out;
    out.witness_marginal = false;
    for (std::size_t e = 0; e < assignments.size(); ++e) {
        bool meets = false;
        for (auto z : p.zero_set) {
            meets = meets || assignments[e].contains(z);
        }
        if (meets) {
            out.forced_zero.push_back(e);
        }
        if (assignments[e].contains(p.witness)) {
            out.witness_events.push_back(e);
            out.witness_marginal = out.witness_marginal || !meets;
        }
    }
    out.contradiction = !out.witness_marginal && p.sp > 0;
    return out;
}

}  // namespace ctxkit
