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

// Independent reference computations for tests. Real integer vectors only,
// brute force wherever it is affordable, and no use of the library's own
// elimination, clique or search code.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = long long;
using IVec = std::vector<Int>;
using Q = boost::multiprecision::cpp_rational;
using QMat = std::array<std::array<Q, 3>, 3>;

inline Int dot(const IVec &a, const IVec &b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline IVec cross(const IVec &a, const IVec &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Cofactor expansion along the first row.
inline Int det3(const IVec &a, const IVec &b, const IVec &c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline bool is_zero(const IVec &v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

/// All 2x2 minors vanish.
inline bool parallel(const IVec &a, const IVec &b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) {
                return false;
            }
        }
    }
    return true;
}

/// Divided by the gcd of its entries, first non-zero entry positive.
inline IVec primitive(IVec v) {
    Int g = 0;
    for (auto x : v) {
        g = std::gcd(g, x < 0 ? -x : x);
    }
    Int sign = 1;
    for (auto x : v) {
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    }
    for (auto &x : v) {
        x = x / g * sign;
    }
    return v;
}

/// Maximal pairwise-orthogonal subsets by checking every subset mask.
inline std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<IVec> &rays) {
    const std::size_t n = rays.size();
    auto clique = [&](std::uint32_t mask) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if ((mask >> i & 1) && (mask >> j & 1) && dot(rays[i], rays[j]) != 0) {
                    return false;
                }
            }
        }
        return true;
    };
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!clique(mask)) {
            continue;
        }
        bool maximal = true;
        for (std::size_t k = 0; k < n && maximal; ++k) {
            if (!(mask >> k & 1) && clique(mask | (1u << k))) {
                maximal = false;
            }
        }
        if (!maximal) {
            continue;
        }
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                members.push_back(i);
            }
        }
        out.push_back(members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Supports of all 0/1 labellings with no orthogonal pair both 1 and exactly
/// one 1 in every orthogonal basis, checked over all 2^n bit strings.
inline std::vector<std::vector<std::size_t>> ks_supports(const std::vector<IVec> &rays, std::size_t dim) {
    const std::size_t n = rays.size();
    std::vector<std::vector<std::size_t>> bases;
    for (auto &c : maximal_cliques(rays)) {
        if (c.size() == dim) {
            bases.push_back(c);
        }
    }
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                ok = !((mask >> i & 1) && (mask >> j & 1) && dot(rays[i], rays[j]) == 0);
            }
        }
        for (const auto &b : bases) {
            int ones = 0;
            for (auto m : b) {
                ones += (mask >> m & 1) ? 1 : 0;
            }
            ok = ok && ones == 1;
        }
        if (!ok) {
            continue;
        }
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                support.push_back(i);
            }
        }
        out.push_back(support);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct WitnessedState {
    std::size_t witness;
    IVec state;
    bool operator==(const WitnessedState &) const = default;
    bool operator<(const WitnessedState &o) const {
        return std::tie(witness, state) < std::tie(o.witness, o.state);
    }
};

/// Dimension 3 only: for each ray k and each choice of one other ray per event
/// containing k, the common orthogonal line via a cross product.
inline std::vector<WitnessedState> contextual_states(const std::vector<IVec> &rays,
                                                     const std::vector<std::vector<std::size_t>> &supports) {
    std::vector<WitnessedState> out;
    for (std::size_t k = 0; k < rays.size(); ++k) {
        std::vector<std::vector<std::size_t>> options;
        for (const auto &s : supports) {
            if (std::find(s.begin(), s.end(), k) == s.end()) {
                continue;
            }
            std::vector<std::size_t> others;
            for (auto u : s) {
                if (u != k) {
                    others.push_back(u);
                }
            }
            options.push_back(others);
        }
        if (options.empty()) {
            continue;
        }
        std::vector<std::size_t> digit(options.size(), 0);
        bool done = false;
        while (!done) {
            std::vector<std::size_t> chosen;
            for (std::size_t i = 0; i < options.size(); ++i) {
                chosen.push_back(options[i][digit[i]]);
            }
            IVec psi;
            for (std::size_t i = 0; i < chosen.size() && psi.empty(); ++i) {
                for (std::size_t j = i + 1; j < chosen.size() && psi.empty(); ++j) {
                    IVec c = cross(rays[chosen[i]], rays[chosen[j]]);
                    if (!is_zero(c)) {
                        psi = c;
                    }
                }
            }
            bool line = !psi.empty() && std::all_of(chosen.begin(), chosen.end(), [&](std::size_t r) {
                return dot(rays[r], psi) == 0;
            });
            if (line && dot(rays[k], psi) != 0) {
                out.push_back({k, primitive(psi)});
            }
            std::size_t i = options.size();
            while (true) {
                if (i == 0) {
                    done = true;
                    break;
                }
                --i;
                if (++digit[i] < options[i].size()) {
                    break;
                }
                digit[i] = 0;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Smallest set of zero-probability rays meeting every event containing the
/// witness, lexicographically first among equals. Brute force over masks.
inline std::vector<std::size_t> minimum_zero_cover(const std::vector<IVec> &rays,
                                                   const std::vector<std::vector<std::size_t>> &supports,
                                                   const IVec &state, std::size_t witness) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (dot(rays[i], state) == 0) {
            zeros.push_back(i);
        }
    }
    std::vector<std::size_t> best;
    bool found = false;
    for (std::uint32_t mask = 1; mask < (1u << zeros.size()); ++mask) {
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            if (mask >> i & 1) {
                pick.push_back(zeros[i]);
            }
        }
        bool hits = true;
        for (const auto &s : supports) {
            if (std::find(s.begin(), s.end(), witness) == s.end()) {
                continue;
            }
            hits = hits && std::any_of(pick.begin(), pick.end(), [&](std::size_t z) {
                       return std::find(s.begin(), s.end(), z) != s.end();
                   });
        }
        if (hits && (!found || pick.size() < best.size() || (pick.size() == best.size() && pick < best))) {
            best = pick;
            found = true;
        }
    }
    return best;
}

inline QMat projector(const IVec &u) {
    QMat p;
    Int n = dot(u, u);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            p[r][c] = Q(u[r] * u[c], n);
        }
    }
    return p;
}

/// Projectors of the orthogonalized sequence (a, b, c), integer arithmetic.
inline std::array<QMat, 3> gram_schmidt_projectors(const IVec &a, const IVec &b, const IVec &c) {
    IVec u2(3);
    for (std::size_t i = 0; i < 3; ++i) {
        u2[i] = dot(a, a) * b[i] - dot(a, b) * a[i];
    }
    IVec u3 = cross(a, u2);
    if (dot(u3, c) < 0) {
        for (auto &x : u3) {
            x = -x;
        }
    }
    return {projector(a), projector(u2), projector(u3)};
}

/// Rational coordinates with numerators in [-10, 10] and denominators in
/// [1, 10], drawn from the raw output of a fixed-seed mt19937_64.
class RationalStateGenerator {
   public:
    explicit RationalStateGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Returns (numerator, denominator) pairs; never all zero.
    std::vector<std::pair<Int, Int>> next(std::size_t dim) {
        while (true) {
            std::vector<std::pair<Int, Int>> out;
            bool nonzero = false;
            for (std::size_t i = 0; i < dim; ++i) {
                Int num = static_cast<Int>(rng_() % 21) - 10;
                Int den = static_cast<Int>(rng_() % 10) + 1;
                nonzero = nonzero || num != 0;
                out.emplace_back(num, den);
            }
            if (nonzero) {
                return out;
            }
        }
    }

    /// The same coordinates scaled to an integer vector.
    static IVec to_integers(const std::vector<std::pair<Int, Int>> &coords) {
        Int l = 1;
        for (auto [n, d] : coords) {
            l = std::lcm(l, d);
        }
        IVec v;
        for (auto [n, d] : coords) {
            v.push_back(n * (l / d));
        }
        return v;
    }

    static std::string to_literal(const std::vector<std::pair<Int, Int>> &coords) {
        std::string out;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            out += (i ? "," : "") + std::to_string(coords[i].first) + "/" + std::to_string(coords[i].second);
        }
        return out;
    }

   private:
    std::mt19937_64 rng_;
};

/// The Yu-Oh rays in bundled order.
inline std::vector<IVec> yu_oh_rays() {
    return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, -1}, {1, 0, -1}, {1, -1, 0}, {0, 1, 1},
            {1, 0, 1}, {1, 1, 0}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}};
}

}  // namespace oracle
