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

// Seeded Born-rule measurement sampling.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctxkit/contextuality.hpp"
#include "ctxkit/exact.hpp"

namespace ctxkit {

/// xoshiro256** 1.0 (Blackman and Vigna), state filled from the seed by
/// splitmix64. Fixed so that counts are bit-reproducible for a given seed.
class Xoshiro256StarStar {
   public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        for (auto &word : s_) {
            seed += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = seed;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

   private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

struct SimulationResult {
    std::uint64_t shots = 0;
    std::vector<std::uint64_t> counts;
    std::vector<double> frequencies;
    std::vector<Rational> probabilities;   // exact tr(rho P_i)
    std::vector<double> standard_errors;   // sqrt(f (1 - f) / shots)
};

/// Checks that the projectors are Hermitian, idempotent, mutually orthogonal
/// and sum to the identity of the given dimension.
inline void validate_measurement(std::span<const Matrix> projectors, std::size_t dim) {
    if (projectors.empty()) {
        throw ValidationError("measurement has no outcomes");
    }
    Matrix sum(dim, dim);
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        const Matrix &p = projectors[i];
        std::string name = "projector " + std::to_string(i + 1);
        if (p.rows() != dim || p.cols() != dim) {
            throw ValidationError(name + " has the wrong dimension");
        }
        if (!p.is_hermitian() || !(p * p == p)) {
            throw ValidationError(name + " is not an orthogonal projector");
        }
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            if (!(p * projectors[j] == Matrix(dim, dim))) {
                throw ValidationError(name + " is not orthogonal to projector " + std::to_string(j + 1));
            }
        }
        sum += p;
    }
    if (!(sum == Matrix::identity(dim))) {
        throw ValidationError("projectors do not sum to the identity");
    }
}

/// {P_v, I - P_v}
inline std::vector<Matrix> binary_measurement(const Vector &v) {
    Matrix p = rank1_projector(v);
    return {p, Matrix::identity(v.size()) - p};
}

/// Draws `shots` outcomes by inverse CDF over the exact outcome
/// probabilities. Only the cumulative sums are floating point.
inline SimulationResult simulate_measurement(const QuantumState &state, std::span<const Matrix> projectors,
                                             std::uint64_t shots, std::uint64_t seed) {
    validate_measurement(projectors, state.dim());
    SimulationResult out;
    out.shots = shots;
    std::vector<double> cdf;
    double acc = 0.0;
    std::size_t last_possible = 0;
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        out.probabilities.push_back(state.expectation(projectors[i]));
        acc += static_cast<double>(out.probabilities.back());
        cdf.push_back(acc);
        if (out.probabilities.back() != 0) {
            last_possible = i;
        }
    }
    out.counts.assign(projectors.size(), 0);
    Xoshiro256StarStar rng(seed);
    for (std::uint64_t n = 0; n < shots; ++n) {
        double u = rng.uniform();
        std::size_t outcome = last_possible;
        for (std::size_t i = 0; i < cdf.size(); ++i) {
            if (out.probabilities[i] != 0 && u < cdf[i]) {
                outcome = i;
                break;
            }
        }
        ++out.counts[outcome];
    }
    for (auto c : out.counts) {
        double f = shots == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(shots);
        out.frequencies.push_back(f);
        out.standard_errors.push_back(shots == 0 ? 0.0 : std::sqrt(f * (1.0 - f) / static_cast<double>(shots)));
    }
    return out;
}

}  // namespace ctxkit
