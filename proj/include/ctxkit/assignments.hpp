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

// Kochen-Specker assignments (global events) of a scenario.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctxkit/scenario.hpp"

namespace ctxkit {

/// A 0/1 labelling of the rays of a scenario. The rays labelled 1 form the
/// support, i.e. the set-form of the global event.
class KSAssignment {
   public:
    KSAssignment() = default;
    explicit KSAssignment(std::vector<bool> bits) : bits_(std::move(bits)) {}

    static KSAssignment from_support(std::size_t size, std::span<const std::size_t> support) {
        std::vector<bool> bits(size, false);
        for (auto i : support) {
            bits.at(i) = true;
        }
        return KSAssignment(std::move(bits));
    }

    std::size_t size() const noexcept {
        return bits_.size();
    }
    bool operator[](std::size_t i) const {
        return bits_[i];
    }
    bool contains(std::size_t i) const {
        return bits_.at(i);
    }
    const std::vector<bool> &bits() const noexcept {
        return bits_;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i]) {
                out.push_back(i);
            }
        }
        return out;
    }

    std::string bitstring() const {
        std::string out;
        out.reserve(bits_.size());
        for (bool b : bits_) {
            out += b ? '1' : '0';
        }
        return out;
    }

    friend bool operator==(const KSAssignment &a, const KSAssignment &b) {
        return a.bits_ == b.bits_;
    }

   private:
    std::vector<bool> bits_;
};

/// Orders assignments lexicographically by their support index tuples.
inline bool support_less(const KSAssignment &a, const KSAssignment &b) {
    auto sa = a.support();
    auto sb = b.support();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

inline void sort_assignments(std::vector<KSAssignment> &v) {
    std::sort(v.begin(), v.end(), support_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// (O): no two orthogonal rays both 1. (C): every Basis context has exactly one 1.
inline bool verify_assignment(const Scenario &s, const KSAssignment &a) {
    if (a.size() != s.size()) {
        throw ValidationError("assignment covers " + std::to_string(a.size()) + " rays, scenario has " +
                              std::to_string(s.size()));
    }
    for (auto [i, j] : s.edges()) {
        if (a[i] && a[j]) {
            return false;
        }
    }
    for (const auto *c : s.basis_contexts()) {
        std::size_t ones = 0;
        for (auto m : c->members) {
            ones += a[m] ? 1 : 0;
        }
        if (ones != 1) {
            return false;
        }
    }
    return true;
}

namespace detail {

struct Backtracker {
    const Scenario &s;
    // Basis contexts that become fully assigned once ray k is decided.
    std::vector<std::vector<const Context *>> closing;
    std::vector<bool> bits;
    std::vector<KSAssignment> out;

    explicit Backtracker(const Scenario &scenario) : s(scenario), closing(scenario.size()), bits(scenario.size()) {
        for (const auto *c : s.basis_contexts()) {
            closing[c->members.back()].push_back(c);
        }
    }

    void run(std::size_t k) {
        if (k == s.size()) {
            out.emplace_back(bits);
            return;
        }
        for (int value = 0; value < 2; ++value) {
            if (value == 1) {
                bool clash = false;
                for (std::size_t j = 0; j < k && !clash; ++j) {
                    clash = bits[j] && s.adjacent(j, k);
                }
                if (clash) {
                    continue;
                }
            }
            bits[k] = value == 1;
            bool complete = true;
            for (const auto *c : closing[k]) {
                std::size_t ones = 0;
                for (auto m : c->members) {
                    ones += bits[m] ? 1 : 0;
                }
                complete = complete && ones == 1;
            }
            if (complete) {
                run(k + 1);
            }
        }
        bits[k] = false;
    }
};

}  // namespace detail

/// Every KS-assignment, by depth-first search over rays in index order with
/// (O) checked on each 1 and (C) checked when a basis is fully decided.
/// Output is ordered by support tuple.
inline std::vector<KSAssignment> enumerate_assignments(const Scenario &s) {
    detail::Backtracker bt(s);
    bt.run(0);
    sort_assignments(bt.out);
    return std::move(bt.out);
}

/// Every KS-assignment, built basis-first: choose one member per Basis context
/// so that the choices are pairwise non-orthogonal, then extend by each
/// independent set of the residual graph (rays in no basis, including the
/// empty set) that keeps the whole support independent.
inline std::vector<KSAssignment> enumerate_assignments_by_bases(const Scenario &s) {
    auto bases = s.basis_contexts();
    std::vector<bool> in_basis(s.size(), false);
    for (const auto *c : bases) {
        for (auto m : c->members) {
            in_basis[m] = true;
        }
    }
    std::vector<std::size_t> residual;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!in_basis[i]) {
            residual.push_back(i);
        }
    }

    auto independent_with = [&](const std::vector<std::size_t> &set, std::size_t v) {
        return std::none_of(set.begin(), set.end(), [&](std::size_t u) { return s.adjacent(u, v); });
    };

    std::vector<KSAssignment> out;
    std::vector<std::size_t> picks;

    // Extends `support` by residual rays from position r onwards.
    auto extend = [&](auto &self, std::vector<std::size_t> &support, std::size_t r) -> void {
        if (r == residual.size()) {
            out.push_back(KSAssignment::from_support(s.size(), support));
            return;
        }
        self(self, support, r + 1);
        if (independent_with(support, residual[r])) {
            support.push_back(residual[r]);
            self(self, support, r + 1);
            support.pop_back();
        }
    };

    auto choose = [&](auto &self, std::size_t b) -> void {
        if (b == bases.size()) {
            std::vector<std::size_t> support = picks;
            std::sort(support.begin(), support.end());
            support.erase(std::unique(support.begin(), support.end()), support.end());
            extend(extend, support, 0);
            return;
        }
        for (auto m : bases[b]->members) {
            bool repeat = std::find(picks.begin(), picks.end(), m) != picks.end();
            if (!repeat && !independent_with(picks, m)) {
                continue;
            }
            picks.push_back(m);
            self(self, b + 1);
            picks.pop_back();
        }
    };
    choose(choose, 0);
    sort_assignments(out);
    return out;
}

/// The sub-list of assignments with ray `v` set to 1, order preserved.
inline std::vector<KSAssignment> events_containing(std::span<const KSAssignment> assignments, std::size_t v) {
    std::vector<KSAssignment> out;
    for (const auto &a : assignments) {
        if (a.contains(v)) {
            out.push_back(a);
        }
    }
    return out;
}

inline std::vector<KSAssignment> events_containing(const Scenario &s, std::span<const KSAssignment> assignments,
                                                   std::string_view label) {
    return events_containing(assignments, s.index_of(label));
}

}  // namespace ctxkit
