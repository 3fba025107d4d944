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

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxkit/error.hpp"
#include "ctxkit/exact.hpp"

namespace ctxkit {

enum class Field {
    rational,
    gaussian,
};

inline std::string_view to_string(Field f) {
    return f == Field::rational ? "rational" : "gaussian";
}

/// A labelled quantum event. The vector is stored as its canonical ray.
struct Ray {
    std::string label;
    Vector vector;
};

enum class ContextKind {
    basis,
    deficient,
};

/// A maximal set of pairwise orthogonal rays. Deficient contexts carry a basis
/// of their orthogonal complement (as canonical rays).
struct Context {
    std::vector<std::size_t> members;
    ContextKind kind = ContextKind::deficient;
    std::vector<Vector> complement;

    bool contains(std::size_t ray) const {
        return std::binary_search(members.begin(), members.end(), ray);
    }
};

class Scenario;
inline std::vector<Context> enumerate_contexts(const Scenario &s);

/// A finite set of rays in C^dim together with its exclusivity (orthogonality)
/// graph. Immutable once built; contexts are attached by with_contexts().
class Scenario {
   public:
    Scenario(std::string name, std::size_t dim, Field field, std::vector<Ray> rays)
        : name_(std::move(name)), dim_(dim), field_(field), rays_(std::move(rays)) {
        if (dim_ < 2) {
            throw ValidationError("scenario dimension must be at least 2");
        }
        if (rays_.empty()) {
            throw ValidationError("scenario has no rays");
        }
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            Ray &r = rays_[i];
            if (r.vector.size() != dim_) {
                throw ValidationError("dimension mismatch: ray " + r.label + " has " +
                                      std::to_string(r.vector.size()) + " coordinates, scenario dimension is " +
                                      std::to_string(dim_));
            }
            if (r.vector.is_zero()) {
                throw ValidationError("ray " + r.label + " is the zero vector");
            }
            if (field_ == Field::rational && !r.vector.is_real()) {
                throw ValidationError("ray " + r.label + " has complex entries in a rational scenario");
            }
            r.vector = canonical_ray(r.vector);
            for (std::size_t j = 0; j < i; ++j) {
                if (rays_[j].label == r.label) {
                    throw ValidationError("duplicate label " + r.label);
                }
                if (rays_[j].vector == r.vector) {
                    throw ValidationError("duplicate ray: " + r.label + " is a scalar multiple of " + rays_[j].label);
                }
            }
        }
        adjacency_.assign(rays_.size(), std::vector<char>(rays_.size(), 0));
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            for (std::size_t j = i + 1; j < rays_.size(); ++j) {
                if (orthogonal(rays_[i].vector, rays_[j].vector)) {
                    adjacency_[i][j] = adjacency_[j][i] = 1;
                }
            }
        }
    }

    const std::string &name() const noexcept {
        return name_;
    }
    std::size_t dim() const noexcept {
        return dim_;
    }
    Field field() const noexcept {
        return field_;
    }
    std::size_t size() const noexcept {
        return rays_.size();
    }
    const std::vector<Ray> &rays() const noexcept {
        return rays_;
    }
    const Ray &ray(std::size_t i) const {
        return rays_.at(i);
    }
    const std::string &label(std::size_t i) const {
        return rays_.at(i).label;
    }
    const Vector &vector(std::size_t i) const {
        return rays_.at(i).vector;
    }

    std::optional<std::size_t> find(std::string_view label) const {
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (rays_[i].label == label) {
                return i;
            }
        }
        return std::nullopt;
    }
    std::size_t index_of(std::string_view label) const {
        if (auto i = find(label)) {
            return *i;
        }
        throw UnknownLabelError(std::string(label));
    }

    /// True iff rays i and j are distinct and orthogonal.
    bool adjacent(std::size_t i, std::size_t j) const {
        return adjacency_[i][j] != 0;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t j = i + 1; j < size(); ++j) {
                if (adjacent(i, j)) {
                    out.emplace_back(i, j);
                }
            }
        }
        return out;
    }

    bool has_contexts() const noexcept {
        return contexts_.has_value();
    }
    const std::vector<Context> &contexts() const {
        if (!contexts_) {
            throw std::logic_error("contexts have not been enumerated for scenario " + name_);
        }
        return *contexts_;
    }

    std::vector<const Context *> basis_contexts() const {
        std::vector<const Context *> out;
        for (const auto &c : contexts()) {
            if (c.kind == ContextKind::basis) {
                out.push_back(&c);
            }
        }
        return out;
    }

    /// Copy of this scenario with its contexts enumerated.
    Scenario with_contexts() const {
        Scenario copy = *this;
        copy.contexts_ = enumerate_contexts(*this);
        return copy;
    }

   private:
    std::string name_;
    std::size_t dim_;
    Field field_;
    std::vector<Ray> rays_;
    std::vector<std::vector<char>> adjacency_;
    std::optional<std::vector<Context>> contexts_;
};

namespace detail {

inline bool is_label_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
           c == '.';
}

inline std::vector<std::pair<std::string_view, std::size_t>> split_ws(std::string_view line) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.emplace_back(line.substr(start, i - start), start);
        }
    }
    return out;
}

}  // namespace detail

/// Parses the scenario text format:
///
///     # comment
///     scenario NAME dim D field rational|gaussian
///     LABEL: c1,c2,...,cD
///
/// The returned scenario has its exclusivity graph built but no contexts yet.
inline Scenario parse_scenario(std::string_view text) {
    std::optional<std::string> name;
    std::size_t dim = 0;
    Field field = Field::rational;
    std::vector<Ray> rays;

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

        if (!name) {
            auto tokens = detail::split_ws(line);
            if (tokens.size() != 6 || tokens[0].first != "scenario" || tokens[2].first != "dim" ||
                tokens[4].first != "field") {
                throw ParseError("expected header 'scenario NAME dim D field (rational|gaussian)'", line_no, first + 1);
            }
            const auto &[dim_text, dim_col] = tokens[3];
            if (dim_text.empty() || detail::scan_digits(dim_text, 0) != dim_text.size() || dim_text.size() > 6) {
                throw ParseError("invalid dimension '" + std::string(dim_text) + "'", line_no, dim_col + 1);
            }
            dim = std::stoul(std::string(dim_text));
            if (dim < 2) {
                throw ParseError("dimension must be at least 2", line_no, dim_col + 1);
            }
            if (tokens[5].first == "rational") {
                field = Field::rational;
            } else if (tokens[5].first == "gaussian") {
                field = Field::gaussian;
            } else {
                throw ParseError("unknown field '" + std::string(tokens[5].first) + "'", line_no,
                                 tokens[5].second + 1);
            }
            name = std::string(tokens[1].first);
            continue;
        }

        std::size_t colon = line.find(':', first);
        if (colon == std::string_view::npos) {
            throw ParseError("expected 'LABEL: c1,...,cD'", line_no, first + 1);
        }
        std::string_view label = line.substr(first, colon - first);
        while (!label.empty() && (label.back() == ' ' || label.back() == '\t')) {
            label.remove_suffix(1);
        }
        if (label.empty()) {
            throw ParseError("empty ray label", line_no, first + 1);
        }
        for (std::size_t k = 0; k < label.size(); ++k) {
            if (!detail::is_label_char(label[k])) {
                throw ParseError("invalid character in ray label", line_no, first + k + 1);
            }
        }
        std::string_view body = line.substr(colon + 1);
        Vector v = parse_vector(body, SourcePos{line_no, colon + 2}, field == Field::gaussian);
        if (v.size() != dim) {
            throw ValidationError("dimension mismatch: ray " + std::string(label) + " on line " +
                                  std::to_string(line_no) + " has " + std::to_string(v.size()) +
                                  " coordinates, expected " + std::to_string(dim));
        }
        rays.push_back(Ray{std::string(label), std::move(v)});
    }
    if (!name) {
        throw ParseError("missing scenario header", line_no, 1);
    }
    return Scenario(std::move(*name), dim, field, std::move(rays));
}

inline std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading '" + path.string() + "'");
    }
    return buf.str();
}

inline Scenario load_scenario(const std::filesystem::path &path) {
    return parse_scenario(read_text_file(path));
}

/// Canonical text form; parse_scenario(format_scenario(s)) reproduces s.
inline std::string format_scenario(const Scenario &s) {
    std::string out = "scenario " + s.name() + " dim " + std::to_string(s.dim()) + " field " +
                      std::string(to_string(s.field())) + "\n";
    for (const auto &r : s.rays()) {
        std::string coords = r.vector.str();
        out += r.label + ": " + coords.substr(1, coords.size() - 2) + "\n";
    }
    return out;
}

namespace detail {

using IndexSet = std::vector<std::size_t>;

inline IndexSet neighbours_within(const Scenario &s, std::size_t v, const IndexSet &set) {
    IndexSet out;
    for (auto u : set) {
        if (s.adjacent(v, u)) {
            out.push_back(u);
        }
    }
    return out;
}

// Bron-Kerbosch with Tomita pivoting. Sets are kept sorted by ray index.
inline void bron_kerbosch(const Scenario &s, IndexSet &clique, IndexSet candidates, IndexSet excluded,
                          std::vector<IndexSet> &out) {
    if (candidates.empty() && excluded.empty()) {
        IndexSet sorted = clique;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    for (const IndexSet *pool : {&candidates, &excluded}) {
        for (auto u : *pool) {
            std::size_t score = neighbours_within(s, u, candidates).size();
            if (!have_pivot || score > best) {
                pivot = u;
                best = score;
                have_pivot = true;
            }
        }
    }
    IndexSet branch;
    for (auto v : candidates) {
        if (!s.adjacent(pivot, v)) {
            branch.push_back(v);
        }
    }
    for (auto v : branch) {
        clique.push_back(v);
        bron_kerbosch(s, clique, neighbours_within(s, v, candidates), neighbours_within(s, v, excluded), out);
        clique.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.insert(std::upper_bound(excluded.begin(), excluded.end(), v), v);
    }
}

}  // namespace detail

/// All maximal cliques of the exclusivity graph, sorted by member index tuple.
inline std::vector<Context> enumerate_contexts(const Scenario &s) {
    std::vector<detail::IndexSet> cliques;
    detail::IndexSet clique;
    detail::IndexSet all(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        all[i] = i;
    }
    detail::bron_kerbosch(s, clique, all, {}, cliques);
    std::sort(cliques.begin(), cliques.end());

    std::vector<Context> out;
    out.reserve(cliques.size());
    for (auto &members : cliques) {
        Context c;
        c.kind = members.size() == s.dim() ? ContextKind::basis : ContextKind::deficient;
        if (c.kind == ContextKind::deficient) {
            std::vector<Vector> rows;
            for (auto m : members) {
                rows.push_back(s.vector(m));
            }
            c.complement = nullspace(rows, s.dim());
        }
        c.members = std::move(members);
        out.push_back(std::move(c));
    }
    return out;
}

/// Number of Basis contexts containing each ray, indexed by ray.
inline std::vector<std::size_t> classify_rays(const Scenario &s) {
    std::vector<std::size_t> count(s.size(), 0);
    for (const auto *c : s.basis_contexts()) {
        for (auto m : c->members) {
            ++count[m];
        }
    }
    return count;
}

struct ComplementCollision {
    std::size_t first;   // context index
    std::size_t second;  // context index
};

struct ComplementCheck {
    bool distinct = true;
    std::vector<ComplementCollision> collisions;
};

/// Reports Deficient contexts of equal size whose orthogonal complements
/// coincide. With distinct complements, completing each Deficient context by
/// its complement never identifies two contexts with the same observable.
inline ComplementCheck check_distinct_complements(const Scenario &s) {
    ComplementCheck out;
    const auto &ctx = s.contexts();
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (ctx[i].kind != ContextKind::deficient) {
            continue;
        }
        for (std::size_t j = i + 1; j < ctx.size(); ++j) {
            if (ctx[j].kind != ContextKind::deficient || ctx[j].members.size() != ctx[i].members.size()) {
                continue;
            }
            std::vector<Vector> both = ctx[i].complement;
            both.insert(both.end(), ctx[j].complement.begin(), ctx[j].complement.end());
            if (rank(both) == ctx[i].complement.size()) {
                out.collisions.push_back({i, j});
            }
        }
    }
    out.distinct = out.collisions.empty();
    return out;
}

/// `{v1,v2,v3}`
inline std::string format_labels(const Scenario &s, const std::vector<std::size_t> &indices) {
    std::string out = "{";
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) {
            out += ",";
        }
        out += s.label(indices[k]);
    }
    return out + "}";
}

}  // namespace ctxkit
