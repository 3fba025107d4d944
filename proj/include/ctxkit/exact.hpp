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

// Exact arithmetic over the Gaussian rationals Q(i) and the small amount of
// linear algebra the rest of the toolkit needs. Every zero test is decidable.

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctxkit/error.hpp"

namespace ctxkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational &q) {
    std::string out = boost::multiprecision::numerator(q).str();
    if (boost::multiprecision::denominator(q) != 1) {
        out += "/" + boost::multiprecision::denominator(q).str();
    }
    return out;
}

/// a + b*i with a, b exact rationals. Always in canonical form because the
/// underlying rationals are kept in lowest terms.
class Scalar {
   public:
    Scalar() = default;
    Scalar(long long re) : re_(re) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational &re() const noexcept {
        return re_;
    }
    const Rational &im() const noexcept {
        return im_;
    }

    bool is_zero() const {
        return re_ == 0 && im_ == 0;
    }
    bool is_real() const {
        return im_ == 0;
    }

    Scalar conj() const {
        return Scalar(re_, Rational(-im_));
    }

    /// |z|^2.
    Rational norm() const {
        return Rational(re_ * re_ + im_ * im_);
    }

    Scalar operator-() const {
        return Scalar(Rational(-re_), Rational(-im_));
    }

    Scalar &operator+=(const Scalar &other) {
        re_ += other.re_;
        im_ += other.im_;
        return *this;
    }
    Scalar &operator-=(const Scalar &other) {
        re_ -= other.re_;
        im_ -= other.im_;
        return *this;
    }
    Scalar &operator*=(const Scalar &other) {
        Rational re = re_ * other.re_ - im_ * other.im_;
        Rational im = re_ * other.im_ + im_ * other.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    Scalar &operator/=(const Scalar &other) {
        if (other.is_zero()) {
            throw std::domain_error("division by zero");
        }
        Rational n = other.norm();
        *this *= other.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar &b) {
        return a += b;
    }
    friend Scalar operator-(Scalar a, const Scalar &b) {
        return a -= b;
    }
    friend Scalar operator*(Scalar a, const Scalar &b) {
        return a *= b;
    }
    friend Scalar operator/(Scalar a, const Scalar &b) {
        return a /= b;
    }
    friend bool operator==(const Scalar &a, const Scalar &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Literal form accepted by parse_scalar: `-1`, `1/2`, `1/2+1/3i`, `0-1i`.
    std::string str() const {
        if (im_ == 0) {
            return to_string(re_);
        }
        std::string out = to_string(re_);
        out += im_ < 0 ? "-" : "+";
        out += to_string(Rational(abs(im_)));
        out += "i";
        return out;
    }

   private:
    Rational re_ = 0;
    Rational im_ = 0;
};

/// Position of a literal inside a larger document, used for diagnostics.
struct SourcePos {
    std::size_t line = 0;
    std::size_t column = 1;
};

namespace detail {

inline std::size_t scan_digits(std::string_view text, std::size_t pos) {
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        ++pos;
    }
    return pos;
}

// [-]DIGITS[/DIGITS] beginning at `pos`; advances `pos` past it.
inline Rational scan_rational(std::string_view text, std::size_t &pos, bool allow_sign, SourcePos at) {
    auto fail = [&](const std::string &what, std::size_t offset) -> ParseError {
        return ParseError(what + " in literal '" + std::string(text) + "'", at.line, at.column + offset);
    };
    bool negative = false;
    if (allow_sign && pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    std::size_t end = scan_digits(text, pos);
    if (end == pos) {
        throw fail("expected digits", pos);
    }
    Integer num(std::string(text.substr(pos, end - pos)));
    pos = end;
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        end = scan_digits(text, pos);
        if (end == pos) {
            throw fail("expected denominator digits", pos);
        }
        den = Integer(std::string(text.substr(pos, end - pos)));
        if (den == 0) {
            throw fail("zero denominator", pos);
        }
        pos = end;
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

}  // namespace detail

/// Parses `[-]INT[/INT]`.
inline Rational parse_rational(std::string_view text, SourcePos at = {}) {
    std::size_t pos = 0;
    Rational q = detail::scan_rational(text, pos, true, at);
    if (pos != text.size()) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in literal '" +
                             std::string(text) + "'",
                         at.line, at.column + pos);
    }
    return q;
}

/// Parses `RAT` or `RAT(+|-)RATi`. Whitespace is not permitted.
inline Scalar parse_scalar(std::string_view text, SourcePos at = {}, bool allow_imaginary = true) {
    std::size_t pos = 0;
    Rational re = detail::scan_rational(text, pos, true, at);
    if (pos == text.size()) {
        return Scalar(std::move(re));
    }
    char sign = text[pos];
    if (sign != '+' && sign != '-') {
        throw ParseError("unexpected character '" + std::string(1, sign) + "' in literal '" + std::string(text) + "'",
                         at.line, at.column + pos);
    }
    if (!allow_imaginary) {
        throw ParseError("imaginary part not allowed for a rational field in literal '" + std::string(text) + "'",
                         at.line, at.column + pos);
    }
    ++pos;
    Rational im = detail::scan_rational(text, pos, false, at);
    if (pos >= text.size() || text[pos] != 'i' || pos + 1 != text.size()) {
        throw ParseError("expected trailing 'i' in literal '" + std::string(text) + "'", at.line, at.column + pos);
    }
    if (sign == '-') {
        im = -im;
    }
    return Scalar(std::move(re), std::move(im));
}

class Vector {
   public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim) {}
    Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}
    explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

    std::size_t size() const noexcept {
        return coords_.size();
    }
    const Scalar &operator[](std::size_t i) const {
        return coords_[i];
    }
    Scalar &operator[](std::size_t i) {
        return coords_[i];
    }
    auto begin() const {
        return coords_.begin();
    }
    auto end() const {
        return coords_.end();
    }
    const std::vector<Scalar> &coords() const noexcept {
        return coords_;
    }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Scalar &s) { return s.is_zero(); });
    }
    bool is_real() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Scalar &s) { return s.is_real(); });
    }

    Vector &operator+=(const Vector &other) {
        require_same_size(other);
        for (std::size_t i = 0; i < size(); ++i) {
            coords_[i] += other.coords_[i];
        }
        return *this;
    }
    Vector &operator-=(const Vector &other) {
        require_same_size(other);
        for (std::size_t i = 0; i < size(); ++i) {
            coords_[i] -= other.coords_[i];
        }
        return *this;
    }
    Vector &operator*=(const Scalar &factor) {
        for (auto &c : coords_) {
            c *= factor;
        }
        return *this;
    }

    friend Vector operator+(Vector a, const Vector &b) {
        return a += b;
    }
    friend Vector operator-(Vector a, const Vector &b) {
        return a -= b;
    }
    friend Vector operator*(const Scalar &factor, Vector v) {
        return v *= factor;
    }
    friend bool operator==(const Vector &a, const Vector &b) {
        return a.coords_ == b.coords_;
    }

    /// `(c1,c2,...)` using literal syntax.
    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) {
                out += ",";
            }
            out += coords_[i].str();
        }
        return out + ")";
    }

   private:
    void require_same_size(const Vector &other) const {
        if (other.size() != size()) {
            throw ValidationError("dimension mismatch: " + std::to_string(size()) + " vs " +
                                  std::to_string(other.size()));
        }
    }

    std::vector<Scalar> coords_;
};

/// Parses a comma separated list of scalar literals, e.g. `1,1/2,-1`.
inline Vector parse_vector(std::string_view text, SourcePos at = {}, bool allow_imaginary = true) {
    std::vector<Scalar> coords;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        std::size_t lead = 0;
        while (lead < token.size() && (token[lead] == ' ' || token[lead] == '\t')) {
            ++lead;
        }
        std::size_t trail = token.size();
        while (trail > lead && (token[trail - 1] == ' ' || token[trail - 1] == '\t' || token[trail - 1] == '\r')) {
            --trail;
        }
        SourcePos here{at.line, at.column + start + lead};
        if (trail == lead) {
            throw ParseError("empty coordinate", here.line, here.column);
        }
        coords.push_back(parse_scalar(token.substr(lead, trail - lead), here, allow_imaginary));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return Vector(std::move(coords));
}

/// Dense row-major matrix over Q(i).
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<Scalar>> &rows) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) {
                throw ValidationError("ragged matrix: row " + std::to_string(r + 1) + " has " +
                                      std::to_string(rows[r].size()) + " entries, expected " +
                                      std::to_string(cols));
            }
            for (std::size_t c = 0; c < cols; ++c) {
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    const Scalar &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Scalar &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }

    Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out(c, r) = (*this)(r, c).conj();
            }
        }
        return out;
    }

    bool is_hermitian() const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = r; c < cols_; ++c) {
                if (!((*this)(r, c) == (*this)(c, r).conj())) {
                    return false;
                }
            }
        }
        return true;
    }

    Scalar trace() const {
        Scalar t;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    Matrix submatrix(std::span<const std::size_t> indices) const {
        Matrix out(indices.size(), indices.size());
        for (std::size_t r = 0; r < indices.size(); ++r) {
            for (std::size_t c = 0; c < indices.size(); ++c) {
                out(r, c) = (*this)(indices[r], indices[c]);
            }
        }
        return out;
    }

    Vector apply(const Vector &v) const {
        if (v.size() != cols_) {
            throw ValidationError("dimension mismatch in matrix-vector product");
        }
        Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out[r] += (*this)(r, c) * v[c];
            }
        }
        return out;
    }

    Matrix &operator+=(const Matrix &other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            entries_[i] += other.entries_[i];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            entries_[i] -= other.entries_[i];
        }
        return *this;
    }
    Matrix &operator*=(const Scalar &factor) {
        for (auto &e : entries_) {
            e *= factor;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b) {
        return a -= b;
    }
    friend Matrix operator*(const Scalar &factor, Matrix m) {
        return m *= factor;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) {
            throw ValidationError("dimension mismatch in matrix product");
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar &x = a(r, k);
                if (x.is_zero()) {
                    continue;
                }
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    out(r, c) += x * b(k, c);
                }
            }
        }
        return out;
    }
    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    /// `[[a,b],[c,d]]` using literal syntax.
    std::string str() const {
        std::string out = "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            out += r ? ",[" : "[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) {
                    out += ",";
                }
                out += (*this)(r, c).str();
            }
            out += "]";
        }
        return out + "]";
    }

   private:
    void require_same_shape(const Matrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw ValidationError("matrix shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Conjugate-linear in the first argument: sum_i conj(u_i) v_i.
inline Scalar inner_product(const Vector &u, const Vector &v) {
    if (u.size() != v.size()) {
        throw ValidationError("dimension mismatch: " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
    }
    Scalar acc;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc += u[i].conj() * v[i];
    }
    return acc;
}

inline Rational norm_squared(const Vector &v) {
    Rational acc = 0;
    for (const auto &c : v) {
        acc += c.norm();
    }
    return acc;
}

inline bool orthogonal(const Vector &u, const Vector &v) {
    return inner_product(u, v).is_zero();
}

/// |u><v|
inline Matrix outer_product(const Vector &u, const Vector &v) {
    Matrix m(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            m(r, c) = u[r] * v[c].conj();
        }
    }
    return m;
}

/// Unique representative of the ray through `v`: the first non-zero
/// coordinate is a positive integer and all coordinates are Gaussian integers
/// whose real and imaginary parts have no common factor.
inline Vector canonical_ray(const Vector &v) {
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar &s) { return !s.is_zero(); });
    if (lead == v.end()) {
        throw ValidationError("the zero vector does not define a ray");
    }
    Scalar pivot = *lead;
    Vector w(v.size());
    Integer common_den = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i] / pivot;
        common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(w[i].re()));
        common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(w[i].im()));
    }
    Integer common_num = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] *= Scalar(Rational(common_den));
        common_num = boost::multiprecision::gcd(common_num, Integer(abs(boost::multiprecision::numerator(w[i].re()))));
        common_num = boost::multiprecision::gcd(common_num, Integer(abs(boost::multiprecision::numerator(w[i].im()))));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] /= Scalar(Rational(common_num));
    }
    return w;
}

inline bool same_ray(const Vector &a, const Vector &b) {
    return a.size() == b.size() && canonical_ray(a) == canonical_ray(b);
}

namespace detail {

struct Echelon {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> pivot_columns;
};

// Gauss-Jordan elimination to reduced row echelon form.
inline Echelon reduce(std::vector<std::vector<Scalar>> m, std::size_t cols) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[r], m[p]);
        Scalar inv = Scalar(1) / m[r][c];
        for (auto &x : m[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) {
                continue;
            }
            Scalar f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                m[i][k] -= f * m[r][k];
            }
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

inline std::size_t common_dim(std::span<const Vector> rows) {
    std::size_t d = rows.empty() ? 0 : rows.front().size();
    for (const auto &row : rows) {
        if (row.size() != d) {
            throw ValidationError("dimension mismatch among rows");
        }
    }
    return d;
}

}  // namespace detail

inline std::size_t rank(std::span<const Vector> rows) {
    std::size_t d = detail::common_dim(rows);
    std::vector<std::vector<Scalar>> m;
    m.reserve(rows.size());
    for (const auto &row : rows) {
        m.push_back(row.coords());
    }
    return detail::reduce(std::move(m), d).pivot_columns.size();
}

/// Basis (canonical rays) of { psi : <row_i|psi> = 0 for every row }.
/// An empty result means only the zero vector solves the system.
inline std::vector<Vector> nullspace(std::span<const Vector> rows, std::size_t dim) {
    if (!rows.empty() && detail::common_dim(rows) != dim) {
        throw ValidationError("dimension mismatch: rows have dimension " + std::to_string(rows.front().size()) +
                              ", expected " + std::to_string(dim));
    }
    std::vector<std::vector<Scalar>> m;
    m.reserve(rows.size());
    for (const auto &row : rows) {
        std::vector<Scalar> conj_row;
        conj_row.reserve(dim);
        for (const auto &c : row) {
            conj_row.push_back(c.conj());
        }
        m.push_back(std::move(conj_row));
    }
    detail::Echelon e = detail::reduce(std::move(m), dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto c : e.pivot_columns) {
        is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector x(dim);
        x[free] = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
            x[e.pivot_columns[i]] = -e.rows[i][free];
        }
        basis.push_back(canonical_ray(x));
    }
    return basis;
}

/// Orthogonalizes `ordered` in sequence; output i spans the same flag as inputs
/// 0..i. Results are returned as canonical rays (unnormalized).
inline std::vector<Vector> gram_schmidt(std::span<const Vector> ordered) {
    detail::common_dim(ordered);
    std::vector<Vector> out;
    std::vector<Rational> norms;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        Vector residual = ordered[k];
        for (std::size_t j = 0; j < out.size(); ++j) {
            Scalar coeff = inner_product(out[j], ordered[k]) / Scalar(norms[j]);
            residual -= coeff * out[j];
        }
        if (residual.is_zero()) {
            throw ValidationError("gram_schmidt: input " + std::to_string(k + 1) +
                                  " is linearly dependent on its predecessors");
        }
        Vector ray = canonical_ray(residual);
        norms.push_back(norm_squared(ray));
        out.push_back(std::move(ray));
    }
    return out;
}

/// |v><v| / ||v||^2.
inline Matrix rank1_projector(const Vector &v) {
    if (v.is_zero()) {
        throw ValidationError("rank1_projector: zero vector");
    }
    return Scalar(Rational(1) / norm_squared(v)) * outer_product(v, v);
}

inline Scalar determinant(const Matrix &m) {
    if (!m.is_square()) {
        throw ValidationError("determinant of a non-square matrix");
    }
    std::size_t n = m.rows();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a[r][c] = m(r, c);
        }
    }
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) {
            ++p;
        }
        if (p == n) {
            return Scalar();
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) {
                continue;
            }
            Scalar f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    return det;
}

/// A Hermitian matrix is positive semidefinite iff every principal minor is
/// non-negative. All 2^n - 1 minors are checked.
inline bool is_positive_semidefinite(const Matrix &m) {
    if (!m.is_hermitian()) {
        return false;
    }
    std::size_t n = m.rows();
    std::vector<std::size_t> idx;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        idx.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                idx.push_back(i);
            }
        }
        if (determinant(m.submatrix(idx)).re() < 0) {
            return false;
        }
    }
    return true;
}

/// A validated density operator: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
   public:
    static DensityMatrix from_matrix(Matrix m) {
        if (!m.is_square() || m.rows() < 2) {
            throw ValidationError("density matrix must be square with dimension >= 2");
        }
        if (!m.is_hermitian()) {
            throw ValidationError("density matrix is not Hermitian");
        }
        if (!(m.trace() == Scalar(1))) {
            throw ValidationError("density matrix trace is " + m.trace().str() + ", expected 1");
        }
        if (!is_positive_semidefinite(m)) {
            throw ValidationError("density matrix is not positive semidefinite");
        }
        return DensityMatrix(std::move(m));
    }

    static DensityMatrix pure(const Vector &psi) {
        return DensityMatrix(rank1_projector(psi));
    }

    /// sum_i w_i |psi_i><psi_i| / ||psi_i||^2 with w_i > 0 summing to one.
    static DensityMatrix mixture(std::span<const Rational> weights, std::span<const Vector> states) {
        if (weights.size() != states.size() || states.empty()) {
            throw ValidationError("mixture needs one weight per state");
        }
        Matrix acc(states.front().size(), states.front().size());
        Rational total = 0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (weights[i] <= 0) {
                throw ValidationError("mixture weights must be positive");
            }
            acc += Scalar(weights[i]) * rank1_projector(states[i]);
            total += weights[i];
        }
        if (total != 1) {
            throw ValidationError("mixture weights sum to " + to_string(total) + ", expected 1");
        }
        return from_matrix(std::move(acc));
    }

    const Matrix &matrix() const noexcept {
        return m_;
    }
    std::size_t dim() const noexcept {
        return m_.rows();
    }

   private:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

/// tr(rho P) for a Hermitian P; exact and real.
inline Rational expectation(const DensityMatrix &rho, const Matrix &p) {
    if (p.rows() != rho.dim() || p.cols() != rho.dim()) {
        throw ValidationError("dimension mismatch between state and operator");
    }
    Scalar acc;
    const Matrix &m = rho.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * p(c, r);
        }
    }
    return acc.re();
}

/// tr(rho |v><v| / ||v||^2).
inline Rational born_probability(const DensityMatrix &rho, const Vector &v) {
    if (v.size() != rho.dim()) {
        throw ValidationError("dimension mismatch: state has dimension " + std::to_string(rho.dim()) +
                              ", event has " + std::to_string(v.size()));
    }
    if (v.is_zero()) {
        throw ValidationError("born_probability: zero event vector");
    }
    Scalar quad = inner_product(v, rho.matrix().apply(v));
    return Rational(quad.re() / norm_squared(v));
}

inline std::string to_string(const Scalar &s) {
    return s.str();
}

}  // namespace ctxkit
