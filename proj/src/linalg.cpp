// Copyright 2026 The triq Authors
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


#include "triq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "triq/error.hpp"

namespace triq {

Complex Mat2::operator()(int row, int col) const {
    return row == 0 ? (col == 0 ? m00 : m01) : (col == 0 ? m10 : m11);
}

Complex &Mat2::operator()(int row, int col) {
    return row == 0 ? (col == 0 ? m00 : m01) : (col == 0 ? m10 : m11);
}

Mat2 Mat2::adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

Mat2 Mat2::transpose() const {
    return {m00, m10, m01, m11};
}

Complex Mat2::det() const {
    return m00 * m11 - m01 * m10;
}

Complex Mat2::trace() const {
    return m00 + m11;
}

double Mat2::frobenius_norm() const {
    return std::sqrt(std::norm(m00) + std::norm(m01) + std::norm(m10) + std::norm(m11));
}

bool Mat2::is_unitary(double tol) const {
    Mat2 p = (*this) * adjoint();
    return (p - identity()).frobenius_norm() <= tol;
}

bool Mat2::is_diagonal(double tol) const {
    return std::abs(m01) <= tol && std::abs(m10) <= tol;
}

Mat2 operator*(const Mat2 &a, const Mat2 &b) {
    return {
        a.m00 * b.m00 + a.m01 * b.m10,
        a.m00 * b.m01 + a.m01 * b.m11,
        a.m10 * b.m00 + a.m11 * b.m10,
        a.m10 * b.m01 + a.m11 * b.m11,
    };
}

Mat2 operator+(const Mat2 &a, const Mat2 &b) {
    return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

Mat2 operator-(const Mat2 &a, const Mat2 &b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

Mat2 operator*(Complex s, const Mat2 &m) {
    return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}

Vec2 operator*(const Mat2 &m, const Vec2 &v) {
    return {m.m00 * v[0] + m.m01 * v[1], m.m10 * v[0] + m.m11 * v[1]};
}

double norm(const Vec2 &v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

Complex inner(const Vec2 &a, const Vec2 &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

namespace {

Vec2 scaled(const Vec2 &v, Complex s) {
    return {v[0] * s, v[1] * s};
}

// Unit vector orthogonal to v (v assumed normalized).
Vec2 perp(const Vec2 &v) {
    return {-std::conj(v[1]), std::conj(v[0])};
}

}  // namespace

Svd2 svd2(const Mat2 &m) {
    // H = M^dagger M = [[a, b], [conj(b), c]].
    const double a = std::norm(m.m00) + std::norm(m.m10);
    const double c = std::norm(m.m01) + std::norm(m.m11);
    const Complex b = std::conj(m.m00) * m.m01 + std::conj(m.m10) * m.m11;

    const double half_gap = 0.5 * (a - c);
    const double top = 0.5 * (a + c) + std::hypot(half_gap, std::abs(b));

    // Two candidate eigenvectors for the top eigenvalue; keep the better conditioned one.
    Vec2 x{b, top - a};
    Vec2 y{top - c, std::conj(b)};
    Vec2 v0 = norm(x) >= norm(y) ? x : y;
    double nv = norm(v0);
    if (nv > 0.0 && nv > 1e-300) {
        v0 = scaled(v0, 1.0 / nv);
    } else {
        v0 = {1.0, 0.0};
    }
    Vec2 v1 = perp(v0);

    Vec2 mv0 = m * v0;
    double s0 = norm(mv0);
    Vec2 w0 = s0 > 0.0 ? scaled(mv0, 1.0 / s0) : Vec2{1.0, 0.0};
    w0 = scaled(w0, 1.0 / norm(w0));
    Vec2 w1 = perp(w0);

    Complex p = inner(w1, m * v1);
    double s1 = std::abs(p);
    if (s1 > 0.0) {
        w1 = scaled(w1, p / s1);
    }

    if (s1 > s0) {
        std::swap(s0, s1);
        std::swap(v0, v1);
        std::swap(w0, w1);
    }

    Svd2 out;
    out.u1 = {std::conj(w0[0]), std::conj(w0[1]), std::conj(w1[0]), std::conj(w1[1])};
    out.u2 = {v0[0], v1[0], v0[1], v1[1]};
    out.d = Mat2::diag(s0, s1);
    return out;
}

int rank_estimate(const Mat2 &m, double tol) {
    double scale = m.frobenius_norm();
    if (scale == 0.0) {
        return 0;
    }
    Svd2 s = svd2(m);
    return (s.s0() > tol * scale ? 1 : 0) + (s.s1() > tol * scale ? 1 : 0);
}

const char *multiplicity_name(RootMultiplicity m) {
    switch (m) {
        case RootMultiplicity::Simple:
            return "simple";
        case RootMultiplicity::Double:
            return "double";
        case RootMultiplicity::IdenticallyZero:
            return "identically-zero";
    }
    return "?";
}

ProjectiveRoot ProjectiveRoot::canonical(Complex u0, Complex u1, RootMultiplicity multiplicity) {
    double n = std::sqrt(std::norm(u0) + std::norm(u1));
    if (n == 0.0) {
        throw Error(ErrorKind::DegenerateInput, "projective root with both components zero");
    }
    u0 /= n;
    u1 /= n;
    Complex lead = std::abs(u0) > 1e-14 ? u0 : u1;
    Complex phase = std::conj(lead) / std::abs(lead);
    u0 *= phase;
    u1 *= phase;
    if (std::abs(u0) > 1e-14) {
        u0 = std::abs(u0);
    } else {
        u1 = std::abs(u1);
    }
    return {u0, u1, multiplicity};
}

PencilQuadratic PencilQuadratic::of(const Mat2 &t0, const Mat2 &t1) {
    Complex d0 = t0.det();
    Complex d1 = t1.det();
    return {d1, (t0 + t1).det() - d0 - d1, d0};
}

PencilRootPair pencil_root_pair(const Mat2 &t0, const Mat2 &t1, double tol) {
    const double scale = std::pow(t0.frobenius_norm() + t1.frobenius_norm(), 2);
    PencilQuadratic q = PencilQuadratic::of(t0, t1);
    Complex disc = q.discriminant();

    PencilRootPair out;
    out.discriminant = disc;

    double largest = std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c)});
    if (scale == 0.0 || largest <= tol * scale) {
        out.multiplicity = RootMultiplicity::IdenticallyZero;
        out.roots = {ProjectiveRoot{1.0, 0.0, out.multiplicity}, ProjectiveRoot{0.0, 1.0, out.multiplicity}};
        return out;
    }

    out.multiplicity = std::abs(disc) <= tol * scale * scale ? RootMultiplicity::Double : RootMultiplicity::Simple;

    // Homogeneous stable quadratic formula: with q = -(b + s)/2 and the sign of s
    // chosen to avoid cancellation, the roots are (a : q) and (q : c).
    Complex s = std::sqrt(disc);
    if ((std::conj(q.b) * s).real() < 0.0) {
        s = -s;
    }
    Complex half = -0.5 * (q.b + s);
    Vec2 r0{q.a, half};
    Vec2 r1{half, q.c};
    double n0 = norm(r0);
    double n1 = norm(r1);
    if (out.multiplicity == RootMultiplicity::Double || n0 == 0.0 || n1 == 0.0) {
        // Keep both raw roots when they are distinct numbers; only substitute a
        // vanishing representative.
        if (n0 == 0.0) {
            r0 = r1;
        } else if (n1 == 0.0) {
            r1 = r0;
        }
    }
    ProjectiveRoot p0 = ProjectiveRoot::canonical(r0[0], r0[1], out.multiplicity);
    ProjectiveRoot p1 = ProjectiveRoot::canonical(r1[0], r1[1], out.multiplicity);
    if (std::make_pair(p1.u0.real(), p1.u1.real()) > std::make_pair(p0.u0.real(), p0.u1.real())) {
        std::swap(p0, p1);
    }
    out.roots = {p0, p1};
    return out;
}

std::vector<ProjectiveRoot> pencil_roots(const Mat2 &t0, const Mat2 &t1, double tol) {
    PencilRootPair pair = pencil_root_pair(t0, t1, tol);
    if (pair.multiplicity != RootMultiplicity::Double) {
        return {pair.roots[0], pair.roots[1]};
    }
    // Merge a double root. The representative with the smaller residual wins.
    PencilQuadratic q = PencilQuadratic::of(t0, t1);
    const auto &r = pair.roots;
    double e0 = std::abs(q.evaluate(r[0].u0, r[0].u1));
    double e1 = std::abs(q.evaluate(r[1].u0, r[1].u1));
    return {e0 <= e1 ? r[0] : r[1]};
}

Mat2 complete_unitary(const Vec2 &row) {
    double n2 = std::norm(row[0]) + std::norm(row[1]);
    if (std::abs(n2 - 1.0) > 1e-12) {
        throw Error(ErrorKind::NotNormalized, "unitary completion requires a normalized row");
    }
    return {row[0], row[1], -std::conj(row[1]), std::conj(row[0])};
}

}  // namespace triq
