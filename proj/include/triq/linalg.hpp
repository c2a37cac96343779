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


#pragma once

#include <array>
#include <complex>
#include <vector>

namespace triq {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

/// Default threshold for rank and zero decisions, relative to input scale.
inline constexpr double kDefaultTol = 1e-10;

/// Hdet of a state equals this constant times the discriminant b^2 - 4ac of
/// its pencil quadratic det(u0*T0 + u1*T1).
inline constexpr double kDiscriminantToHdet = 1.0;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    Complex m00{}, m01{}, m10{}, m11{};

    static Mat2 identity() {
        return {1.0, 0.0, 0.0, 1.0};
    }
    static Mat2 diag(Complex d0, Complex d1) {
        return {d0, 0.0, 0.0, d1};
    }

    Complex operator()(int row, int col) const;
    Complex &operator()(int row, int col);

    Mat2 adjoint() const;
    Mat2 transpose() const;
    Complex det() const;
    Complex trace() const;
    double frobenius_norm() const;

    bool is_unitary(double tol = kDefaultTol) const;
    bool is_diagonal(double tol = kDefaultTol) const;

    bool operator==(const Mat2 &) const = default;
};

Mat2 operator*(const Mat2 &a, const Mat2 &b);
Mat2 operator+(const Mat2 &a, const Mat2 &b);
Mat2 operator-(const Mat2 &a, const Mat2 &b);
Mat2 operator*(Complex s, const Mat2 &m);
Vec2 operator*(const Mat2 &m, const Vec2 &v);

double norm(const Vec2 &v);
Complex inner(const Vec2 &a, const Vec2 &b);  // <a|b>, conjugate-linear in a

/// Result of svd2: U1 * M * U2 = D.
struct Svd2 {
    Mat2 u1;
    Mat2 d;  // diagonal, real, d00 >= d11 >= 0
    Mat2 u2;

    double s0() const {
        return d.m00.real();
    }
    double s1() const {
        return d.m11.real();
    }
};

/// Closed-form SVD of a 2x2 complex matrix from the eigen-decomposition of M^dagger M.
Svd2 svd2(const Mat2 &m);

/// Number of singular values above `tol * ||m||_F`.
int rank_estimate(const Mat2 &m, double tol = kDefaultTol);

enum class RootMultiplicity {
    Simple,
    Double,
    IdenticallyZero,
};

const char *multiplicity_name(RootMultiplicity m);

/// Normalized projective point (u0 : u1). The first component whose modulus
/// exceeds 1e-14 is real and positive.
struct ProjectiveRoot {
    Complex u0{1.0};
    Complex u1{0.0};
    RootMultiplicity multiplicity = RootMultiplicity::Simple;

    static ProjectiveRoot canonical(Complex u0, Complex u1, RootMultiplicity multiplicity);

    Vec2 vec() const {
        return {u0, u1};
    }

    bool operator==(const ProjectiveRoot &) const = default;
};

/// Coefficients of det(u0*T0 + u1*T1) = c*u0^2 + b*u0*u1 + a*u1^2.
struct PencilQuadratic {
    Complex a;  // det T1
    Complex b;  // det(T0+T1) - det T0 - det T1
    Complex c;  // det T0

    static PencilQuadratic of(const Mat2 &t0, const Mat2 &t1);

    Complex discriminant() const {
        return b * b - 4.0 * a * c;
    }
    Complex evaluate(Complex u0, Complex u1) const {
        return c * u0 * u0 + b * u0 * u1 + a * u1 * u1;
    }
};

/// Both projective roots of the pencil quadratic, before any merging of
/// double roots. `multiplicity` classifies the pair at the given tolerance.
struct PencilRootPair {
    std::array<ProjectiveRoot, 2> roots;
    RootMultiplicity multiplicity;
    Complex discriminant;
};

PencilRootPair pencil_root_pair(const Mat2 &t0, const Mat2 &t1, double tol = kDefaultTol);

/// Projective solutions of det(u0*T0 + u1*T1) = 0. One root when the quadratic
/// has a double root; the conventional pair (1,0), (0,1) when it vanishes identically.
std::vector<ProjectiveRoot> pencil_roots(const Mat2 &t0, const Mat2 &t1, double tol = kDefaultTol);

/// [[u0, u1], [-conj(u1), conj(u0)]]; throws NotNormalized unless |u0|^2 + |u1|^2 = 1.
Mat2 complete_unitary(const Vec2 &row);

}  // namespace triq
