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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "triq/error.hpp"

using namespace triq;
using triq::testing::random_complex;
using triq::testing::random_mat2;

namespace {

// Eigenvalues of the Hermitian M^dagger M from its trace and determinant,
// largest first. Independent of the eigenvector route inside svd2.
std::pair<double, double> gram_eigenvalues(const Mat2 &m) {
    Mat2 h = m.adjoint() * m;
    double tr = h.trace().real();
    double det = h.det().real();
    double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
    return {tr / 2 + disc, tr / 2 - disc};
}

double off_diagonal(const Mat2 &m) {
    return std::abs(m.m01) + std::abs(m.m10);
}

}  // namespace

TEST(svd2, identity) {
    Svd2 s = svd2(Mat2::identity());
    EXPECT_EQ(s.u1, Mat2::identity());
    EXPECT_EQ(s.u2, Mat2::identity());
    EXPECT_EQ(s.d, Mat2::identity());
}

TEST(svd2, nilpotent_rank_one) {
    Mat2 m{0.0, 1.0, 0.0, 0.0};
    Svd2 s = svd2(m);
    EXPECT_NEAR(s.s0(), 1.0, 1e-15);
    EXPECT_NEAR(s.s1(), 0.0, 1e-15);
    EXPECT_LT(((s.u1 * m * s.u2) - s.d).frobenius_norm(), 1e-15);
}

TEST(svd2, zero_matrix) {
    Svd2 s = svd2(Mat2{});
    EXPECT_EQ(s.s0(), 0.0);
    EXPECT_EQ(s.s1(), 0.0);
    EXPECT_TRUE(s.u1.is_unitary());
    EXPECT_TRUE(s.u2.is_unitary());
}

TEST(svd2, random_reconstruction) {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int n = 0; n < 10000; n++) {
        Mat2 m = random_mat2(rng);
        Svd2 s = svd2(m);
        ASSERT_TRUE(s.u1.is_unitary(1e-12));
        ASSERT_TRUE(s.u2.is_unitary(1e-12));
        ASSERT_GE(s.s0(), s.s1());
        ASSERT_GE(s.s1(), 0.0);
        ASSERT_TRUE(s.d.is_diagonal(0.0));
        ASSERT_EQ(s.d.m00.imag(), 0.0);
        ASSERT_LT(off_diagonal(s.u1 * m * s.u2), 1e-12);
        Mat2 back = s.u1.adjoint() * s.d * s.u2.adjoint();
        worst = std::max(worst, (back - m).frobenius_norm());
    }
    EXPECT_LT(worst, 1e-11);
}

TEST(svd2, singular_values_match_gram_eigenvalues) {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 2000; n++) {
        Mat2 m = random_mat2(rng);
        auto [e0, e1] = gram_eigenvalues(m);
        Svd2 s = svd2(m);
        ASSERT_NEAR(s.s0(), std::sqrt(e0), 1e-10);
        ASSERT_NEAR(s.s1(), std::sqrt(std::max(0.0, e1)), 1e-7);  // sqrt amplifies rounding near 0
        ASSERT_NEAR(s.s0() * s.s1(), std::abs(m.det()), 1e-10);
    }
}

TEST(svd2, near_degenerate_inputs) {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 500; n++) {
        // Scaled unitaries plus tiny perturbations: nearly equal singular values.
        Mat2 u = haar_unitary(rng);
        Mat2 m = u + Complex(1e-13) * random_mat2(rng);
        Svd2 s = svd2(m);
        ASSERT_LT((s.u1.adjoint() * s.d * s.u2.adjoint() - m).frobenius_norm(), 1e-11);
        // Rank-one outer products: one vanishing singular value.
        Vec2 a{random_complex(rng), random_complex(rng)};
        Vec2 b{random_complex(rng), random_complex(rng)};
        Mat2 r{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
        Svd2 t = svd2(r);
        ASSERT_LT((t.u1.adjoint() * t.d * t.u2.adjoint() - r).frobenius_norm(), 1e-11);
        ASSERT_LT(t.s1(), 1e-12 * t.s0() + 1e-15);
        ASSERT_EQ(rank_estimate(r), 1);
    }
}

TEST(pencil_roots, ghz_pencil) {
    const double r = std::numbers::sqrt2 / 2;
    auto roots = pencil_roots(Mat2::diag(r, 0.0), Mat2::diag(0.0, r));
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0].multiplicity, RootMultiplicity::Simple);
    EXPECT_NEAR(std::abs(roots[0].u0 - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(roots[0].u1), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(roots[1].u0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(roots[1].u1 - 1.0), 0.0, 1e-15);
}

TEST(pencil_roots, w_pencil_double_root) {
    // det(u0 T0 + u1 T1) = -u0^2 / 3, so u0 = 0 twice.
    const double r = std::numbers::inv_sqrt3;
    Mat2 t0{0.0, r, r, 0.0};
    Mat2 t1{r, 0.0, 0.0, 0.0};
    PencilQuadratic q = PencilQuadratic::of(t0, t1);
    EXPECT_NEAR(std::abs(q.c - Complex(-1.0 / 3)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q.b), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q.a), 0.0, 1e-15);
    auto roots = pencil_roots(t0, t1);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_EQ(roots[0].multiplicity, RootMultiplicity::Double);
    EXPECT_NEAR(std::abs(roots[0].u0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(roots[0].u1 - 1.0), 0.0, 1e-15);
}

TEST(pencil_roots, identically_zero_quadratic) {
    auto roots = pencil_roots(Mat2::diag(1.0, 0.0), Mat2{});
    ASSERT_EQ(roots.size(), 2u);
    for (const auto &r : roots) {
        EXPECT_EQ(r.multiplicity, RootMultiplicity::IdenticallyZero);
    }
    EXPECT_EQ(roots[0].u0, Complex(1.0));
    EXPECT_EQ(roots[1].u1, Complex(1.0));
}

TEST(pencil_roots, root_at_infinity) {
    // det T1 = 0 forces the u0 = 0 solution; it must not be lost.
    std::mt19937_64 rng(5);
    Mat2 t0 = random_mat2(rng);
    Vec2 a{random_complex(rng), random_complex(rng)};
    Vec2 b{random_complex(rng), random_complex(rng)};
    Mat2 t1{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
    auto roots = pencil_roots(t0, t1);
    ASSERT_EQ(roots.size(), 2u);
    bool found = false;
    for (const auto &r : roots) {
        found = found || std::abs(r.u0) < 1e-12;
    }
    EXPECT_TRUE(found);
}

TEST(pencil_roots, random_pencils_are_solved) {
    std::mt19937_64 rng(99);
    for (int n = 0; n < 5000; n++) {
        Mat2 t0 = random_mat2(rng);
        Mat2 t1 = random_mat2(rng);
        double scale = std::pow(t0.frobenius_norm() + t1.frobenius_norm(), 2);
        for (const auto &r : pencil_roots(t0, t1)) {
            ASSERT_NEAR(std::norm(r.u0) + std::norm(r.u1), 1.0, 1e-14);
            Complex lead = std::abs(r.u0) > 1e-14 ? r.u0 : r.u1;
            ASSERT_EQ(lead.imag(), 0.0);
            ASSERT_GT(lead.real(), 0.0);
            ASSERT_LT(std::abs((r.u0 * t0 + r.u1 * t1).det()), 1e-10 * scale);
        }
    }
}

TEST(pencil_roots, discriminant_is_hyperdeterminant_scale) {
    // Pure GHZ: b = 1/2, a = c = 0, discriminant 1/4 = t000^2 t111^2.
    const double r = std::numbers::sqrt2 / 2;
    PencilQuadratic q = PencilQuadratic::of(Mat2::diag(r, 0.0), Mat2::diag(0.0, r));
    EXPECT_NEAR(std::abs(kDiscriminantToHdet * q.discriminant() - Complex(0.25)), 0.0, 1e-15);
}

TEST(complete_unitary, basis_rows) {
    EXPECT_EQ(complete_unitary({1.0, 0.0}), Mat2::identity());
    Mat2 expected{0.0, 1.0, -1.0, 0.0};
    EXPECT_EQ(complete_unitary({0.0, 1.0}), expected);
}

TEST(complete_unitary, random_rows_are_special_unitary) {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 1000; n++) {
        Vec2 v{random_complex(rng), random_complex(rng)};
        double nv = norm(v);
        v = {v[0] / nv, v[1] / nv};
        Mat2 u = complete_unitary(v);
        ASSERT_LT((u * u.adjoint() - Mat2::identity()).frobenius_norm(), 1e-12);
        ASSERT_NEAR(std::abs(u.det() - 1.0), 0.0, 1e-12);
    }
}

TEST(complete_unitary, rejects_unnormalized) {
    EXPECT_THROW(complete_unitary({1.0, 1.0}), Error);
    try {
        complete_unitary({0.5, 0.0});
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
    }
}
