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


#include "triq/decompositions.hpp"

#include <cmath>
#include <string>

#include "triq/error.hpp"

namespace triq {

namespace {

Vec2 scaled(const Vec2 &v, Complex s) {
    return {v[0] * s, v[1] * s};
}

Vec2 column(const Mat2 &m, int k) {
    return {m(0, k), m(1, k)};
}

Vec2 row(const Mat2 &m, int k) {
    return {m(k, 0), m(k, 1)};
}

// Dominant eigenvector of a 2x2 Hermitian PSD matrix.
Vec2 top_eigenvector(const DensityMatrix2 &rho) {
    Svd2 s = svd2(rho);
    return column(s.u1.adjoint(), 0);
}

// Moves the phase of `amp` onto the first factor so the coefficient becomes |amp|.
double absorb_phase(ProductKet &ket, Complex amp) {
    double mag = std::abs(amp);
    if (mag > 0.0) {
        ket[0] = scaled(ket[0], amp / mag);
    }
    return mag;
}

Complex product_overlap(const ProductKet &ket, const ThreeQubitState &state) {
    Amplitudes p = product_amplitudes(ket);
    Complex acc = 0.0;
    for (int i = 0; i < 8; i++) {
        acc += std::conj(p[i]) * state[i];
    }
    return acc;
}

TwoProductDecomposition product_case(const ThreeQubitState &state) {
    TwoProductDecomposition d;
    d.trivial = true;
    d.type = TypeLabel::Type1;
    d.ket1 = {top_eigenvector(reduced_density(state, Party::A)), top_eigenvector(reduced_density(state, Party::B)),
              top_eigenvector(reduced_density(state, Party::C))};
    d.alpha = absorb_phase(d.ket1, product_overlap(d.ket1, state));
    d.beta = 0.0;
    d.ket2 = d.ket1;
    return d;
}

// Party `lone` is unentangled: |x> (s0 |y0 z0> + s1 |y1 z1>).
TwoProductDecomposition biseparable_case(const ThreeQubitState &state, Party lone, TypeLabel type) {
    Vec2 x = top_eigenvector(reduced_density(state, lone));
    CoefficientPencil p = pencil(permute_parties(state, PartyPermutation::bring_first(lone)));
    Mat2 rest = std::conj(x[0]) * p.t0 + std::conj(x[1]) * p.t1;
    Svd2 s = svd2(rest);
    Mat2 left = s.u1.adjoint();
    Mat2 right = s.u2.adjoint();

    auto arrange = [&](const Vec2 &y, const Vec2 &z) -> ProductKet {
        switch (lone) {
            case Party::A:
                return {x, y, z};
            case Party::B:
                return {y, x, z};
            case Party::C:
                return {y, z, x};
        }
        return {};
    };

    TwoProductDecomposition d;
    d.trivial = true;
    d.type = type;
    d.ket1 = arrange(column(left, 0), row(right, 0));
    d.ket2 = arrange(column(left, 1), row(right, 1));
    d.alpha = s.s0();
    d.beta = s.s1();
    return d;
}

// Rank-one factorization n = u v^T seeded from its largest row or column.
std::pair<Vec2, Vec2> rank_one_factor(const Mat2 &n) {
    std::array<double, 4> norms{norm(row(n, 0)), norm(row(n, 1)), norm(column(n, 0)), norm(column(n, 1))};
    int best = 0;
    for (int q = 1; q < 4; q++) {
        if (norms[q] > norms[best]) {
            best = q;
        }
    }
    if (best < 2) {
        Vec2 v = scaled(row(n, best), 1.0 / norms[best]);
        Vec2 vc{std::conj(v[0]), std::conj(v[1])};
        return {n * vc, v};
    }
    Vec2 u = scaled(column(n, best - 2), 1.0 / norms[best]);
    Vec2 v = n.transpose() * Vec2{std::conj(u[0]), std::conj(u[1])};
    return {u, v};
}

}  // namespace

Amplitudes product_amplitudes(const ProductKet &ket) {
    Amplitudes a;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                a[basis_index(i, j, k)] = ket[0][i] * ket[1][j] * ket[2][k];
            }
        }
    }
    return a;
}

Amplitudes reconstruct(const TwoProductDecomposition &d) {
    Amplitudes p1 = product_amplitudes(d.ket1);
    Amplitudes p2 = product_amplitudes(d.ket2);
    Amplitudes out;
    for (int i = 0; i < 8; i++) {
        out[i] = d.alpha * p1[i] + d.beta * p2[i];
    }
    return out;
}

std::array<double, 2> two_product_coefficients(const CanonicalForm &cf) {
    const auto &m = cf.mu;
    JInvariants js = invariants_j(cf);
    const double l4 = cf.lambda[4];
    return {std::sqrt(js.j[0] + js.j[3]) / l4, std::sqrt(m[2] * m[3] + m[4] * (m[4] + m[2] + m[3])) / l4};
}

TwoProductDecomposition two_product(const ThreeQubitState &state, double tol) {
    CanonicalForm cf = canonical_form(state);
    Classification cls = classify(state, tol);
    switch (cls.label) {
        case TypeLabel::Type1:
            return product_case(state);
        case TypeLabel::Type2aA:
            return biseparable_case(state, Party::A, cls.label);
        case TypeLabel::Type2aB:
            return biseparable_case(state, Party::B, cls.label);
        case TypeLabel::Type2aC:
            return biseparable_case(state, Party::C, cls.label);
        case TypeLabel::Type3a:
        case TypeLabel::Type4a:
            throw Error(ErrorKind::NotDecomposable,
                        std::string("I5=0 genuinely tripartite (type ") + type_label_name(cls.label) + ")");
        default:
            break;
    }

    const auto &l = cf.lambda;
    // First term: (l0|0> + (l1 l4 e^{i phi} - l2 l3)/l4 |1>)_A |00>.
    Vec2 a1{l[0], (std::polar(l[1] * l[4], cf.phi) - l[2] * l[3]) / l[4]};
    // Second term: |1>_A times a B-C matrix of vanishing determinant.
    Mat2 residual{l[2] * l[3] / l[4], l[2], l[3], l[4]};
    auto [u, v] = rank_one_factor(residual);

    const double alpha = norm(a1);
    const double nu = norm(u);
    const double nv = norm(v);

    const Complex g = std::polar(1.0, -cf.omega);
    const Mat2 ua = cf.ua.adjoint();
    const Mat2 ub = cf.ub.adjoint();
    const Mat2 uc = cf.uc.adjoint();

    TwoProductDecomposition d;
    d.type = cls.label;
    d.alpha = alpha;
    d.beta = nu * nv;
    d.ket1 = {scaled(ua * scaled(a1, 1.0 / alpha), g), ub * Vec2{1.0, 0.0}, uc * Vec2{1.0, 0.0}};
    d.ket2 = {scaled(ua * Vec2{0.0, 1.0}, g), ub * scaled(u, 1.0 / nu), uc * scaled(v, 1.0 / nv)};
    return d;
}

Amplitudes reconstruct(const ProductBiseparableForm &f) {
    Amplitudes prod = product_amplitudes({f.a0, f.b0, f.c0});
    Amplitudes s0 = product_amplitudes({f.a1, f.b_schmidt[0], f.c_schmidt[0]});
    Amplitudes s1 = product_amplitudes({f.a1, f.b_schmidt[1], f.c_schmidt[1]});
    const double ct = std::cos(f.theta);
    const double st = std::sin(f.theta);
    const double cw = std::cos(f.omega_angle);
    const double sw = std::sin(f.omega_angle);
    Amplitudes out;
    for (int i = 0; i < 8; i++) {
        out[i] = ct * prod[i] + st * (cw * s0[i] + sw * s1[i]);
    }
    return out;
}

ProductBiseparableForm product_plus_biseparable(const CanonicalForm &cf) {
    Svd2 s = svd2(cf.m1());
    Mat2 left = s.u1.adjoint();
    Mat2 right = s.u2.adjoint();

    const Complex g = std::polar(1.0, -cf.omega);
    const Mat2 ua = cf.ua.adjoint();
    const Mat2 ub = cf.ub.adjoint();
    const Mat2 uc = cf.uc.adjoint();

    ProductBiseparableForm f;
    f.theta = std::atan2(std::hypot(s.s0(), s.s1()), cf.lambda[0]);
    f.omega_angle = std::atan2(s.s1(), s.s0());
    f.a0 = scaled(ua * Vec2{1.0, 0.0}, g);
    f.a1 = scaled(ua * Vec2{0.0, 1.0}, g);
    f.b0 = ub * Vec2{1.0, 0.0};
    f.c0 = uc * Vec2{1.0, 0.0};
    for (int k = 0; k < 2; k++) {
        f.b_schmidt[k] = ub * column(left, k);
        f.c_schmidt[k] = uc * row(right, k);
    }
    return f;
}

Amplitudes Set2Form::amplitudes() const {
    Amplitudes a{};
    for (int q = 0; q < 5; q++) {
        a[kSupport[q]] = coefficients[q];
    }
    return a;
}

double Set2Form::residual_phase() const {
    // coefficients: 000, 001, 100, 110, 111
    return std::arg(coefficients[0] * coefficients[4] * std::conj(coefficients[1] * coefficients[3]));
}

Amplitudes reconstruct_canonical(const Set2Form &f) {
    return apply_product(f.amplitudes(), Mat2::identity(), Mat2::identity(), f.c_rotation.adjoint());
}

Set2Form set2_form(const CanonicalForm &cf, double tol) {
    Set2Form f;
    Amplitudes canon = cf.canonical_amplitudes();
    const double weight = cf.mu[1] + cf.mu[2];
    if (weight >= tol) {
        const double n = std::sqrt(weight);
        const Complex l1 = std::polar(cf.lambda[1], cf.phi);
        const double l2 = cf.lambda[2];
        f.c_rotation = Mat2{std::conj(l1) / n, l2 / n, -l2 / n, l1 / n};
        f.rotated = true;
        canon = apply_product(canon, Mat2::identity(), Mat2::identity(), f.c_rotation);
    }
    for (int q = 0; q < 5; q++) {
        f.coefficients[q] = canon[Set2Form::kSupport[q]];
    }
    return f;
}

}  // namespace triq
