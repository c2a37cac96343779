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

#include "triq/canonical.hpp"
#include "triq/classify.hpp"
#include "triq/state.hpp"

namespace triq {

/// Single-qubit factors of a product ket |a>|b>|c>.
using ProductKet = std::array<Vec2, 3>;

Amplitudes product_amplitudes(const ProductKet &ket);

/// |psi> = alpha |a b c> + beta |a' b' c'> with alpha, beta >= 0 and normalized factors.
struct TwoProductDecomposition {
    double alpha = 0.0;
    double beta = 0.0;
    ProductKet ket1{};
    ProductKet ket2{};
    /// Type-1 or type-2a construction rather than the two-root split.
    bool trivial = false;
    TypeLabel type = TypeLabel::Generic;

    bool operator==(const TwoProductDecomposition &) const = default;
};

Amplitudes reconstruct(const TwoProductDecomposition &d);

/// Coefficient values alpha = sqrt(J1 + J4)/l4, beta = sqrt(mu2 mu3 + mu4 (mu4 + mu2 + mu3))/l4.
std::array<double, 2> two_product_coefficients(const CanonicalForm &cf);

/// Throws NotDecomposable for genuinely tripartite states with I5 = 0 (types 3a and 4a).
TwoProductDecomposition two_product(const ThreeQubitState &state, double tol = kDefaultClassifyTol);

/// |psi> = cos(theta) |a0 b0 c0> + sin(theta) |a1> (cos(w) |b'0 c'0> + sin(w) |b'1 c'1>),
/// every vector expressed in the original frame.
struct ProductBiseparableForm {
    double theta = 0.0;        // [0, pi/2]
    double omega_angle = 0.0;  // [0, pi/4]
    Vec2 a0{}, a1{};           // orthonormal, A
    Vec2 b0{}, c0{};           // product-term factors on B and C
    std::array<Vec2, 2> b_schmidt{};
    std::array<Vec2, 2> c_schmidt{};

    bool operator==(const ProductBiseparableForm &) const = default;
};

Amplitudes reconstruct(const ProductBiseparableForm &f);

ProductBiseparableForm product_plus_biseparable(const CanonicalForm &cf);

/// Canonical state rewritten in a rotated C basis so that its support lies in
/// {000, 001, 100, 110, 111}.
struct Set2Form {
    static constexpr std::array<int, 5> kSupport{0, 1, 4, 6, 7};

    std::array<Complex, 5> coefficients{};
    /// Rows are <0'| and <1'|: new C amplitudes = c_rotation * old C amplitudes.
    Mat2 c_rotation = Mat2::identity();
    bool rotated = false;

    Amplitudes amplitudes() const;
    /// arg(c000 c111 / (c001 c110)), the phase left after absorbing local basis phases.
    double residual_phase() const;

    bool operator==(const Set2Form &) const = default;
};

/// Canonical-frame amplitudes recovered from a set-2 form.
Amplitudes reconstruct_canonical(const Set2Form &f);

Set2Form set2_form(const CanonicalForm &cf, double tol = kDefaultTol);

}  // namespace triq
