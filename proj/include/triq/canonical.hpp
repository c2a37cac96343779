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
#include <vector>

#include "triq/linalg.hpp"
#include "triq/state.hpp"

namespace triq {

enum class RootCount { One, Two, Continuum };
enum class RootChoice { Unique, TieBreak };

const char *root_count_name(RootCount c);
const char *root_choice_name(RootChoice c);

/// Five-term canonical form
///
///     e^{i omega} (uA x uB x uC)|psi> = l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>
///
/// with every l_i >= 0, 0 <= phi <= pi and uA, uB, uC special unitary.
struct CanonicalForm {
    std::array<double, 5> lambda{};
    std::array<double, 5> mu{};  // lambda_i^2
    double phi = 0.0;
    Mat2 ua = Mat2::identity();
    Mat2 ub = Mat2::identity();
    Mat2 uc = Mat2::identity();
    double omega = 0.0;
    ProjectiveRoot root;
    RootCount root_count = RootCount::Two;
    RootChoice root_choice = RootChoice::Unique;
    /// Fubini-Study separation sin(angle) between the two pencil roots; 0 for one root.
    double root_gap = 0.0;

    /// Amplitude vector of the canonical-frame state.
    Amplitudes canonical_amplitudes() const;
    /// The two blocks of the canonical layout: M0 = diag(l0, 0) and
    /// M1 = [[l1 e^{i phi}, l2], [l3, l4]].
    Mat2 m1() const;

    bool operator==(const CanonicalForm &) const = default;
};

/// Throws InvalidForm unless the form satisfies its invariants at `tol`.
void validate(const CanonicalForm &cf, double tol = 1e-9);

CanonicalForm canonical_form(const ThreeQubitState &state, double tol = kDefaultTol);

/// One gauge-fixed form per candidate root of the pencil quadratic, before the
/// phi-range selection. phi is reported in [0, 2 pi).
std::vector<CanonicalForm> canonical_candidates(const ThreeQubitState &state, double tol = kDefaultTol);

/// Rebuilds the original state: e^{-i omega} (uA^dag x uB^dag x uC^dag) applied to
/// the canonical amplitudes.
ThreeQubitState reconstruct(const CanonicalForm &cf);

/// Single-party bra <e| whose partial contraction with the state leaves the
/// other two parties in a product state.
struct ErasingDirection {
    Party party = Party::A;
    Vec2 ket{};
    /// <e|psi> over the remaining two parties, index 2*first + second in their
    /// original order.
    std::array<Complex, 4> residual{};
    double probability = 0.0;
    /// Continuum of directions (only representatives returned) or a zero-probability outcome.
    bool degenerate = false;

    Mat2 residual_matrix() const {
        return {residual[0], residual[1], residual[2], residual[3]};
    }

    bool operator==(const ErasingDirection &) const = default;
};

std::vector<ErasingDirection> erasing_states(const ThreeQubitState &state, Party party, double tol = kDefaultTol);

}  // namespace triq
