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
#include <span>
#include <vector>

#include "triq/canonical.hpp"
#include "triq/kernels/batch_invariants.hpp"
#include "triq/state.hpp"

namespace triq {

/// Local-unitary invariants of a three-qubit pure state.
///
///   I1, I2, I3  single-party purities Tr rho_X^2, each in [1/2, 1]
///   I4          Tr((rho_A x rho_B) rho_AB), in [1/4, 1]
///   I5          |Hdet|^2, in [0, 1/16]
///   J1 = Delta, J2 = mu0 mu2, J3 = mu0 mu3, J4 = mu0 mu4, J5 = mu0 (Delta + mu2 mu3 - mu1 mu4)
///
/// with Delta = |l1 l4 e^{i phi} - l2 l3|^2 read off the canonical form.
struct InvariantSet {
    std::array<double, 5> i{};
    std::array<double, 5> j{};
    double delta = 0.0;
    Complex hdet{};

    bool operator==(const InvariantSet &) const = default;
};

struct DirectInvariants {
    std::array<double, 5> i{};
    Complex hdet{};
};

struct JInvariants {
    std::array<double, 5> j{};
    double delta = 0.0;
};

/// Cayley's hyperdeterminant of the 2x2x2 amplitude tensor.
Complex hyperdeterminant(const ThreeQubitState &state);

/// I1..I5 from reduced density matrices and the hyperdeterminant.
DirectInvariants invariants_direct(const ThreeQubitState &state);

/// I1..I5 from the closed forms in the canonical parameters.
std::array<double, 5> invariants_from_canonical(const CanonicalForm &cf);

double canonical_delta(const CanonicalForm &cf);
JInvariants invariants_j(const CanonicalForm &cf);

/// Direct I's and hdet, plus J's and Delta from the supplied canonical form.
InvariantSet invariants(const ThreeQubitState &state, const CanonicalForm &cf);
InvariantSet invariants(const ThreeQubitState &state, double tol = kDefaultTol);

/// invariants_direct over many states through the batched kernel.
std::vector<DirectInvariants> invariants_direct_batch(std::span<const ThreeQubitState> states,
                                                      kernels::Backend backend = kernels::Backend::Auto);

}  // namespace triq
