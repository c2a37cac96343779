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


#include "triq/invariants.hpp"

#include <cmath>

namespace triq {

Complex hyperdeterminant(const ThreeQubitState &s) {
    auto t = [&](int i, int j, int k) { return s.at(i, j, k); };
    Complex squares = t(0, 0, 0) * t(0, 0, 0) * t(1, 1, 1) * t(1, 1, 1) + t(0, 0, 1) * t(0, 0, 1) * t(1, 1, 0) * t(1, 1, 0) +
                      t(0, 1, 0) * t(0, 1, 0) * t(1, 0, 1) * t(1, 0, 1) + t(1, 0, 0) * t(1, 0, 0) * t(0, 1, 1) * t(0, 1, 1);
    Complex pairs = t(0, 0, 0) * t(0, 0, 1) * t(1, 1, 0) * t(1, 1, 1) + t(0, 0, 0) * t(0, 1, 0) * t(1, 0, 1) * t(1, 1, 1) +
                    t(0, 0, 0) * t(0, 1, 1) * t(1, 0, 0) * t(1, 1, 1) + t(0, 0, 1) * t(0, 1, 0) * t(1, 0, 1) * t(1, 1, 0) +
                    t(0, 0, 1) * t(0, 1, 1) * t(1, 1, 0) * t(1, 0, 0) + t(0, 1, 0) * t(0, 1, 1) * t(1, 0, 1) * t(1, 0, 0);
    Complex quads = t(0, 0, 0) * t(0, 1, 1) * t(1, 0, 1) * t(1, 1, 0) + t(0, 0, 1) * t(0, 1, 0) * t(1, 0, 0) * t(1, 1, 1);
    return squares - 2.0 * pairs + 4.0 * quads;
}

DirectInvariants invariants_direct(const ThreeQubitState &state) {
    DirectInvariants out;
    DensityMatrix4 rho_ab = reduced_density_ab(state);
    DensityMatrix2 rho_a = reduced_density(state, Party::A);
    DensityMatrix2 rho_b = reduced_density(state, Party::B);
    DensityMatrix2 rho_c = reduced_density(state, Party::C);
    out.i[0] = purity(rho_a);
    out.i[1] = purity(rho_b);
    out.i[2] = purity(rho_c);

    Complex i4 = 0.0;
    for (int p = 0; p < 4; p++) {
        for (int q = 0; q < 4; q++) {
            Complex kron = rho_a(p >> 1, q >> 1) * rho_b(p & 1, q & 1);
            i4 += kron * rho_ab(q, p);
        }
    }
    out.i[3] = i4.real();
    out.hdet = hyperdeterminant(state);
    out.i[4] = std::norm(out.hdet);
    return out;
}

double canonical_delta(const CanonicalForm &cf) {
    const auto &l = cf.lambda;
    return std::norm(std::polar(l[1] * l[4], cf.phi) - l[2] * l[3]);
}

std::array<double, 5> invariants_from_canonical(const CanonicalForm &cf) {
    const auto &m = cf.mu;
    const double d = canonical_delta(cf);
    return {
        1.0 - 2.0 * m[0] * (1.0 - m[0] - m[1]),
        1.0 - 2.0 * m[0] * (1.0 - m[0] - m[1] - m[2]) - 2.0 * d,
        1.0 - 2.0 * m[0] * (1.0 - m[0] - m[1] - m[3]) - 2.0 * d,
        1.0 + m[0] * (m[2] * m[3] - m[1] * m[4] - 2.0 * m[2] - 3.0 * m[3] - 3.0 * m[4]) - (2.0 - m[0]) * d,
        m[0] * m[0] * m[4] * m[4],
    };
}

JInvariants invariants_j(const CanonicalForm &cf) {
    const auto &m = cf.mu;
    JInvariants out;
    out.delta = canonical_delta(cf);
    out.j = {
        out.delta,
        m[0] * m[2],
        m[0] * m[3],
        m[0] * m[4],
        m[0] * (out.delta + m[2] * m[3] - m[1] * m[4]),
    };
    return out;
}

InvariantSet invariants(const ThreeQubitState &state, const CanonicalForm &cf) {
    DirectInvariants direct = invariants_direct(state);
    JInvariants js = invariants_j(cf);
    return {direct.i, js.j, js.delta, direct.hdet};
}

InvariantSet invariants(const ThreeQubitState &state, double tol) {
    return invariants(state, canonical_form(state, tol));
}

std::vector<DirectInvariants> invariants_direct_batch(std::span<const ThreeQubitState> states,
                                                      kernels::Backend backend) {
    kernels::BatchInvariants b = kernels::batch_invariants(kernels::StateBatch::from_states(states), backend);
    std::vector<DirectInvariants> out(states.size());
    for (std::size_t s = 0; s < states.size(); s++) {
        for (int q = 0; q < 5; q++) {
            out[s].i[q] = b.i[q][s];
        }
        out[s].hdet = {b.hdet_re[s], b.hdet_im[s]};
    }
    return out;
}

}  // namespace triq
