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


#include "triq/state.hpp"

#include <cmath>
#include <numbers>

#include "triq/error.hpp"

namespace triq {

const char *party_name(Party p) {
    switch (p) {
        case Party::A:
            return "A";
        case Party::B:
            return "B";
        case Party::C:
            return "C";
    }
    return "?";
}

namespace {

double amplitude_norm(const Amplitudes &a) {
    double s = 0.0;
    for (const auto &z : a) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

}  // namespace

ThreeQubitState ThreeQubitState::from_amplitudes(const Amplitudes &amplitudes, bool normalize) {
    double n = amplitude_norm(amplitudes);
    if (!std::isfinite(n)) {
        throw Error(ErrorKind::DegenerateInput, "amplitudes must be finite");
    }
    if (n == 0.0) {
        throw Error(ErrorKind::DegenerateInput, "zero amplitude vector");
    }
    if (!normalize) {
        if (std::abs(n - 1.0) > 1e-6) {
            throw Error(ErrorKind::NotNormalized, "amplitude norm is " + std::to_string(n));
        }
        return ThreeQubitState(amplitudes);
    }
    Amplitudes scaled = amplitudes;
    for (auto &z : scaled) {
        z /= n;
    }
    return ThreeQubitState(scaled);
}

ThreeQubitState ThreeQubitState::from_unit(const Amplitudes &amplitudes) {
    double n = amplitude_norm(amplitudes);
    if (!(std::abs(n - 1.0) < 1e-9)) {
        throw Error(ErrorKind::NotNormalized, "amplitude norm is " + std::to_string(n));
    }
    return ThreeQubitState(amplitudes);
}

ThreeQubitState ThreeQubitState::basis(int i, int j, int k) {
    Amplitudes a{};
    a[basis_index(i, j, k)] = 1.0;
    return ThreeQubitState(a);
}

ThreeQubitState ThreeQubitState::ghz() {
    Amplitudes a{};
    a[0] = a[7] = std::numbers::sqrt2 / 2;
    return ThreeQubitState(a);
}

ThreeQubitState ThreeQubitState::w() {
    Amplitudes a{};
    a[basis_index(0, 0, 1)] = a[basis_index(0, 1, 0)] = a[basis_index(1, 0, 0)] = std::numbers::inv_sqrt3;
    return ThreeQubitState(a);
}

double ThreeQubitState::norm() const {
    return amplitude_norm(amps_);
}

CoefficientPencil pencil(const ThreeQubitState &state) {
    const auto &t = state.amplitudes();
    return {{t[0], t[1], t[2], t[3]}, {t[4], t[5], t[6], t[7]}};
}

Amplitudes flatten(const CoefficientPencil &p) {
    return {p.t0.m00, p.t0.m01, p.t0.m10, p.t0.m11, p.t1.m00, p.t1.m01, p.t1.m10, p.t1.m11};
}

Amplitudes apply_product(const Amplitudes &amps, const Mat2 &a, const Mat2 &b, const Mat2 &c) {
    Amplitudes out{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                Complex acc = 0.0;
                for (int ip = 0; ip < 2; ip++) {
                    for (int jp = 0; jp < 2; jp++) {
                        Complex ab = a(i, ip) * b(j, jp);
                        for (int kp = 0; kp < 2; kp++) {
                            acc += ab * c(k, kp) * amps[basis_index(ip, jp, kp)];
                        }
                    }
                }
                out[basis_index(i, j, k)] = acc;
            }
        }
    }
    return out;
}

ThreeQubitState apply_local(const ThreeQubitState &state, const Mat2 &a, const Mat2 &b, const Mat2 &c,
                            double phase) {
    if (!a.is_unitary(1e-10) || !b.is_unitary(1e-10) || !c.is_unitary(1e-10)) {
        throw Error(ErrorKind::NotUnitary, "local factors must be unitary");
    }
    Amplitudes out = apply_product(state.amplitudes(), a, b, c);
    Complex g = std::polar(1.0, phase);
    for (auto &z : out) {
        z *= g;
    }
    return ThreeQubitState::from_unit(out);
}

DensityMatrix2 reduced_density(const ThreeQubitState &state, Party party) {
    const int shift = 2 - static_cast<int>(party);  // bit position of the party in the index
    DensityMatrix2 rho;
    for (int r = 0; r < 2; r++) {
        for (int s = 0; s < 2; s++) {
            Complex acc = 0.0;
            for (int idx = 0; idx < 8; idx++) {
                if (((idx >> shift) & 1) != r) {
                    continue;
                }
                int partner = (idx & ~(1 << shift)) | (s << shift);
                acc += state[idx] * std::conj(state[partner]);
            }
            rho(r, s) = acc;
        }
    }
    return rho;
}

DensityMatrix4 reduced_density_ab(const ThreeQubitState &state) {
    DensityMatrix4 rho;
    for (int r = 0; r < 4; r++) {
        for (int s = 0; s < 4; s++) {
            Complex acc = 0.0;
            for (int k = 0; k < 2; k++) {
                acc += state[2 * r + k] * std::conj(state[2 * s + k]);
            }
            rho(r, s) = acc;
        }
    }
    return rho;
}

DensityMatrix2 trace_out_second(const DensityMatrix4 &rho) {
    DensityMatrix2 out;
    for (int a = 0; a < 2; a++) {
        for (int ap = 0; ap < 2; ap++) {
            out(a, ap) = rho(2 * a, 2 * ap) + rho(2 * a + 1, 2 * ap + 1);
        }
    }
    return out;
}

DensityMatrix2 trace_out_first(const DensityMatrix4 &rho) {
    DensityMatrix2 out;
    for (int b = 0; b < 2; b++) {
        for (int bp = 0; bp < 2; bp++) {
            out(b, bp) = rho(b, bp) + rho(2 + b, 2 + bp);
        }
    }
    return out;
}

double purity(const DensityMatrix2 &rho) {
    return std::norm(rho.m00) + std::norm(rho.m01) + std::norm(rho.m10) + std::norm(rho.m11);
}

Complex overlap(const ThreeQubitState &bra, const ThreeQubitState &ket) {
    Complex acc = 0.0;
    for (int i = 0; i < 8; i++) {
        acc += std::conj(bra[i]) * ket[i];
    }
    return acc;
}

double fidelity(const ThreeQubitState &a, const ThreeQubitState &b) {
    return std::norm(overlap(a, b));
}

PartyPermutation PartyPermutation::bring_first(Party party) {
    switch (party) {
        case Party::A:
            return {{0, 1, 2}};
        case Party::B:
            return {{1, 0, 2}};
        case Party::C:
            return {{2, 0, 1}};
    }
    return {};
}

PartyPermutation PartyPermutation::swap(Party x, Party y) {
    PartyPermutation p;
    std::swap(p.order[static_cast<int>(x)], p.order[static_cast<int>(y)]);
    return p;
}

PartyPermutation PartyPermutation::inverse() const {
    PartyPermutation inv;
    for (int slot = 0; slot < 3; slot++) {
        inv.order[order[slot]] = slot;
    }
    return inv;
}

PartyPermutation PartyPermutation::compose(const PartyPermutation &first, const PartyPermutation &second) {
    // After `first`, slot q holds original party first.order[q]; `second` moves
    // slot second.order[p] into slot p.
    PartyPermutation out;
    for (int p = 0; p < 3; p++) {
        out.order[p] = first.order[second.order[p]];
    }
    return out;
}

ThreeQubitState permute_parties(const ThreeQubitState &state, const PartyPermutation &perm) {
    Amplitudes out{};
    for (int idx = 0; idx < 8; idx++) {
        std::array<int, 3> bits{(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
        int src = 0;
        for (int slot = 0; slot < 3; slot++) {
            src |= bits[slot] << (2 - perm.order[slot]);
        }
        out[idx] = state[src];
    }
    return ThreeQubitState::from_unit(out);
}

ThreeQubitState haar_random(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Amplitudes a;
    for (auto &z : a) {
        double re = gauss(rng);
        double im = gauss(rng);
        z = {re, im};
    }
    return ThreeQubitState::from_amplitudes(a, true);
}

ThreeQubitState haar_random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haar_random(rng);
}

Mat2 haar_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<double, 4> q;
    double n = 0.0;
    for (auto &x : q) {
        x = gauss(rng);
        n += x * x;
    }
    n = std::sqrt(n);
    Complex alpha{q[0] / n, q[1] / n};
    Complex beta{q[2] / n, q[3] / n};
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Complex phase = std::polar(1.0, angle(rng));
    return phase * complete_unitary({alpha, beta});
}

}  // namespace triq
