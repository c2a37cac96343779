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
#include <cstdint>
#include <random>

#include "triq/linalg.hpp"

namespace triq {

enum class Party { A = 0, B = 1, C = 2 };

const char *party_name(Party p);

using Amplitudes = std::array<Complex, 8>;

/// Index of basis ket |ijk> in the amplitude array; party A is the most significant bit.
constexpr int basis_index(int i, int j, int k) {
    return 4 * i + 2 * j + k;
}

/// Pure state of three qubits with unit 2-norm.
class ThreeQubitState {
   public:
    /// Validating constructor for external input. Rejects the zero vector
    /// (DegenerateInput) and, unless `normalize` is set, vectors whose norm
    /// differs from 1 by more than 1e-6 (NotNormalized).
    static ThreeQubitState from_amplitudes(const Amplitudes &amplitudes, bool normalize = false);

    /// For amplitudes produced by norm-preserving arithmetic; checks the norm
    /// to 1e-9 and keeps the values untouched.
    static ThreeQubitState from_unit(const Amplitudes &amplitudes);

    static ThreeQubitState basis(int i, int j, int k);
    static ThreeQubitState ghz();
    static ThreeQubitState w();

    const Amplitudes &amplitudes() const {
        return amps_;
    }
    Complex operator[](int index) const {
        return amps_[index];
    }
    Complex at(int i, int j, int k) const {
        return amps_[basis_index(i, j, k)];
    }
    double norm() const;

    bool operator==(const ThreeQubitState &) const = default;

   private:
    explicit ThreeQubitState(const Amplitudes &a) : amps_(a) {
    }
    Amplitudes amps_{};
};

/// Slices of the amplitude tensor along party A: (T_i)_{jk} = t_{ijk}.
struct CoefficientPencil {
    Mat2 t0;
    Mat2 t1;
};

CoefficientPencil pencil(const ThreeQubitState &state);

/// Amplitudes from a pencil, the inverse of `pencil`.
Amplitudes flatten(const CoefficientPencil &p);

/// e^{i phase} (A x B x C)|state>. Each factor must be unitary within 1e-10.
ThreeQubitState apply_local(const ThreeQubitState &state, const Mat2 &a, const Mat2 &b, const Mat2 &c,
                            double phase = 0.0);

/// Arbitrary (not necessarily unitary) product operator on raw amplitudes.
Amplitudes apply_product(const Amplitudes &amps, const Mat2 &a, const Mat2 &b, const Mat2 &c);

using DensityMatrix2 = Mat2;

/// Two-qubit density matrix, row-major in the index 2a + b.
struct DensityMatrix4 {
    std::array<Complex, 16> m{};

    Complex operator()(int row, int col) const {
        return m[4 * row + col];
    }
    Complex &operator()(int row, int col) {
        return m[4 * row + col];
    }
};

DensityMatrix2 reduced_density(const ThreeQubitState &state, Party party);
DensityMatrix4 reduced_density_ab(const ThreeQubitState &state);

/// Tr_B of a two-qubit density matrix.
DensityMatrix2 trace_out_second(const DensityMatrix4 &rho);
/// Tr_A of a two-qubit density matrix.
DensityMatrix2 trace_out_first(const DensityMatrix4 &rho);

double purity(const DensityMatrix2 &rho);

Complex overlap(const ThreeQubitState &bra, const ThreeQubitState &ket);
double fidelity(const ThreeQubitState &a, const ThreeQubitState &b);

/// Slot p of the permuted state holds original party `order[p]`.
struct PartyPermutation {
    std::array<int, 3> order{0, 1, 2};

    static PartyPermutation identity() {
        return {};
    }
    /// Puts `party` first; the remaining two keep their relative order.
    static PartyPermutation bring_first(Party party);
    static PartyPermutation swap(Party x, Party y);

    PartyPermutation inverse() const;
    /// Permutation equivalent to applying `first`, then `second`.
    static PartyPermutation compose(const PartyPermutation &first, const PartyPermutation &second);

    bool operator==(const PartyPermutation &) const = default;
};

ThreeQubitState permute_parties(const ThreeQubitState &state, const PartyPermutation &perm);

/// Normalized vector of eight independent standard complex Gaussians.
ThreeQubitState haar_random(std::mt19937_64 &rng);
ThreeQubitState haar_random(std::uint64_t seed);

/// Haar-distributed element of U(2).
Mat2 haar_unitary(std::mt19937_64 &rng);

}  // namespace triq
