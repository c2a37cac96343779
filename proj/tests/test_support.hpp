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

#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include "triq/linalg.hpp"
#include "triq/state.hpp"

namespace triq::testing {

inline Complex random_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    double re = g(rng);
    double im = g(rng);
    return {re, im};
}

inline Mat2 random_mat2(std::mt19937_64 &rng) {
    Complex a = random_complex(rng);
    Complex b = random_complex(rng);
    Complex c = random_complex(rng);
    Complex d = random_complex(rng);
    return {a, b, c, d};
}

inline double max_abs_diff(const Amplitudes &a, const Amplitudes &b) {
    double m = 0.0;
    for (int q = 0; q < 8; q++) {
        m = std::max(m, std::abs(a[q] - b[q]));
    }
    return m;
}

/// Builds a state directly in the canonical layout.
inline ThreeQubitState canonical_state(double l0, double l1, double l2, double l3, double l4, double phi) {
    Amplitudes a{};
    a[basis_index(0, 0, 0)] = l0;
    a[basis_index(1, 0, 0)] = std::polar(l1, phi);
    a[basis_index(1, 0, 1)] = l2;
    a[basis_index(1, 1, 0)] = l3;
    a[basis_index(1, 1, 1)] = l4;
    return ThreeQubitState::from_amplitudes(a, true);
}

/// Random local-unitary image of `s`.
inline ThreeQubitState scramble(const ThreeQubitState &s, std::mt19937_64 &rng) {
    Mat2 a = haar_unitary(rng);
    Mat2 b = haar_unitary(rng);
    Mat2 c = haar_unitary(rng);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    return apply_local(s, a, b, c, angle(rng));
}

inline std::string fixture_path(const std::string &name) {
    return std::string(TRIQ_TEST_DATA_DIR) + "/fixtures/" + name;
}

inline std::string read_text(const std::string &path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace triq::testing
