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
#include <cstddef>
#include <span>
#include <vector>

#include "triq/state.hpp"

namespace triq::kernels {

enum class Backend { Auto, Scalar, Avx2 };

const char *backend_name(Backend b);

/// True when the AVX2 kernel was compiled in and the running CPU has AVX2 and FMA.
bool avx2_available();

/// Maps Auto to the widest available backend. Requesting an unavailable
/// backend falls back to Scalar.
Backend resolve(Backend requested);

/// Structure-of-arrays copy of many states: re[k][n] is Re t_k of state n.
struct StateBatch {
    std::array<std::vector<double>, 8> re;
    std::array<std::vector<double>, 8> im;

    static StateBatch from_states(std::span<const ThreeQubitState> states);
    std::size_t size() const {
        return re[0].size();
    }
};

/// I1..I5 and the hyperdeterminant per state, SoA.
struct BatchInvariants {
    std::array<std::vector<double>, 5> i;
    std::vector<double> hdet_re;
    std::vector<double> hdet_im;
};

BatchInvariants batch_invariants(const StateBatch &batch, Backend backend = Backend::Auto);

// Raw kernel entry points. `re`/`im` point at eight arrays of length n;
// `out` at seven arrays of length n (I1..I5, Re Hdet, Im Hdet).
void batch_invariants_scalar(const double *const *re, const double *const *im, double *const *out, std::size_t n);
void batch_invariants_avx2(const double *const *re, const double *const *im, double *const *out, std::size_t n);

}  // namespace triq::kernels
