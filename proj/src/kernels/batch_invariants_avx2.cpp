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


// Compiled with -mavx2 -mfma; only reached through `resolve` after a CPUID check.

#include <immintrin.h>

#include "invariants_lane.hpp"
#include "triq/kernels/batch_invariants.hpp"

namespace triq::kernels {

namespace {

struct Vec4d {
    __m256d v;

    Vec4d() = default;
    explicit Vec4d(double x) : v(_mm256_set1_pd(x)) {
    }
    explicit Vec4d(__m256d x) : v(x) {
    }
};

inline Vec4d operator+(Vec4d a, Vec4d b) {
    return Vec4d(_mm256_add_pd(a.v, b.v));
}
inline Vec4d operator-(Vec4d a, Vec4d b) {
    return Vec4d(_mm256_sub_pd(a.v, b.v));
}
inline Vec4d operator*(Vec4d a, Vec4d b) {
    return Vec4d(_mm256_mul_pd(a.v, b.v));
}

constexpr std::size_t kWidth = 4;

inline void run_block(const double *const *re, const double *const *im, double *const *out, std::size_t at) {
    detail::Cx<Vec4d> t[8];
    for (int k = 0; k < 8; k++) {
        t[k] = {Vec4d(_mm256_loadu_pd(re[k] + at)), Vec4d(_mm256_loadu_pd(im[k] + at))};
    }
    Vec4d lane[7];
    detail::invariants_lane(t, lane);
    for (int q = 0; q < 7; q++) {
        _mm256_storeu_pd(out[q] + at, lane[q].v);
    }
}

}  // namespace

void batch_invariants_avx2(const double *const *re, const double *const *im, double *const *out, std::size_t n) {
    std::size_t s = 0;
    for (; s + kWidth <= n; s += kWidth) {
        run_block(re, im, out, s);
    }
    if (s == n) {
        return;
    }
    // Tail: zero-padded copy through a full-width block.
    double pad_re[8][kWidth] = {};
    double pad_im[8][kWidth] = {};
    double pad_out[7][kWidth] = {};
    const double *pre[8];
    const double *pim[8];
    double *pout[7];
    const std::size_t rest = n - s;
    for (int k = 0; k < 8; k++) {
        for (std::size_t l = 0; l < rest; l++) {
            pad_re[k][l] = re[k][s + l];
            pad_im[k][l] = im[k][s + l];
        }
        pre[k] = pad_re[k];
        pim[k] = pad_im[k];
    }
    for (int q = 0; q < 7; q++) {
        pout[q] = pad_out[q];
    }
    run_block(pre, pim, pout, 0);
    for (int q = 0; q < 7; q++) {
        for (std::size_t l = 0; l < rest; l++) {
            out[q][s + l] = pad_out[q][l];
        }
    }
}

}  // namespace triq::kernels
