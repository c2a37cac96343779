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


#include <stdexcept>

#include "triq/kernels/batch_invariants.hpp"

namespace triq::kernels {

const char *backend_name(Backend b) {
    switch (b) {
        case Backend::Auto:
            return "auto";
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
    }
    return "?";
}

bool avx2_available() {
#if defined(TRIQ_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Backend resolve(Backend requested) {
    if (requested == Backend::Scalar) {
        return Backend::Scalar;
    }
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

#if !defined(TRIQ_HAVE_AVX2)
void batch_invariants_avx2(const double *const *, const double *const *, double *const *, std::size_t) {
    throw std::logic_error("AVX2 kernel not compiled in");
}
#endif

StateBatch StateBatch::from_states(std::span<const ThreeQubitState> states) {
    StateBatch b;
    for (int k = 0; k < 8; k++) {
        b.re[k].resize(states.size());
        b.im[k].resize(states.size());
    }
    for (std::size_t s = 0; s < states.size(); s++) {
        for (int k = 0; k < 8; k++) {
            b.re[k][s] = states[s][k].real();
            b.im[k][s] = states[s][k].imag();
        }
    }
    return b;
}

BatchInvariants batch_invariants(const StateBatch &batch, Backend backend) {
    const std::size_t n = batch.size();
    BatchInvariants out;
    const double *re[8];
    const double *im[8];
    for (int k = 0; k < 8; k++) {
        re[k] = batch.re[k].data();
        im[k] = batch.im[k].data();
    }
    double *dst[7];
    for (int q = 0; q < 5; q++) {
        out.i[q].resize(n);
        dst[q] = out.i[q].data();
    }
    out.hdet_re.resize(n);
    out.hdet_im.resize(n);
    dst[5] = out.hdet_re.data();
    dst[6] = out.hdet_im.data();

    if (resolve(backend) == Backend::Avx2) {
        batch_invariants_avx2(re, im, dst, n);
    } else {
        batch_invariants_scalar(re, im, dst, n);
    }
    return out;
}

}  // namespace triq::kernels
