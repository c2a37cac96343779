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


#include "invariants_lane.hpp"
#include "triq/kernels/batch_invariants.hpp"

namespace triq::kernels {

void batch_invariants_scalar(const double *const *re, const double *const *im, double *const *out, std::size_t n) {
    for (std::size_t s = 0; s < n; s++) {
        detail::Cx<double> t[8];
        for (int k = 0; k < 8; k++) {
            t[k] = {re[k][s], im[k][s]};
        }
        double lane[7];
        detail::invariants_lane(t, lane);
        for (int q = 0; q < 7; q++) {
            out[q][s] = lane[q];
        }
    }
}

}  // namespace triq::kernels
