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

// Lane-generic arithmetic for the direct-path invariants. Instantiated with
// `double` by the scalar kernel and with a 4-wide register type by the AVX2
// kernel. Everything here is a template so that no out-of-line symbol
// compiled with wider ISA flags can leak into the scalar translation units.

namespace triq::kernels::detail {

template <class V>
struct Cx {
    V re;
    V im;
};

template <class V>
inline Cx<V> operator+(const Cx<V> &a, const Cx<V> &b) {
    return {a.re + b.re, a.im + b.im};
}

template <class V>
inline Cx<V> operator-(const Cx<V> &a, const Cx<V> &b) {
    return {a.re - b.re, a.im - b.im};
}

template <class V>
inline Cx<V> operator*(const Cx<V> &a, const Cx<V> &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class V>
inline Cx<V> scale(const Cx<V> &a, const V &s) {
    return {a.re * s, a.im * s};
}

// a * conj(b)
template <class V>
inline Cx<V> mul_conj(const Cx<V> &a, const Cx<V> &b) {
    return {a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
}

template <class V>
inline V abs2(const Cx<V> &a) {
    return a.re * a.re + a.im * a.im;
}

// Single-party reduced density matrix entries (rho00, rho11 real; rho01 complex)
// for the party whose index bit sits at `shift`.
template <class V, int Shift>
inline void reduced(const Cx<V> *t, V &r00, V &r11, Cx<V> &r01) {
    constexpr int bit = 1 << Shift;
    r00 = V(0.0);
    r11 = V(0.0);
    r01 = {V(0.0), V(0.0)};
    for (int idx = 0; idx < 8; idx++) {
        if (idx & bit) {
            continue;
        }
        const Cx<V> &lo = t[idx];
        const Cx<V> &hi = t[idx | bit];
        r00 = r00 + abs2(lo);
        r11 = r11 + abs2(hi);
        r01 = r01 + mul_conj(lo, hi);
    }
}

template <class V>
inline V purity(const V &r00, const V &r11, const Cx<V> &r01) {
    V two = V(2.0);
    return r00 * r00 + r11 * r11 + two * abs2(r01);
}

template <class V>
inline Cx<V> entry(const V &r00, const V &r11, const Cx<V> &r01, int row, int col) {
    V zero = V(0.0);
    if (row == col) {
        return {row == 0 ? r00 : r11, zero};
    }
    if (row == 0) {
        return r01;
    }
    return {r01.re, zero - r01.im};
}

/// out[0..4] = I1..I5, out[5], out[6] = Re, Im of the hyperdeterminant.
template <class V>
inline void invariants_lane(const Cx<V> *t, V *out) {
    V a00, a11, b00, b11, c00, c11;
    Cx<V> a01, b01, c01;
    reduced<V, 2>(t, a00, a11, a01);
    reduced<V, 1>(t, b00, b11, b01);
    reduced<V, 0>(t, c00, c11, c01);
    out[0] = purity(a00, a11, a01);
    out[1] = purity(b00, b11, b01);
    out[2] = purity(c00, c11, c01);

    // rho_AB[p][q] = sum_k t[2p + k] conj(t[2q + k]); I4 = Re sum (rhoA x rhoB)[p][q] rho_AB[q][p].
    V i4 = V(0.0);
    for (int p = 0; p < 4; p++) {
        for (int q = 0; q < 4; q++) {
            Cx<V> rab = mul_conj(t[2 * q], t[2 * p]) + mul_conj(t[2 * q + 1], t[2 * p + 1]);
            Cx<V> x = entry(a00, a11, a01, p >> 1, q >> 1) * entry(b00, b11, b01, p & 1, q & 1);
            i4 = i4 + (x.re * rab.re - x.im * rab.im);
        }
    }
    out[3] = i4;

    // Cayley hyperdeterminant, t[4i + 2j + k].
    const Cx<V> &t000 = t[0], &t001 = t[1], &t010 = t[2], &t011 = t[3];
    const Cx<V> &t100 = t[4], &t101 = t[5], &t110 = t[6], &t111 = t[7];
    Cx<V> sq = (t000 * t111) * (t000 * t111) + (t001 * t110) * (t001 * t110) + (t010 * t101) * (t010 * t101) +
               (t100 * t011) * (t100 * t011);
    Cx<V> pairs = (t000 * t001) * (t110 * t111) + (t000 * t010) * (t101 * t111) + (t000 * t011) * (t100 * t111) +
                  (t001 * t010) * (t101 * t110) + (t001 * t011) * (t110 * t100) + (t010 * t011) * (t101 * t100);
    Cx<V> quads = (t000 * t011) * (t101 * t110) + (t001 * t010) * (t100 * t111);
    Cx<V> h = sq - scale(pairs, V(2.0)) + scale(quads, V(4.0));
    out[4] = abs2(h);
    out[5] = h.re;
    out[6] = h.im;
}

}  // namespace triq::kernels::detail
