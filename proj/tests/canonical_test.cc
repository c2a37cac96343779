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


#include "triq/canonical.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "test_support.hpp"
#include "triq/error.hpp"

using namespace triq;
using triq::testing::canonical_state;
using triq::testing::max_abs_diff;
using triq::testing::scramble;

namespace {

void expect_lambda(const CanonicalForm &cf, std::array<double, 5> expected, double tol) {
    for (int q = 0; q < 5; q++) {
        EXPECT_NEAR(cf.lambda[q], expected[q], tol) << "lambda" << q;
    }
}

// Canonical-frame amplitudes computed from the unitaries, independent of canonical_amplitudes().
Amplitudes forward(const ThreeQubitState &s, const CanonicalForm &cf) {
    ThreeQubitState t = apply_local(s, cf.ua, cf.ub, cf.uc, cf.omega);
    return t.amplitudes();
}

Amplitudes layout(const CanonicalForm &cf) {
    Amplitudes a{};
    a[0] = cf.lambda[0];
    a[4] = std::polar(cf.lambda[1], cf.phi);
    a[5] = cf.lambda[2];
    a[6] = cf.lambda[3];
    a[7] = cf.lambda[4];
    return a;
}

}  // namespace

TEST(canonical_form, ghz) {
    CanonicalForm cf = canonical_form(ThreeQubitState::ghz());
    const double r = std::numbers::sqrt2 / 2;
    expect_lambda(cf, {r, 0, 0, 0, r}, 1e-12);
    EXPECT_EQ(cf.phi, 0.0);
    EXPECT_EQ(cf.root_count, RootCount::Two);
    EXPECT_NEAR(cf.root_gap, 1.0, 1e-12);
}

TEST(canonical_form, product) {
    CanonicalForm cf = canonical_form(ThreeQubitState::basis(0, 0, 0));
    expect_lambda(cf, {1, 0, 0, 0, 0}, 1e-12);
    EXPECT_EQ(cf.root_count, RootCount::Continuum);
    EXPECT_EQ(cf.root_choice, RootChoice::TieBreak);
}

TEST(canonical_form, product_prefers_lambda0) {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 50; n++) {
        ThreeQubitState s = scramble(ThreeQubitState::basis(1, 1, 0), rng);
        CanonicalForm cf = canonical_form(s);
        expect_lambda(cf, {1, 0, 0, 0, 0}, 1e-9);
    }
}

TEST(canonical_form, w) {
    CanonicalForm cf = canonical_form(ThreeQubitState::w());
    const double r = std::numbers::inv_sqrt3;
    expect_lambda(cf, {r, 0, r, r, 0}, 1e-12);
    EXPECT_EQ(cf.phi, 0.0);
    EXPECT_EQ(cf.root_count, RootCount::One);
    EXPECT_EQ(cf.root.multiplicity, RootMultiplicity::Double);
}

TEST(canonical_form, a_unentangled_branch) {
    // |0>_A (cos 0.3|00> + sin 0.3|11>): T'0 vanishes for the chosen root, M1 is diagonalized.
    Amplitudes a{};
    a[basis_index(0, 0, 0)] = std::cos(0.3);
    a[basis_index(0, 1, 1)] = std::sin(0.3);
    ThreeQubitState s = ThreeQubitState::from_amplitudes(a);
    CanonicalForm cf = canonical_form(s);
    validate(cf);
    EXPECT_LT(max_abs_diff(forward(s, cf), layout(cf)), 1e-12);
    EXPECT_NEAR(cf.lambda[2], 0.0, 1e-12);
    EXPECT_NEAR(cf.lambda[3], 0.0, 1e-12);
    EXPECT_EQ(cf.phi, 0.0);
}

TEST(canonical_form, fixed_point_on_canonical_states) {
    // Interior phi, all lambdas distinct: the canonical layout is already its own form.
    ThreeQubitState s = canonical_state(0.5, 0.3, 0.4, 0.45, 0.55, 1.2);
    CanonicalForm cf = canonical_form(s);
    double n = std::sqrt(0.25 + 0.09 + 0.16 + 0.2025 + 0.3025);
    expect_lambda(cf, {0.5 / n, 0.3 / n, 0.4 / n, 0.45 / n, 0.55 / n}, 1e-10);
    EXPECT_NEAR(cf.phi, 1.2, 1e-10);
    EXPECT_EQ(cf.root_choice, RootChoice::Unique);
}

TEST(canonical_form, layout_holds_for_random_states) {
    std::mt19937_64 rng(101);
    for (int n = 0; n < 1000; n++) {
        ThreeQubitState s = haar_random(rng);
        CanonicalForm cf = canonical_form(s);
        ASSERT_NO_THROW(validate(cf));
        ASSERT_LT(max_abs_diff(forward(s, cf), layout(cf)), 1e-8);
        ASSERT_EQ(cf.canonical_amplitudes(), layout(cf));
        ASSERT_GE(cf.phi, 0.0);
        ASSERT_LE(cf.phi, std::numbers::pi);
        for (int q = 0; q < 5; q++) {
            ASSERT_GE(cf.lambda[q], 0.0);
            ASSERT_EQ(cf.mu[q], cf.lambda[q] * cf.lambda[q]);
        }
        ASSERT_NEAR(std::abs(cf.ua.det() - 1.0), 0.0, 1e-10);
        ASSERT_NEAR(std::abs(cf.ub.det() - 1.0), 0.0, 1e-10);
        ASSERT_NEAR(std::abs(cf.uc.det() - 1.0), 0.0, 1e-10);
    }
}

TEST(reconstruct, round_trip_fidelity) {
    std::mt19937_64 rng(202);
    double worst = 1.0;
    for (int n = 0; n < 1000; n++) {
        ThreeQubitState s = haar_random(rng);
        worst = std::min(worst, fidelity(reconstruct(canonical_form(s)), s));
    }
    EXPECT_GT(worst, 1.0 - 1e-8);
}

TEST(reconstruct, named_states) {
    for (const ThreeQubitState &s : {ThreeQubitState::ghz(), ThreeQubitState::w(), ThreeQubitState::basis(0, 0, 0)}) {
        EXPECT_LT(max_abs_diff(reconstruct(canonical_form(s)).amplitudes(), s.amplitudes()), 1e-12);
    }
}

TEST(reconstruct, rejects_invalid_form) {
    CanonicalForm cf = canonical_form(ThreeQubitState::ghz());
    cf.lambda[0] = -cf.lambda[0];
    EXPECT_THROW(reconstruct(cf), Error);
    CanonicalForm g = canonical_form(ThreeQubitState::ghz());
    g.phi = 4.0;
    EXPECT_THROW(validate(g), Error);
    CanonicalForm h = canonical_form(ThreeQubitState::ghz());
    h.lambda[1] = 0.5;
    h.mu[1] = 0.25;
    try {
        validate(h);
        ADD_FAILURE();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidForm);
    }
}

TEST(canonical_form, local_unitary_invariance) {
    std::mt19937_64 rng(303);
    int checked = 0;
    for (int n = 0; n < 500; n++) {
        ThreeQubitState s = haar_random(rng);
        CanonicalForm cf = canonical_form(s);
        if (cf.root_count != RootCount::Two || cf.root_gap <= 1e-3) {
            continue;
        }
        checked++;
        CanonicalForm moved = canonical_form(scramble(s, rng));
        for (int q = 0; q < 5; q++) {
            ASSERT_NEAR(moved.lambda[q], cf.lambda[q], 1e-6);
        }
        ASSERT_NEAR(moved.phi, cf.phi, 1e-6);
    }
    EXPECT_GT(checked, 400);
}

TEST(canonical_candidates, cross_root_identities) {
    std::mt19937_64 rng(404);
    for (int n = 0; n < 1000; n++) {
        ThreeQubitState s = haar_random(rng);
        auto c = canonical_candidates(s);
        ASSERT_EQ(c.size(), 2u);
        ASSERT_NEAR(c[0].lambda[0] * c[0].lambda[4], c[1].lambda[0] * c[1].lambda[4], 1e-9);
        ASSERT_LT(std::abs(c[0].m1().det() - std::conj(c[1].m1().det())), 1e-9);
        // Imaginary parts of det M1 are opposite, so the phases sit in opposite half planes.
        double s0 = c[0].lambda[1] * c[0].lambda[4] * std::sin(c[0].phi);
        double s1 = c[1].lambda[1] * c[1].lambda[4] * std::sin(c[1].phi);
        ASSERT_NEAR(s0, -s1, 1e-9);
        // Exactly one candidate lands in the open upper half.
        int upper = (c[0].phi > 0 && c[0].phi < std::numbers::pi) + (c[1].phi > 0 && c[1].phi < std::numbers::pi);
        ASSERT_EQ(upper, 1);
    }
}

TEST(canonical_form, real_roots_use_tie_break) {
    // Real amplitudes with a positive discriminant: both roots real, both phases in {0, pi}.
    std::mt19937_64 rng(505);
    std::normal_distribution<double> g;
    int seen = 0;
    for (int n = 0; n < 400; n++) {
        Amplitudes a;
        for (auto &x : a) {
            x = g(rng);
        }
        ThreeQubitState s = ThreeQubitState::from_amplitudes(a, true);
        CoefficientPencil p = pencil(s);
        if (PencilQuadratic::of(p.t0, p.t1).discriminant().real() <= 1e-6) {
            continue;
        }
        seen++;
        CanonicalForm cf = canonical_form(s);
        ASSERT_EQ(cf.root_choice, RootChoice::TieBreak);
        ASSERT_TRUE(cf.phi == 0.0 || cf.phi == std::numbers::pi) << cf.phi;
        ASSERT_GT(fidelity(reconstruct(cf), s), 1 - 1e-10);
        auto key = [](const CanonicalForm &f) {
            return std::array{f.lambda[0], f.lambda[4], f.lambda[1], f.lambda[2], f.lambda[3]};
        };
        for (const auto &c : canonical_candidates(s)) {
            auto mine = key(cf);
            auto other = key(c);
            for (int q = 0; q < 5; q++) {
                if (std::abs(mine[q] - other[q]) > 1e-9) {
                    ASSERT_GT(mine[q], other[q]);
                    break;
                }
            }
        }
    }
    EXPECT_GT(seen, 50);
}

TEST(canonical_form, conjugate_roots_of_real_states_are_unique) {
    std::mt19937_64 rng(506);
    std::normal_distribution<double> g;
    for (int n = 0; n < 400; n++) {
        Amplitudes a;
        for (auto &x : a) {
            x = g(rng);
        }
        ThreeQubitState s = ThreeQubitState::from_amplitudes(a, true);
        CoefficientPencil p = pencil(s);
        if (PencilQuadratic::of(p.t0, p.t1).discriminant().real() >= -1e-6) {
            continue;
        }
        CanonicalForm cf = canonical_form(s);
        ASSERT_EQ(cf.root_choice, RootChoice::Unique);
        ASSERT_GT(cf.phi, 0.0);
        ASSERT_LT(cf.phi, std::numbers::pi);
    }
}

TEST(canonical_form, output_is_deterministic) {
    ThreeQubitState s = haar_random(std::uint64_t{77});
    EXPECT_EQ(canonical_form(s), canonical_form(s));
}

TEST(erasing_states, ghz_party_a) {
    auto dirs = erasing_states(ThreeQubitState::ghz(), Party::A);
    ASSERT_EQ(dirs.size(), 2u);
    const double r = std::numbers::sqrt2 / 2;
    EXPECT_NEAR(std::abs(dirs[0].ket[0]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(dirs[1].ket[1]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(dirs[0].residual[0]), r, 1e-15);
    EXPECT_NEAR(std::abs(dirs[1].residual[3]), r, 1e-15);
    for (const auto &d : dirs) {
        EXPECT_NEAR(d.probability, 0.5, 1e-15);
        EXPECT_FALSE(d.degenerate);
    }
}

TEST(erasing_states, w_party_a) {
    auto dirs = erasing_states(ThreeQubitState::w(), Party::A);
    ASSERT_EQ(dirs.size(), 1u);
    EXPECT_NEAR(std::abs(dirs[0].ket[1]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(dirs[0].residual[0]), std::numbers::inv_sqrt3, 1e-15);
    EXPECT_NEAR(dirs[0].probability, 1.0 / 3, 1e-15);
}

TEST(erasing_states, w_is_symmetric) {
    for (Party p : {Party::B, Party::C}) {
        auto dirs = erasing_states(ThreeQubitState::w(), p);
        ASSERT_EQ(dirs.size(), 1u);
        EXPECT_NEAR(dirs[0].probability, 1.0 / 3, 1e-14) << party_name(p);
    }
}

TEST(erasing_states, product_is_degenerate) {
    auto dirs = erasing_states(ThreeQubitState::basis(0, 0, 0), Party::B);
    ASSERT_EQ(dirs.size(), 2u);
    for (const auto &d : dirs) {
        EXPECT_TRUE(d.degenerate);
    }
}

TEST(erasing_states, residual_is_contraction) {
    // residual = <e|psi> computed here by brute force over the singled-out index.
    std::mt19937_64 rng(606);
    for (int n = 0; n < 200; n++) {
        ThreeQubitState s = haar_random(rng);
        for (Party p : {Party::A, Party::B, Party::C}) {
            int bit = 2 - static_cast<int>(p);
            for (const auto &d : erasing_states(s, p)) {
                ASSERT_EQ(d.party, p);
                std::array<Complex, 4> r{};
                for (int idx = 0; idx < 8; idx++) {
                    int x = (idx >> bit) & 1;
                    int rest = 0, pos = 0;
                    for (int b = 2; b >= 0; b--) {
                        if (b == bit) {
                            continue;
                        }
                        rest |= ((idx >> b) & 1) << (1 - pos);
                        pos++;
                    }
                    r[rest] += std::conj(d.ket[x]) * s[idx];
                }
                for (int q = 0; q < 4; q++) {
                    ASSERT_LT(std::abs(r[q] - d.residual[q]), 1e-12);
                }
                double prob = 0.0;
                for (auto z : r) {
                    prob += std::norm(z);
                }
                ASSERT_NEAR(prob, d.probability, 1e-12);
            }
        }
    }
}

TEST(erasing_states, residuals_factor) {
    std::mt19937_64 rng(707);
    for (int n = 0; n < 1000; n++) {
        ThreeQubitState s = haar_random(rng);
        for (Party p : {Party::A, Party::B, Party::C}) {
            auto dirs = erasing_states(s, p);
            ASSERT_EQ(dirs.size(), 2u);
            for (const auto &d : dirs) {
                ASSERT_LT(std::abs(d.residual_matrix().det()), 1e-10);
                ASSERT_NEAR(norm(d.ket), 1.0, 1e-12);
            }
        }
    }
}

TEST(erasing_states, count_tracks_hyperdeterminant) {
    // Type 4a family: I5 = 0 but genuinely tripartite, a single direction.
    std::mt19937_64 rng(808);
    for (int n = 0; n < 100; n++) {
        ThreeQubitState s = scramble(canonical_state(0.5, 0.4, 0.3, 0.6, 0.0, 0.0), rng);
        EXPECT_EQ(erasing_states(s, Party::A).size(), 1u);
    }
}
