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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "triq/error.hpp"

namespace triq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// phi values this close to 0, pi or 2 pi are snapped onto the boundary.
constexpr double kPhaseSnap = 1e-9;

double wrap_2pi(double angle) {
    double r = std::fmod(angle, kTwoPi);
    return r < 0.0 ? r + kTwoPi : r;
}

double wrap_pi(double angle) {
    double r = wrap_2pi(angle);
    return r > std::numbers::pi ? r - kTwoPi : r;
}

Mat2 phase_diag(double theta) {
    return Mat2::diag(1.0, std::polar(1.0, theta));
}

// Splits U = e^{i delta/2} S with det S = 1; returns delta/2.
double split_special(Mat2 &u) {
    double half = 0.5 * std::arg(u.det());
    u = std::polar(1.0, -half) * u;
    return half;
}

struct GaugePhases {
    double x = 0.0;   // on |1>_A
    double db = 0.0;  // on |1>_B
    double dc = 0.0;  // on |1>_C
    bool full = false;
};

// Chooses phases making m01, m10, m11 real nonnegative when all four entries
// of M1 are nonzero; with a vanishing entry, a triple containing every nonzero
// entry is made real nonnegative instead (phi is then 0 by convention).
GaugePhases gauge_phases(const Mat2 &m, double tol) {
    auto arg_or_zero = [&](Complex z) { return std::abs(z) > tol ? std::arg(z) : 0.0; };
    const double p00 = arg_or_zero(m.m00);
    const double p01 = arg_or_zero(m.m01);
    const double p10 = arg_or_zero(m.m10);
    const double p11 = arg_or_zero(m.m11);
    const bool z00 = std::abs(m.m00) <= tol;
    const bool z01 = std::abs(m.m01) <= tol;
    const bool z10 = std::abs(m.m10) <= tol;
    const bool z11 = std::abs(m.m11) <= tol;

    GaugePhases g;
    if (z00 || !(z01 || z10 || z11)) {
        g.x = p11 - p10 - p01;
        g.db = -p10 - g.x;
        g.dc = -p01 - g.x;
        g.full = !(z00 || z01 || z10 || z11);
    } else if (z11) {
        g.x = -p00;
        g.dc = -p01 - g.x;
        g.db = -p10 - g.x;
    } else if (z10) {
        g.x = -p00;
        g.dc = -p01 - g.x;
        g.db = -p11 - g.x - g.dc;
    } else {
        g.x = -p00;
        g.db = -p10 - g.x;
        g.dc = -p11 - g.x - g.db;
    }
    return g;
}

double fubini_study_sine(const ProjectiveRoot &a, const ProjectiveRoot &b) {
    double c2 = std::norm(inner(a.vec(), b.vec()));
    return std::sqrt(std::max(0.0, 1.0 - c2));
}

CanonicalForm candidate_for_root(const CoefficientPencil &p, const ProjectiveRoot &root, double tol) {
    const Mat2 rot_a = complete_unitary(root.vec());
    const Mat2 t0p = root.u0 * p.t0 + root.u1 * p.t1;
    const Mat2 t1p = (-std::conj(root.u1)) * p.t0 + std::conj(root.u0) * p.t1;
    const double scale = p.t0.frobenius_norm() + p.t1.frobenius_norm();

    CanonicalForm cf;
    cf.root = root;

    Mat2 ub;
    Mat2 uc;
    GaugePhases g;
    if (t0p.frobenius_norm() <= tol * scale) {
        // Party A unentangled: the whole state sits in the |1>_A block.
        Svd2 s = svd2(t1p);
        ub = s.u1;
        uc = s.u2.transpose();
        cf.lambda = {0.0, s.s0(), 0.0, 0.0, s.s1()};
        cf.phi = 0.0;
    } else {
        Svd2 s = svd2(t0p);
        ub = s.u1;
        uc = s.u2.transpose();
        Mat2 m1 = s.u1 * t1p * s.u2;
        g = gauge_phases(m1, tol * scale);
        cf.lambda = {s.s0(), std::abs(m1.m00), std::abs(m1.m01), std::abs(m1.m10), std::abs(m1.m11)};
        cf.phi = g.full ? wrap_2pi(std::arg(m1.m00) + g.x) : 0.0;
    }

    Mat2 ua = phase_diag(g.x) * rot_a;
    ub = phase_diag(g.db) * ub;
    uc = phase_diag(g.dc) * uc;
    double omega = split_special(ua) + split_special(ub) + split_special(uc);
    cf.ua = ua;
    cf.ub = ub;
    cf.uc = uc;
    cf.omega = wrap_pi(omega);
    for (int i = 0; i < 5; i++) {
        cf.mu[i] = cf.lambda[i] * cf.lambda[i];
    }
    return cf;
}

double snap_phi(double phi) {
    if (phi < kPhaseSnap || phi > kTwoPi - kPhaseSnap) {
        return 0.0;
    }
    if (std::abs(phi - std::numbers::pi) < kPhaseSnap) {
        return std::numbers::pi;
    }
    return phi;
}

auto tie_break_key(const CanonicalForm &cf) {
    const auto &l = cf.lambda;
    return std::array<double, 5>{l[0], l[4], l[1], l[2], l[3]};
}

// Every direction is a root. Use the one maximizing |u0 T0 + u1 T1| (top
// eigenvector of the Gram matrix) and its orthogonal partner, so the choice
// follows the state under local unitaries.
std::array<ProjectiveRoot, 2> continuum_roots(const CoefficientPencil &p) {
    auto dot = [](const Mat2 &x, const Mat2 &y) {
        return std::conj(x.m00) * y.m00 + std::conj(x.m01) * y.m01 + std::conj(x.m10) * y.m10 +
               std::conj(x.m11) * y.m11;
    };
    Mat2 g{dot(p.t0, p.t0), dot(p.t0, p.t1), dot(p.t1, p.t0), dot(p.t1, p.t1)};
    Svd2 s = svd2(g);
    Complex v0 = s.u2.m00;
    Complex v1 = s.u2.m10;
    return {ProjectiveRoot::canonical(v0, v1, RootMultiplicity::IdenticallyZero),
            ProjectiveRoot::canonical(-std::conj(v1), std::conj(v0), RootMultiplicity::IdenticallyZero)};
}

}  // namespace

const char *root_count_name(RootCount c) {
    switch (c) {
        case RootCount::One:
            return "1";
        case RootCount::Two:
            return "2";
        case RootCount::Continuum:
            return "continuum";
    }
    return "?";
}

const char *root_choice_name(RootChoice c) {
    return c == RootChoice::Unique ? "unique" : "tie-break";
}

Amplitudes CanonicalForm::canonical_amplitudes() const {
    Amplitudes a{};
    a[basis_index(0, 0, 0)] = lambda[0];
    a[basis_index(1, 0, 0)] = std::polar(lambda[1], phi);
    a[basis_index(1, 0, 1)] = lambda[2];
    a[basis_index(1, 1, 0)] = lambda[3];
    a[basis_index(1, 1, 1)] = lambda[4];
    return a;
}

Mat2 CanonicalForm::m1() const {
    return {std::polar(lambda[1], phi), lambda[2], lambda[3], lambda[4]};
}

void validate(const CanonicalForm &cf, double tol) {
    double total = 0.0;
    for (int i = 0; i < 5; i++) {
        if (!(cf.lambda[i] >= 0.0) || !std::isfinite(cf.lambda[i])) {
            throw Error(ErrorKind::InvalidForm, "lambda_" + std::to_string(i) + " must be finite and nonnegative");
        }
        if (std::abs(cf.mu[i] - cf.lambda[i] * cf.lambda[i]) > tol) {
            throw Error(ErrorKind::InvalidForm, "mu_" + std::to_string(i) + " != lambda_" + std::to_string(i) + "^2");
        }
        total += cf.mu[i];
    }
    if (std::abs(total - 1.0) > tol) {
        throw Error(ErrorKind::InvalidForm, "sum of mu is " + std::to_string(total));
    }
    if (!(cf.phi >= 0.0 && cf.phi <= std::numbers::pi)) {
        throw Error(ErrorKind::InvalidForm, "phi outside [0, pi]");
    }
    if (!cf.ua.is_unitary(tol) || !cf.ub.is_unitary(tol) || !cf.uc.is_unitary(tol)) {
        throw Error(ErrorKind::InvalidForm, "local factors must be unitary");
    }
    if (!std::isfinite(cf.omega)) {
        throw Error(ErrorKind::InvalidForm, "omega must be finite");
    }
}

std::vector<CanonicalForm> canonical_candidates(const ThreeQubitState &state, double tol) {
    CoefficientPencil p = pencil(state);
    PencilRootPair pair = pencil_root_pair(p.t0, p.t1, tol);

    RootCount count = RootCount::Two;
    if (pair.multiplicity == RootMultiplicity::Double) {
        count = RootCount::One;
    } else if (pair.multiplicity == RootMultiplicity::IdenticallyZero) {
        count = RootCount::Continuum;
    }
    double gap = count == RootCount::Two ? fubini_study_sine(pair.roots[0], pair.roots[1]) : 0.0;
    if (count == RootCount::Continuum) {
        pair.roots = continuum_roots(p);
    }

    std::vector<CanonicalForm> out;
    for (const auto &root : pair.roots) {
        CanonicalForm cf = candidate_for_root(p, root, tol);
        cf.root_count = count;
        cf.root_gap = gap;
        out.push_back(cf);
    }
    return out;
}

CanonicalForm canonical_form(const ThreeQubitState &state, double tol) {
    std::vector<CanonicalForm> candidates = canonical_candidates(state, tol);
    for (auto &cf : candidates) {
        cf.phi = snap_phi(cf.phi);
    }

    std::vector<const CanonicalForm *> admissible;
    std::vector<const CanonicalForm *> interior;
    for (const auto &cf : candidates) {
        if (cf.phi <= std::numbers::pi) {
            admissible.push_back(&cf);
            if (cf.phi > 0.0 && cf.phi < std::numbers::pi) {
                interior.push_back(&cf);
            }
        }
    }
    // Both roots of a simple pair have phi summing to 2 pi, so at most one is
    // interior. Without an admissible candidate (not reachable in exact
    // arithmetic) fall back to ordering all of them.
    const std::vector<const CanonicalForm *> *pool = &admissible;
    if (interior.size() == 1) {
        pool = &interior;
    } else if (admissible.empty()) {
        pool = nullptr;
    }
    std::vector<const CanonicalForm *> all;
    if (pool == nullptr) {
        for (const auto &cf : candidates) {
            all.push_back(&cf);
        }
        pool = &all;
    }

    const CanonicalForm *best = pool->front();
    for (const CanonicalForm *cf : *pool) {
        if (tie_break_key(*cf) > tie_break_key(*best)) {
            best = cf;
        }
    }
    CanonicalForm chosen = *best;
    chosen.root_choice = pool->size() == 1 ? RootChoice::Unique : RootChoice::TieBreak;
    return chosen;
}

ThreeQubitState reconstruct(const CanonicalForm &cf) {
    validate(cf);
    Amplitudes a = apply_product(cf.canonical_amplitudes(), cf.ua.adjoint(), cf.ub.adjoint(), cf.uc.adjoint());
    Complex g = std::polar(1.0, -cf.omega);
    for (auto &z : a) {
        z *= g;
    }
    return ThreeQubitState::from_unit(a);
}

std::vector<ErasingDirection> erasing_states(const ThreeQubitState &state, Party party, double tol) {
    ThreeQubitState moved = permute_parties(state, PartyPermutation::bring_first(party));
    CoefficientPencil p = pencil(moved);
    PencilRootPair pair = pencil_root_pair(p.t0, p.t1, tol);
    std::vector<ProjectiveRoot> roots = pencil_roots(p.t0, p.t1, tol);

    std::vector<ErasingDirection> out;
    for (const auto &r : roots) {
        Mat2 res = r.u0 * p.t0 + r.u1 * p.t1;
        ErasingDirection d;
        d.party = party;
        d.ket = {std::conj(r.u0), std::conj(r.u1)};
        d.residual = {res.m00, res.m01, res.m10, res.m11};
        d.probability = res.frobenius_norm() * res.frobenius_norm();
        d.degenerate = pair.multiplicity == RootMultiplicity::IdenticallyZero || d.probability <= tol;
        out.push_back(d);
    }
    return out;
}

}  // namespace triq
