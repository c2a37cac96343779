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


#include "triq/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace triq {

namespace {

struct LabelName {
    TypeLabel label;
    const char *name;
};

constexpr std::array<LabelName, 12> kLabelNames{{
    {TypeLabel::Type1, "1"},
    {TypeLabel::Type2aA, "2a-A"},
    {TypeLabel::Type2aB, "2a-B"},
    {TypeLabel::Type2aC, "2a-C"},
    {TypeLabel::Type2b, "2b"},
    {TypeLabel::Type3a, "3a"},
    {TypeLabel::Type3b, "3b"},
    {TypeLabel::Type4a, "4a"},
    {TypeLabel::Type4b, "4b"},
    {TypeLabel::Type4c, "4c"},
    {TypeLabel::Type5, "5"},
    {TypeLabel::Generic, "generic"},
}};

// Tracks every comparison against the tolerance so near-threshold states get flagged.
class Gate {
   public:
    explicit Gate(double tol) : tol_(tol) {
    }
    bool zero(double q) {
        note(q);
        return std::abs(q) < tol_;
    }
    bool nonzero(double q) {
        return !zero(q);
    }
    bool boundary() const {
        return boundary_;
    }

   private:
    void note(double q) {
        double a = std::abs(q);
        if (a > 0.1 * tol_ && a < 10.0 * tol_) {
            boundary_ = true;
        }
    }
    double tol_;
    bool boundary_ = false;
};

double safe_sqrt(double x) {
    return std::sqrt(std::max(0.0, x));
}

int precedence(TypeLabel t) {
    switch (t) {
        case TypeLabel::Type1:
            return 0;
        case TypeLabel::Type2aA:
        case TypeLabel::Type2aB:
        case TypeLabel::Type2aC:
            return 1;
        case TypeLabel::Type2b:
            return 2;
        case TypeLabel::Type3a:
            return 3;
        case TypeLabel::Type3b:
            return 4;
        case TypeLabel::Type4a:
            return 5;
        case TypeLabel::Type4b:
            return 6;
        case TypeLabel::Type4c:
            return 7;
        case TypeLabel::Type5:
            return 8;
        case TypeLabel::Generic:
            return 9;
    }
    return 9;
}

}  // namespace

const char *type_label_name(TypeLabel t) {
    for (const auto &ln : kLabelNames) {
        if (ln.label == t) {
            return ln.name;
        }
    }
    return "?";
}

std::optional<TypeLabel> parse_type_label(const std::string &name) {
    for (const auto &ln : kLabelNames) {
        if (name == ln.name) {
            return ln.label;
        }
    }
    return std::nullopt;
}

bool IdentityReport::all_satisfied() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck &c) { return c.satisfied; });
}

double IdentityReport::max_residual() const {
    double r = 0.0;
    for (const auto &c : checks) {
        r = std::max(r, c.residual);
    }
    return r;
}

IdentityReport verify_type_identities(const CanonicalForm &cf, TypeLabel label, double tol) {
    const auto j = invariants_j(cf).j;
    const auto &mu = cf.mu;
    const double root123 = safe_sqrt(j[0] * j[1] * j[2]);
    const double half5 = 0.5 * j[4];

    IdentityReport rep;
    rep.label = label;
    auto add = [&](std::string name, double residual) {
        residual = std::abs(residual);
        rep.checks.push_back({std::move(name), residual, residual <= 10.0 * tol});
    };
    auto vanish = [&](int which) { add("J" + std::to_string(which + 1) + "=0", j[which]); };

    switch (label) {
        case TypeLabel::Type1:
            for (int q = 0; q < 5; q++) {
                vanish(q);
            }
            break;
        case TypeLabel::Type2aA:
        case TypeLabel::Type2aB:
        case TypeLabel::Type2aC: {
            int keep = label == TypeLabel::Type2aA ? 0 : label == TypeLabel::Type2aB ? 1 : 2;
            for (int q = 0; q < 5; q++) {
                if (q != keep) {
                    vanish(q);
                }
            }
            break;
        }
        case TypeLabel::Type2b:
            vanish(0);
            vanish(1);
            vanish(2);
            vanish(4);
            break;
        case TypeLabel::Type3a:
            vanish(3);
            add("J1J2+J1J3+J2J3=sqrt(J1J2J3)", j[0] * j[1] + j[0] * j[2] + j[1] * j[2] - root123);
            add("sqrt(J1J2J3)=J5/2", root123 - half5);
            break;
        case TypeLabel::Type3b: {
            // The two smallest of mu1, mu2, mu3 are the vanishing pair.
            std::array<int, 3> idx{1, 2, 3};
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return mu[a] < mu[b]; });
            std::array<int, 2> pair{std::min(idx[0], idx[1]), std::max(idx[0], idx[1])};
            vanish(pair[0] - 1);
            vanish(pair[1] - 1);
            vanish(4);
            break;
        }
        case TypeLabel::Type4a:
            vanish(3);
            add("sqrt(J1J2J3)=J5/2", root123 - half5);
            break;
        case TypeLabel::Type4b:
            vanish(mu[2] <= mu[3] ? 1 : 2);
            vanish(4);
            break;
        case TypeLabel::Type4c:
            add("J1(J2+J3+J4)+J2J3=sqrt(J1J2J3)", j[0] * (j[1] + j[2] + j[3]) + j[1] * j[2] - root123);
            add("sqrt(J1J2J3)=J5/2", root123 - half5);
            break;
        case TypeLabel::Type5:
            add("sqrt(J1J2J3)=|J5|/2", root123 - std::abs(half5));
            break;
        case TypeLabel::Generic:
            break;
    }
    return rep;
}

Classification classify(const CanonicalForm &cf, double tol) {
    const auto j = invariants_j(cf).j;
    const auto purities = invariants_from_canonical(cf);
    const auto &mu = cf.mu;
    Gate g(tol);

    Classification out;
    out.tolerance = tol;
    for (int q = 0; q < 5; q++) {
        bool z = g.zero(j[q]);
        out.j_signature.push_back("J" + std::to_string(q + 1) + (z ? "=0" : (j[q] > 0 ? ">0" : "<0")));
    }

    auto decide = [&]() -> TypeLabel {
        for (int q = 0; q < 5; q++) {
            if (g.zero(1.0 - mu[q])) {
                out.matched_mu_pattern = "mu" + std::to_string(q) + "=1";
                return TypeLabel::Type1;
            }
        }
        bool all_j_zero = g.zero(j[0]) && g.zero(j[1]) && g.zero(j[2]) && g.zero(j[3]) && g.zero(j[4]);
        if (all_j_zero && g.zero(1.0 - purities[0]) && g.zero(1.0 - purities[1]) && g.zero(1.0 - purities[2])) {
            out.matched_mu_pattern = "all reduced states pure";
            return TypeLabel::Type1;
        }

        const bool rest_zero = g.zero(j[3]) && g.zero(j[4]);
        const int bipartite = int(g.nonzero(j[0])) + int(g.nonzero(j[1])) + int(g.nonzero(j[2]));
        if (bipartite == 1 && rest_zero) {
            out.matched_mu_pattern = "single bipartite J";
            if (g.nonzero(j[0])) {
                return TypeLabel::Type2aA;
            }
            return g.nonzero(j[1]) ? TypeLabel::Type2aB : TypeLabel::Type2aC;
        }
        if (bipartite == 0 && g.nonzero(j[3]) && g.zero(j[4])) {
            out.matched_mu_pattern = "only J4";
            return TypeLabel::Type2b;
        }

        if (g.zero(mu[1]) && g.zero(mu[4])) {
            int live = int(g.nonzero(mu[0])) + int(g.nonzero(mu[2])) + int(g.nonzero(mu[3]));
            if (live >= 2) {
                out.matched_mu_pattern = "mu1=mu4=0";
                return TypeLabel::Type3a;
            }
        }

        {
            std::array<bool, 3> z{g.zero(mu[1]), g.zero(mu[2]), g.zero(mu[3])};
            int zeros = int(z[0]) + int(z[1]) + int(z[2]);
            if (zeros == 2 && g.nonzero(mu[0]) && g.nonzero(mu[4])) {
                std::string p = "mu";
                for (int q = 0; q < 3; q++) {
                    if (z[q]) {
                        p += std::to_string(q + 1);
                    }
                }
                out.matched_mu_pattern = p.substr(0, 3) + "=mu" + p.substr(3) + "=0";
                return TypeLabel::Type3b;
            }
        }

        if (g.zero(mu[4])) {
            out.matched_mu_pattern = "mu4=0";
            return TypeLabel::Type4a;
        }
        if (g.zero(mu[2]) || g.zero(mu[3])) {
            out.matched_mu_pattern = g.zero(mu[2]) ? "mu2=0" : "mu3=0";
            return TypeLabel::Type4b;
        }
        if (g.zero(mu[1])) {
            out.matched_mu_pattern = "mu1=0";
            return TypeLabel::Type4c;
        }
        if (g.zero(cf.phi) || g.zero(std::numbers::pi - cf.phi)) {
            out.matched_mu_pattern = g.zero(cf.phi) ? "phi=0" : "phi=pi";
            return TypeLabel::Type5;
        }
        out.matched_mu_pattern = "none";
        return TypeLabel::Generic;
    };

    out.label = decide();
    out.identities = verify_type_identities(cf, out.label, tol);
    out.boundary = g.boundary();
    return out;
}

Classification classify(const ThreeQubitState &state, double tol) {
    // With real roots both candidate forms are admissible and may land on
    // different patterns; report the most specific one.
    Classification best = classify(canonical_form(state), tol);
    for (CanonicalForm cf : canonical_candidates(state)) {
        if (std::abs(cf.phi - 2 * std::numbers::pi) <= 1e-9) {
            cf.phi = 0.0;
        }
        if (cf.phi > std::numbers::pi + 1e-9) {
            continue;
        }
        cf.phi = std::min(cf.phi, std::numbers::pi);
        Classification c = classify(cf, tol);
        if (precedence(c.label) < precedence(best.label)) {
            best = c;
        }
    }
    return best;
}

}  // namespace triq
