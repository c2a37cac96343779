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

#include <optional>
#include <string>
#include <vector>

#include "triq/canonical.hpp"
#include "triq/invariants.hpp"

namespace triq {

inline constexpr double kDefaultClassifyTol = 1e-8;

enum class TypeLabel {
    Type1,
    Type2aA,
    Type2aB,
    Type2aC,
    Type2b,
    Type3a,
    Type3b,
    Type4a,
    Type4b,
    Type4c,
    Type5,
    Generic,
};

/// "1", "2a-A", ..., "generic".
const char *type_label_name(TypeLabel t);
std::optional<TypeLabel> parse_type_label(const std::string &name);

struct IdentityCheck {
    std::string name;
    double residual = 0.0;
    bool satisfied = false;

    bool operator==(const IdentityCheck &) const = default;
};

struct IdentityReport {
    TypeLabel label = TypeLabel::Generic;
    std::vector<IdentityCheck> checks;

    bool all_satisfied() const;
    double max_residual() const;

    bool operator==(const IdentityReport &) const = default;
};

struct Classification {
    TypeLabel label = TypeLabel::Generic;
    std::string matched_mu_pattern;
    /// Entries like "J1=0", "J4>0".
    std::vector<std::string> j_signature;
    IdentityReport identities;
    double tolerance = kDefaultClassifyTol;
    /// Some quantity compared against the tolerance lies within a factor 10 of it.
    bool boundary = false;

    bool operator==(const Classification &) const = default;
};

/// Most specific matching type: 1, 2a, 2b, 3a, 3b, 4a, 4b, 4c, 5, generic.
Classification classify(const CanonicalForm &cf, double tol = kDefaultClassifyTol);
Classification classify(const ThreeQubitState &state, double tol = kDefaultClassifyTol);

/// Residuals of the J-identities attached to `label`, evaluated on `cf`.
IdentityReport verify_type_identities(const CanonicalForm &cf, TypeLabel label, double tol = kDefaultClassifyTol);

}  // namespace triq
