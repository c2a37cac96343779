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

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "triq/canonical.hpp"
#include "triq/classify.hpp"
#include "triq/decompositions.hpp"
#include "triq/invariants.hpp"
#include "triq/state.hpp"

namespace triq::io {

using nlohmann::json;

/// Malformed JSON or a document that does not have the expected shape.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Complex numbers are [re, im]; matrices are row-major [[m00, m01], [m10, m11]].
json to_json(Complex z);
json to_json(const Vec2 &v);
json to_json(const Mat2 &m);
json to_json(const ProjectiveRoot &r);
json to_json(const ThreeQubitState &s, const std::optional<std::string> &label = std::nullopt);
json to_json(const CanonicalForm &cf);
json to_json(const InvariantSet &inv);
json to_json(const IdentityReport &rep);
json to_json(const Classification &c);
json to_json(const ErasingDirection &d);
json to_json(const TwoProductDecomposition &d);
json to_json(const ProductBiseparableForm &f);
json to_json(const Set2Form &f);

Complex complex_from_json(const json &j);
Vec2 vec2_from_json(const json &j);
Mat2 mat2_from_json(const json &j);
ProjectiveRoot root_from_json(const json &j);
CanonicalForm canonical_from_json(const json &j);
InvariantSet invariants_from_json(const json &j);
IdentityReport identities_from_json(const json &j);
Classification classification_from_json(const json &j);
ErasingDirection erasing_from_json(const json &j);
TwoProductDecomposition two_product_from_json(const json &j);
ProductBiseparableForm biseparable_from_json(const json &j);
Set2Form set2_from_json(const json &j);

struct StateFile {
    Amplitudes amplitudes{};
    std::optional<std::string> label;
};

/// Shape check only: {"amplitudes": [[re, im] x 8], "label"?: string}. Throws ParseError.
StateFile state_file_from_json(const json &j);
StateFile read_state_file(std::istream &in);

/// Validates the amplitudes (throws triq::Error on DegenerateInput / NotNormalized).
ThreeQubitState to_state(const StateFile &f, bool normalize);

/// Compact single-line serialization with sorted keys.
std::string dump(const json &j);

}  // namespace triq::io
