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


#include "triq/io.hpp"

#include <cmath>
#include <istream>
#include <iterator>

namespace triq::io {

namespace {

template <class E>
E enum_from(const json &j, const char *const *names, int count) {
    std::string s = j.get<std::string>();
    for (int q = 0; q < count; q++) {
        if (s == names[q]) {
            return static_cast<E>(q);
        }
    }
    throw ParseError("unknown enum value '" + s + "'");
}

constexpr const char *kParties[] = {"A", "B", "C"};
constexpr const char *kMultiplicities[] = {"simple", "double", "identically-zero"};
constexpr const char *kRootCounts[] = {"1", "2", "continuum"};
constexpr const char *kRootChoices[] = {"unique", "tie-break"};

template <std::size_t N>
json doubles(const std::array<double, N> &a) {
    json out = json::array();
    for (double x : a) {
        out.push_back(x);
    }
    return out;
}

template <std::size_t N>
std::array<double, N> doubles_from(const json &j) {
    if (!j.is_array() || j.size() != N) {
        throw ParseError("expected an array of " + std::to_string(N) + " numbers");
    }
    std::array<double, N> a;
    for (std::size_t q = 0; q < N; q++) {
        a[q] = j.at(q).get<double>();
    }
    return a;
}

json product_ket(const ProductKet &k) {
    return json::array({to_json(k[0]), to_json(k[1]), to_json(k[2])});
}

ProductKet product_ket_from(const json &j) {
    if (!j.is_array() || j.size() != 3) {
        throw ParseError("product ket must list three single-qubit vectors");
    }
    return {vec2_from_json(j[0]), vec2_from_json(j[1]), vec2_from_json(j[2])};
}

// Runs a conversion, reporting any nlohmann type/shape error as ParseError.
template <class F>
auto guarded(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw ParseError(e.what());
    }
}

}  // namespace

json to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json to_json(const Vec2 &v) {
    return json::array({to_json(v[0]), to_json(v[1])});
}

json to_json(const Mat2 &m) {
    return json::array({json::array({to_json(m.m00), to_json(m.m01)}), json::array({to_json(m.m10), to_json(m.m11)})});
}

json to_json(const ProjectiveRoot &r) {
    return {{"u", to_json(Vec2{r.u0, r.u1})}, {"multiplicity", multiplicity_name(r.multiplicity)}};
}

json to_json(const ThreeQubitState &s, const std::optional<std::string> &label) {
    json amps = json::array();
    for (const auto &z : s.amplitudes()) {
        amps.push_back(to_json(z));
    }
    json out = {{"amplitudes", amps}};
    if (label) {
        out["label"] = *label;
    }
    return out;
}

json to_json(const CanonicalForm &cf) {
    return {
        {"lambda", doubles(cf.lambda)},
        {"mu", doubles(cf.mu)},
        {"phi", cf.phi},
        {"omega", cf.omega},
        {"uA", to_json(cf.ua)},
        {"uB", to_json(cf.ub)},
        {"uC", to_json(cf.uc)},
        {"root", to_json(cf.root)},
        {"root_count", root_count_name(cf.root_count)},
        {"root_choice", root_choice_name(cf.root_choice)},
        {"root_gap", cf.root_gap},
    };
}

json to_json(const InvariantSet &inv) {
    return {{"I", doubles(inv.i)}, {"J", doubles(inv.j)}, {"delta", inv.delta}, {"hdet", to_json(inv.hdet)}};
}

json to_json(const IdentityReport &rep) {
    json checks = json::array();
    for (const auto &c : rep.checks) {
        checks.push_back({{"name", c.name}, {"residual", c.residual}, {"satisfied", c.satisfied}});
    }
    return {{"type", type_label_name(rep.label)}, {"checks", checks}};
}

json to_json(const Classification &c) {
    return {
        {"type", type_label_name(c.label)},
        {"matched_mu_pattern", c.matched_mu_pattern},
        {"j_signature", c.j_signature},
        {"identities", to_json(c.identities)},
        {"tolerance", c.tolerance},
        {"boundary", c.boundary},
    };
}

json to_json(const ErasingDirection &d) {
    json residual = json::array();
    for (const auto &z : d.residual) {
        residual.push_back(to_json(z));
    }
    return {
        {"party", party_name(d.party)},
        {"ket", to_json(d.ket)},
        {"residual", residual},
        {"probability", d.probability},
        {"degenerate", d.degenerate},
    };
}

json to_json(const TwoProductDecomposition &d) {
    return {
        {"alpha", d.alpha}, {"beta", d.beta},         {"ket1", product_ket(d.ket1)},
        {"ket2", product_ket(d.ket2)}, {"trivial", d.trivial}, {"type", type_label_name(d.type)},
    };
}

json to_json(const ProductBiseparableForm &f) {
    return {
        {"theta", f.theta},
        {"omega", f.omega_angle},
        {"a0", to_json(f.a0)},
        {"a1", to_json(f.a1)},
        {"b0", to_json(f.b0)},
        {"c0", to_json(f.c0)},
        {"b_schmidt", json::array({to_json(f.b_schmidt[0]), to_json(f.b_schmidt[1])})},
        {"c_schmidt", json::array({to_json(f.c_schmidt[0]), to_json(f.c_schmidt[1])})},
    };
}

json to_json(const Set2Form &f) {
    json coeffs = json::array();
    for (const auto &z : f.coefficients) {
        coeffs.push_back(to_json(z));
    }
    return {
        {"support", {"000", "001", "100", "110", "111"}},
        {"coefficients", coeffs},
        {"c_rotation", to_json(f.c_rotation)},
        {"rotated", f.rotated},
    };
}

Complex complex_from_json(const json &j) {
    return guarded([&] {
        if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
            throw ParseError("complex number must be [re, im]");
        }
        return Complex{j[0].get<double>(), j[1].get<double>()};
    });
}

Vec2 vec2_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("vector must have two complex entries");
    }
    return {complex_from_json(j[0]), complex_from_json(j[1])};
}

Mat2 mat2_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("matrix must have two rows");
    }
    Vec2 r0 = vec2_from_json(j[0]);
    Vec2 r1 = vec2_from_json(j[1]);
    return {r0[0], r0[1], r1[0], r1[1]};
}

ProjectiveRoot root_from_json(const json &j) {
    return guarded([&] {
        Vec2 u = vec2_from_json(j.at("u"));
        return ProjectiveRoot{u[0], u[1], enum_from<RootMultiplicity>(j.at("multiplicity"), kMultiplicities, 3)};
    });
}

CanonicalForm canonical_from_json(const json &j) {
    return guarded([&] {
        CanonicalForm cf;
        cf.lambda = doubles_from<5>(j.at("lambda"));
        cf.mu = doubles_from<5>(j.at("mu"));
        cf.phi = j.at("phi").get<double>();
        cf.omega = j.at("omega").get<double>();
        cf.ua = mat2_from_json(j.at("uA"));
        cf.ub = mat2_from_json(j.at("uB"));
        cf.uc = mat2_from_json(j.at("uC"));
        cf.root = root_from_json(j.at("root"));
        cf.root_count = enum_from<RootCount>(j.at("root_count"), kRootCounts, 3);
        cf.root_choice = enum_from<RootChoice>(j.at("root_choice"), kRootChoices, 2);
        cf.root_gap = j.at("root_gap").get<double>();
        return cf;
    });
}

InvariantSet invariants_from_json(const json &j) {
    return guarded([&] {
        InvariantSet inv;
        inv.i = doubles_from<5>(j.at("I"));
        inv.j = doubles_from<5>(j.at("J"));
        inv.delta = j.at("delta").get<double>();
        inv.hdet = complex_from_json(j.at("hdet"));
        return inv;
    });
}

IdentityReport identities_from_json(const json &j) {
    return guarded([&] {
        IdentityReport rep;
        auto label = parse_type_label(j.at("type").get<std::string>());
        if (!label) {
            throw ParseError("unknown type label");
        }
        rep.label = *label;
        for (const auto &c : j.at("checks")) {
            rep.checks.push_back(
                {c.at("name").get<std::string>(), c.at("residual").get<double>(), c.at("satisfied").get<bool>()});
        }
        return rep;
    });
}

Classification classification_from_json(const json &j) {
    return guarded([&] {
        Classification c;
        auto label = parse_type_label(j.at("type").get<std::string>());
        if (!label) {
            throw ParseError("unknown type label");
        }
        c.label = *label;
        c.matched_mu_pattern = j.at("matched_mu_pattern").get<std::string>();
        c.j_signature = j.at("j_signature").get<std::vector<std::string>>();
        c.identities = identities_from_json(j.at("identities"));
        c.tolerance = j.at("tolerance").get<double>();
        c.boundary = j.at("boundary").get<bool>();
        return c;
    });
}

ErasingDirection erasing_from_json(const json &j) {
    return guarded([&] {
        ErasingDirection d;
        d.party = enum_from<Party>(j.at("party"), kParties, 3);
        d.ket = vec2_from_json(j.at("ket"));
        const json &r = j.at("residual");
        if (!r.is_array() || r.size() != 4) {
            throw ParseError("residual must have four entries");
        }
        for (int q = 0; q < 4; q++) {
            d.residual[q] = complex_from_json(r[q]);
        }
        d.probability = j.at("probability").get<double>();
        d.degenerate = j.at("degenerate").get<bool>();
        return d;
    });
}

TwoProductDecomposition two_product_from_json(const json &j) {
    return guarded([&] {
        TwoProductDecomposition d;
        d.alpha = j.at("alpha").get<double>();
        d.beta = j.at("beta").get<double>();
        d.ket1 = product_ket_from(j.at("ket1"));
        d.ket2 = product_ket_from(j.at("ket2"));
        d.trivial = j.at("trivial").get<bool>();
        auto label = parse_type_label(j.at("type").get<std::string>());
        if (!label) {
            throw ParseError("unknown type label");
        }
        d.type = *label;
        return d;
    });
}

ProductBiseparableForm biseparable_from_json(const json &j) {
    return guarded([&] {
        ProductBiseparableForm f;
        f.theta = j.at("theta").get<double>();
        f.omega_angle = j.at("omega").get<double>();
        f.a0 = vec2_from_json(j.at("a0"));
        f.a1 = vec2_from_json(j.at("a1"));
        f.b0 = vec2_from_json(j.at("b0"));
        f.c0 = vec2_from_json(j.at("c0"));
        for (int k = 0; k < 2; k++) {
            f.b_schmidt[k] = vec2_from_json(j.at("b_schmidt").at(k));
            f.c_schmidt[k] = vec2_from_json(j.at("c_schmidt").at(k));
        }
        return f;
    });
}

Set2Form set2_from_json(const json &j) {
    return guarded([&] {
        Set2Form f;
        const json &c = j.at("coefficients");
        if (!c.is_array() || c.size() != 5) {
            throw ParseError("set-2 form has five coefficients");
        }
        for (int q = 0; q < 5; q++) {
            f.coefficients[q] = complex_from_json(c[q]);
        }
        f.c_rotation = mat2_from_json(j.at("c_rotation"));
        f.rotated = j.at("rotated").get<bool>();
        return f;
    });
}

StateFile state_file_from_json(const json &j) {
    return guarded([&] {
        if (!j.is_object() || !j.contains("amplitudes")) {
            throw ParseError("state file must be an object with an \"amplitudes\" array");
        }
        const json &a = j.at("amplitudes");
        if (!a.is_array() || a.size() != 8) {
            throw ParseError("\"amplitudes\" must hold exactly 8 [re, im] pairs");
        }
        StateFile f;
        for (int q = 0; q < 8; q++) {
            f.amplitudes[q] = complex_from_json(a[q]);
            if (!std::isfinite(f.amplitudes[q].real()) || !std::isfinite(f.amplitudes[q].imag())) {
                throw ParseError("amplitudes must be finite");
            }
        }
        if (j.contains("label")) {
            if (!j.at("label").is_string()) {
                throw ParseError("\"label\" must be a string");
            }
            f.label = j.at("label").get<std::string>();
        }
        return f;
    });
}

StateFile read_state_file(std::istream &in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("input is not valid JSON");
    }
    return state_file_from_json(j);
}

ThreeQubitState to_state(const StateFile &f, bool normalize) {
    return ThreeQubitState::from_amplitudes(f.amplitudes, normalize);
}

std::string dump(const json &j) {
    return j.dump();
}

}  // namespace triq::io
