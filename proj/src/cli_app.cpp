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


#include "triq/cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "triq/error.hpp"
#include "triq/io.hpp"

namespace triq::cli {

namespace {

using io::json;

struct Options {
    std::string file = "-";
    double tol = kDefaultTol;
    bool normalize = false;
    std::string party = "A";
    std::uint64_t seed = 0;
    int count = 1;
    bool json_output = true;
};

Party party_from(const std::string &s) {
    if (s == "B") {
        return Party::B;
    }
    if (s == "C") {
        return Party::C;
    }
    return Party::A;
}

struct Loaded {
    ThreeQubitState state;
    std::optional<std::string> label;
};

Loaded load(const Options &opt, std::istream &in) {
    io::StateFile f;
    if (opt.file == "-") {
        f = io::read_state_file(in);
    } else {
        std::ifstream file(opt.file);
        if (!file) {
            throw io::ParseError("cannot open '" + opt.file + "'");
        }
        f = io::read_state_file(file);
    }
    return {io::to_state(f, opt.normalize), f.label};
}

void attach_label(json &j, const Loaded &l) {
    if (l.label) {
        j["label"] = *l.label;
    }
}

double max_abs_diff(const Amplitudes &a, const Amplitudes &b) {
    double m = 0.0;
    for (int q = 0; q < 8; q++) {
        m = std::max(m, std::abs(a[q] - b[q]));
    }
    return m;
}

// Distance from the canonical layout of the state transformed by the form's unitaries.
double canonical_residual(const ThreeQubitState &s, const CanonicalForm &cf) {
    Amplitudes t = apply_product(s.amplitudes(), cf.ua, cf.ub, cf.uc);
    Complex g = std::polar(1.0, cf.omega);
    for (auto &z : t) {
        z *= g;
    }
    return max_abs_diff(t, cf.canonical_amplitudes());
}

int cmd_canon(const Options &opt, std::istream &in, std::ostream &out) {
    Loaded l = load(opt, in);
    Party party = party_from(opt.party);
    ThreeQubitState s = permute_parties(l.state, PartyPermutation::bring_first(party));
    CanonicalForm cf = canonical_form(s, opt.tol);
    json j = io::to_json(cf);
    j["party"] = party_name(party);
    j["reconstruction_residual"] = canonical_residual(s, cf);
    attach_label(j, l);
    out << io::dump(j) << "\n";
    return kOk;
}

int cmd_invariants(const Options &opt, std::istream &in, std::ostream &out) {
    Loaded l = load(opt, in);
    json j = io::to_json(invariants(l.state, opt.tol));
    attach_label(j, l);
    out << io::dump(j) << "\n";
    return kOk;
}

int cmd_classify(const Options &opt, std::istream &in, std::ostream &out) {
    Loaded l = load(opt, in);
    json j = io::to_json(classify(l.state, opt.tol));
    attach_label(j, l);
    out << io::dump(j) << "\n";
    return kOk;
}

int cmd_erase(const Options &opt, std::istream &in, std::ostream &out) {
    Loaded l = load(opt, in);
    Party party = party_from(opt.party);
    json dirs = json::array();
    json probs = json::array();
    for (const auto &d : erasing_states(l.state, party, opt.tol)) {
        dirs.push_back(io::to_json(d));
        probs.push_back(d.probability);
    }
    json j = {{"party", party_name(party)}, {"directions", dirs}, {"probabilities", probs}};
    attach_label(j, l);
    out << io::dump(j) << "\n";
    return kOk;
}

int cmd_two_product(const Options &opt, std::istream &in, std::ostream &out) {
    Loaded l = load(opt, in);
    try {
        json j = io::to_json(two_product(l.state, opt.tol));
        attach_label(j, l);
        out << io::dump(j) << "\n";
        return kOk;
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::NotDecomposable) {
            throw;
        }
        json j = {{"error", "NotDecomposable"},
                  {"reason", "I5=0 genuinely tripartite"},
                  {"type", type_label_name(classify(l.state, opt.tol).label)}};
        attach_label(j, l);
        out << io::dump(j) << "\n";
        return kNotDecomposable;
    }
}

int cmd_biseparable(const Options &opt, std::istream &in, std::ostream &out) {
    Loaded l = load(opt, in);
    json j = io::to_json(product_plus_biseparable(canonical_form(l.state, opt.tol)));
    attach_label(j, l);
    out << io::dump(j) << "\n";
    return kOk;
}

int cmd_set2(const Options &opt, std::istream &in, std::ostream &out) {
    Loaded l = load(opt, in);
    json j = io::to_json(set2_form(canonical_form(l.state, opt.tol), opt.tol));
    attach_label(j, l);
    out << io::dump(j) << "\n";
    return kOk;
}

int cmd_random(const Options &opt, std::ostream &out) {
    std::mt19937_64 rng(opt.seed);
    for (int n = 0; n < opt.count; n++) {
        ThreeQubitState s = haar_random(rng);
        out << io::dump(io::to_json(s, "haar seed=" + std::to_string(opt.seed) + " index=" + std::to_string(n)))
            << "\n";
    }
    return kOk;
}

int cmd_verify(const Options &opt, std::istream &in, std::ostream &out) {
    Loaded l = load(opt, in);
    const ThreeQubitState &s = l.state;
    json checks = json::array();
    bool all = true;
    auto check = [&](const std::string &name, double residual, double threshold) {
        bool pass = residual <= threshold;
        all = all && pass;
        checks.push_back({{"name", name}, {"residual", residual}, {"threshold", threshold}, {"pass", pass}});
    };

    CanonicalForm cf = canonical_form(s, opt.tol);
    check("round_trip", std::abs(1.0 - fidelity(reconstruct(cf), s)), 1e-8);
    check("canonical_layout", canonical_residual(s, cf), 1e-8);

    DirectInvariants direct = invariants_direct(s);
    auto closed = invariants_from_canonical(cf);
    for (int q = 0; q < 5; q++) {
        check("dual_path_I" + std::to_string(q + 1), std::abs(direct.i[q] - closed[q]), 1e-9);
    }
    check("hdet_vs_mu0mu4", std::abs(std::norm(direct.hdet) - cf.mu[0] * cf.mu[0] * cf.mu[4] * cf.mu[4]), 1e-10);

    ThreeQubitState one[] = {s};
    DirectInvariants batched = invariants_direct_batch(one)[0];
    double kernel_gap = std::abs(batched.hdet - direct.hdet);
    for (int q = 0; q < 5; q++) {
        kernel_gap = std::max(kernel_gap, std::abs(batched.i[q] - direct.i[q]));
    }
    check("batch_kernel_agreement", kernel_gap, 1e-12);

    for (Party p : {Party::A, Party::B, Party::C}) {
        double worst = 0.0;
        for (const auto &d : erasing_states(s, p, opt.tol)) {
            worst = std::max(worst, std::abs(d.residual_matrix().det()));
        }
        check(std::string("erasing_det_") + party_name(p), worst, 1e-10);
    }

    double i_violation = 0.0;
    const auto &I = direct.i;
    for (int q = 0; q < 3; q++) {
        i_violation = std::max({i_violation, 0.5 - I[q], I[q] - 1.0});
    }
    i_violation = std::max({i_violation, 0.25 - I[3], I[3] - 1.0, -I[4], I[4] - 1.0 / 16});
    check("bounds_I", std::max(0.0, i_violation), 1e-9);

    JInvariants js = invariants_j(cf);
    double j_violation = 0.0;
    for (int q = 0; q < 4; q++) {
        j_violation = std::max({j_violation, -js.j[q], js.j[q] - 0.25});
    }
    check("bounds_J", std::max(0.0, j_violation), 1e-9);

    json j = {{"checks", checks}, {"pass", all}};
    attach_label(j, l);
    out << io::dump(j) << "\n";
    return all ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Canonical form, invariants and classification of three-qubit pure states", "triq"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_output, "JSON output (default)");

    std::function<int()> action;
    auto state_command = [&](const std::string &name, const std::string &help, bool with_party,
                             std::function<int(const Options &, std::istream &, std::ostream &)> fn) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.file, "state file (JSON), or - for stdin");
        sub->add_option("--tol", opt.tol, "zero threshold")->capture_default_str();
        sub->add_flag("--normalize", opt.normalize, "rescale the input to unit norm");
        if (with_party) {
            sub->add_option("--party", opt.party, "singled-out party")->check(CLI::IsMember({"A", "B", "C"}));
        }
        sub->callback([&, fn] { action = [&, fn] { return fn(opt, in, out); }; });
    };

    state_command("canon", "canonical five-term form", true, cmd_canon);
    state_command("invariants", "I1..I5, J1..J5 and the hyperdeterminant", false, cmd_invariants);
    state_command("classify", "entanglement type", false, cmd_classify);
    state_command("erase", "entanglement-erasing measurement directions", true, cmd_erase);
    state_command("two-product", "sum of two nonorthogonal product states", false, cmd_two_product);
    state_command("biseparable-split", "product state plus biseparable state", false, cmd_biseparable);
    state_command("set2", "five-term form on the {000,001,100,110,111} support", false, cmd_set2);
    state_command("verify", "self-check battery", false, cmd_verify);

    CLI::App *random = app.add_subcommand("random", "Haar-random states as JSON lines");
    random->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    random->add_option("--count", opt.count, "number of states")->check(CLI::NonNegativeNumber)->capture_default_str();
    random->callback([&] { action = [&] { return cmd_random(opt, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return kParseError;
    }

    try {
        return action();
    } catch (const io::ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error &e) {
        err << e.what() << "\n";
        if (e.kind() == ErrorKind::NotDecomposable) {
            return kNotDecomposable;
        }
        return kInvalidState;
    }
}

}  // namespace triq::cli
