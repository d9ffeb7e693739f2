// Copyright 2026 The arrtwist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "arrtwist/driver/jobs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "arrtwist/koszul/koszul.hpp"

namespace arrtwist::driver {

using algebra::Ring;
using algebra::Scalar;
using arrangement::Arrangement;
using arrangement::Character;
using koszul::UnitAssignment;

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::InvalidInput, message); }

const json& field(const json& job, const char* key) {
    if (!job.contains(key)) bad(std::string("this command needs \"") + key + "\"");
    return job.at(key);
}

Arrangement load_arrangement(const json& job) { return arrangement_from_json(resolve(field(job, "arrangement"), "arrangement")); }
fox::GroupPresentation load_presentation(const json& job) {
    return presentation_from_json(resolve(field(job, "presentation"), "presentation"));
}

Ring job_ring(const json& job, const char* fallback = "laurent") {
    return Ring::parse(job.contains("ring") ? job.at("ring").get<std::string>() : std::string(fallback));
}

std::vector<long> long_list(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be a list of integers");
    std::vector<long> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad(std::string(what) + " must be a list of integers");
        out.push_back(x.get<long>());
    }
    return out;
}

// n + 1 weights summing to zero, or n weights with gamma_0 filled in.
Character arrangement_character(const json& job, const Arrangement& a) {
    if (!job.contains("weights")) return Character::trivial(a.size());
    auto w = long_list(job.at("weights"), "weights");
    if (w.size() == a.n()) {
        long s = 0;
        for (long x : w) s += x;
        w.insert(w.begin(), -s);
    }
    if (w.size() != a.size())
        bad("expected " + std::to_string(a.size()) + " weights (or " + std::to_string(a.n()) + "), got " +
            std::to_string(w.size()));
    return Character::create(std::move(w));
}

std::optional<Scalar> job_value(const json& job, const Ring& ring) {
    if (!job.contains("value")) return std::nullopt;
    return scalar_from_json(job.at("value"), ring);
}

UnitAssignment arrangement_units(const json& job, const Arrangement& a, const Ring& ring) {
    if (job.contains("units")) {
        std::vector<Scalar> units;
        for (const auto& u : job.at("units")) units.push_back(scalar_from_json(u, ring));
        if (units.size() != a.n()) bad("expected " + std::to_string(a.n()) + " units");
        return UnitAssignment::scalars(ring, units);
    }
    return UnitAssignment::from_character(arrangement_character(job, a), ring, job_value(job, ring));
}

// Units u_j for the generators of a presentation: explicit, or base^{w_j}.
std::vector<Scalar> presentation_units(const json& job, std::size_t n, const Ring& ring) {
    std::vector<Scalar> units;
    if (job.contains("units")) {
        for (const auto& u : job.at("units")) units.push_back(scalar_from_json(u, ring));
    } else {
        Scalar base = Scalar::one(ring);
        if (auto v = job_value(job, ring)) {
            base = *v;
        } else if (ring.is_laurent()) {
            base = Scalar::t_power(ring, 1);
        } else if (ring.kind() == algebra::RingKind::Cyclotomic) {
            base = Scalar::zeta(ring);
        }
        std::vector<long> w = job.contains("weights") ? long_list(job.at("weights"), "weights") : std::vector<long>(n, 0);
        for (long x : w) units.push_back(base.pow(x));
    }
    if (units.size() != n) bad("expected " + std::to_string(n) + " units or weights, got " + std::to_string(units.size()));
    return units;
}

struct LoadedTower {
    tower::TowerSpec spec;
    tower::TowerCharacter character;
};

LoadedTower load_tower(const json& job) {
    json t = resolve(field(job, "tower"), "tower");
    auto spec = tower_from_json(t);
    tower::TowerCharacter ch{std::vector<long>(spec.generator_count(), 0)};
    if (job.contains("weights")) {
        ch = tower_weights_from_json(job.at("weights"), spec);
    } else if (t.contains("weights")) {
        ch = tower_weights_from_json(t.at("weights"), spec);
    }
    return {std::move(spec), std::move(ch)};
}

json girth_json(const std::optional<int>& g) { return g ? json(*g) : json("infinite"); }

json cmd_lattice(const json& job) {
    auto a = load_arrangement(job);
    std::string scope = job.value("scope", "projective");
    if (scope != "projective" && scope != "cone") bad("scope is \"projective\" or \"cone\"");
    auto flats = arrangement::intersection_lattice(
        a, scope == "cone" ? arrangement::LatticeScope::Cone : arrangement::LatticeScope::Projective);
    json list = json::array();
    std::map<int, long> counts;
    for (const auto& f : flats) {
        list.push_back(to_json(f, a));
        ++counts[f.codim];
    }
    json by_codim = json::object();
    for (auto [c, k] : counts) by_codim[std::to_string(c)] = k;
    return json{{"scope", scope}, {"flats", list}, {"counts_by_codim", by_codim}};
}

json cmd_girth(const json& job) {
    auto a = load_arrangement(job);
    auto g = arrangement::girth(a);
    json out{{"girth", girth_json(g)}, {"essential", a.essential()}};
    if (g && *g == 3) {
        out["generic_position"] = false;
        out["p"] = nullptr;
        out["note"] = "girth 3: the higher homotopy is not determined by the combinatorics alone";
        return out;
    }
    if (!a.essential()) {
        out["generic_position"] = false;
        return out;
    }
    auto prof = arrangement::generic_position_profile(a);
    out["generic_position"] = prof.generic_position;
    out["p"] = prof.p ? json(*prof.p) : json(nullptr);
    return out;
}

json cmd_dense(const json& job) {
    auto a = load_arrangement(job);
    std::string scope = job.value("scope", "projective");
    auto edges = arrangement::dense_edges(
        a, scope == "cone" ? arrangement::LatticeScope::Cone : arrangement::LatticeScope::Projective);
    json list = json::array();
    for (const auto& f : edges) list.push_back(to_json(f, a));
    return json{{"scope", scope}, {"dense_edges", list}};
}

json cmd_betti(const json& job) {
    auto a = load_arrangement(job);
    auto b = arrangement::betti_data(a);
    return json{{"betti", b.betti}, {"euler_characteristic", b.euler_characteristic}};
}

json cmd_nonres(const json& job) {
    auto a = load_arrangement(job);
    if (!job.contains("weights")) {
        auto found = arrangement::find_nonresonant_character(a);
        return json{{"search", true}, {"weights", found ? json(found->weights) : json(nullptr)}};
    }
    auto ch = arrangement_character(job, a);
    auto r = arrangement::nonresonance(a, ch);
    json checked = json::array();
    for (const auto& f : r.checked) checked.push_back(to_json(f, a));
    return json{{"weights", ch.weights},
                {"nonresonant", r.nonresonant},
                {"checked", checked},
                {"violation", r.violation ? to_json(*r.violation, a) : json(nullptr)}};
}

json cmd_homology_koszul(const json& job) {
    auto a = load_arrangement(job);
    Ring ring = job_ring(job);
    auto u = arrangement_units(job, a, ring);
    if (job.value("full", false)) {
        auto c = koszul::complete_homology_generic_position(a, u);
        return json{{"mode", "full"},
                    {"ring", ring.name()},
                    {"groups", to_json(c.groups)},
                    {"top_rank_kernel", c.top_rank_kernel},
                    {"top_rank_formula", c.top_rank_formula},
                    {"kappa", c.kappa},
                    {"euler_characteristic", c.euler_characteristic}};
    }
    auto h = koszul::generic_range_homology(a, u);
    return json{{"mode", "range"},     {"ring", ring.name()},        {"girth", girth_json(h.girth)},
                {"degrees", h.degrees}, {"groups", to_json(h.groups)}, {"note", h.note}};
}

json cmd_homology_fox(const json& job) {
    auto p = load_presentation(job);
    Ring ring = job_ring(job);
    auto units = presentation_units(job, p.generators(), ring);
    auto c = fox::alexander_complex(p, units);
    return json{{"ring", ring.name()},
                {"groups", to_json(std::vector<chain::HomologyGroup>{chain::homology(c, 0), chain::homology(c, 1)})},
                {"d1", to_json(c.boundary(1))},
                {"d2", to_json(c.boundary(2))}};
}

json cmd_homology_tower(const json& job) {
    auto t = load_tower(job);
    Ring ring = job_ring(job);
    std::size_t max_q = job.contains("max_degree") ? job.at("max_degree").get<std::size_t>() : t.spec.length();
    auto groups = tower::tor_groups(t.spec, t.character, max_q, ring);
    auto c = tower::build_tower_complex(t.spec, t.character, ring);
    auto exponents = t.spec.exponents();
    std::reverse(exponents.begin(), exponents.end());
    return json{{"ring", ring.name()},
                {"exponents", exponents},
                {"ranks", c.ranks()},
                {"poincare", tower::poincare_coefficients(t.spec.exponents())},
                {"groups", to_json(groups)}};
}

// Ranks of Tor_q^{Z[Z^n]}(Z, K[t,t^-1]) = H_q of the Koszul complex, q = 0..r.
std::vector<long> koszul_tor_ranks(const UnitAssignment& u, int r) {
    std::size_t top = std::min<std::size_t>(u.n(), static_cast<std::size_t>(r + 1));
    auto k = koszul::build_koszul(u, top);
    std::vector<long> ranks;
    for (int q = 0; q <= r; ++q)
        ranks.push_back(static_cast<std::size_t>(q) <= std::min<std::size_t>(top, u.n())
                            ? static_cast<long>(chain::homology(k.complex, static_cast<std::size_t>(q)).free_rank)
                            : 0);
    return ranks;
}

json cmd_pi_rank(const json& job) {
    Ring ring = job_ring(job);
    if (job.contains("tower")) {
        auto t = load_tower(job);
        int p = field(job, "p").get<int>();
        auto pi = tower::pi_p_presentation_fibertype(t.spec, p, t.character, ring);
        json out{{"path", "tower"},
                 {"p", pi.p},
                 {"presentation_shape", {pi.presentation.rows(), pi.presentation.cols()}},
                 {"cokernel", to_json(pi.cokernel)},
                 {"rank", pi.cokernel.free_rank}};
        if (job.contains("arrangement")) {
            auto a = load_arrangement(job);
            std::vector<long> tor;
            for (const auto& h : tower::tor_groups(t.spec, t.character, static_cast<std::size_t>(a.r()), ring))
                tor.push_back(static_cast<long>(h.free_rank));
            out["tor_ranks"] = tor;
            out["formula_general"] =
                tower::rank_formula_general(arrangement::betti_data(a).euler_characteristic, a.r(), tor);
        }
        return out;
    }
    auto a = load_arrangement(job);
    auto ch = arrangement_character(job, a);
    auto pi = koszul::pi_p_presentation_boolean(a, ch, ring);
    auto tor = koszul_tor_ranks(UnitAssignment::from_character(ch, ring), a.r());
    long chi = arrangement::betti_data(a).euler_characteristic;
    json out{{"path", "koszul"},
             {"p", pi.p},
             {"presentation_shape", {pi.presentation.rows(), pi.presentation.cols()}},
             {"cokernel", to_json(pi.cokernel)},
             {"rank", pi.cokernel.free_rank},
             {"euler_characteristic", chi},
             {"tor_ranks", tor},
             {"formula_general", tower::rank_formula_general(chi, a.r(), tor)}};
    auto ambient = Arrangement::boolean(a.size());
    if (arrangement::nonresonance(ambient, ch).nonresonant) {
        long b_r = tower::poincare_coefficients(std::vector<std::size_t>(a.n(), 1))[static_cast<std::size_t>(a.r())];
        auto nr = tower::rank_formula_nonresonant(chi, a.r(), static_cast<int>(a.size()), b_r);
        out["formula_nonresonant"] = nr.value;
        out["nonresonant_case"] = nr.case_name;
    }
    return out;
}

json cmd_milnor_spectrum(const json& job) {
    auto s = milnor::spectrum_from_presentation(load_presentation(job));
    return json{{"spectrum", to_json(s)}, {"obstruction", to_json(milnor::obstruction_report(s))}};
}

json cmd_milnor_obstruct(const json& job) {
    // A list of values, or a spectrum file {"n": ..., "spectrum": [...]}.
    json source = field(job, "spectrum");
    std::optional<std::size_t> n_file;
    if (source.is_string()) {
        json file = read_json_file(source.get<std::string>());
        if (file.contains("n")) n_file = file.at("n").get<std::size_t>();
        source = field(file, "spectrum");
    }
    auto values = long_list(source, "spectrum");
    if (values.empty()) bad("empty spectrum");
    std::size_t n = job.contains("n") ? job.at("n").get<std::size_t>() : n_file.value_or(values.size() - 1);
    auto s = milnor::MilnorSpectrum::create(n, values);
    json out = to_json(milnor::obstruction_report(s));
    return out;
}

json divisors_json(const std::vector<std::vector<Scalar>>& ds) {
    json out = json::array();
    for (const auto& d : ds) {
        json row = json::array();
        for (const auto& s : d) row.push_back(s.to_string());
        out.push_back(row);
    }
    return out;
}

json cmd_chain_iso(const json& job) {
    auto a = complex_from_json(resolve(field(job, "a"), "complex a"));
    auto b = complex_from_json(resolve(field(job, "b"), "complex b"));
    bool want = job.value("witness", false);
    auto r = chain::decide_isomorphic(a, b, want);
    json out{{"isomorphic", r.isomorphic},
             {"reason", r.reason},
             {"divisors_a", divisors_json(r.divisors_a)},
             {"divisors_b", divisors_json(r.divisors_b)}};
    if (r.witness) {
        json w = json::array();
        for (const auto& m : *r.witness) w.push_back(to_json(m));
        out["witness"] = w;
    }
    return out;
}

json cmd_chain_homology(const json& job) {
    auto c = complex_from_json(resolve(field(job, "complex"), "complex"));
    return json{{"ring", c.ring().name()},
                {"groups", to_json(chain::homology_all(c))},
                {"euler_characteristic", chain::euler_characteristic(c)}};
}

// Crosscheck bookkeeping: every check lists the value of each path.
struct Checks {
    json list = json::array();
    bool agree = true;

    void add(const std::string& name, const std::vector<std::pair<std::string, json>>& values) {
        json v = json::object();
        bool same = true;
        for (const auto& [path, value] : values) {
            v[path] = value;
            same = same && value == values.front().second;
        }
        list.push_back(json{{"name", name}, {"values", v}, {"agree", same}});
        agree = agree && same;
    }
};

std::vector<Scalar> inverted(const std::vector<Scalar>& units) {
    std::vector<Scalar> out;
    for (const auto& u : units) out.push_back(u.inverse());
    return out;
}

void crosscheck_arrangement(const json& job, Checks& checks, json& notes) {
    auto a = load_arrangement(job);
    Ring ring = job_ring(job);
    auto ch = arrangement_character(job, a);
    auto u = UnitAssignment::from_character(ch, ring, job_value(job, ring));
    auto prof = arrangement::generic_position_profile(a);
    bool trivial = std::all_of(ch.weights.begin(), ch.weights.end(), [](long w) { return w == 0; });
    if (!prof.generic_position) {
        auto h = koszul::generic_range_homology(a, u);
        if (trivial) {
            auto binom = tower::poincare_coefficients(std::vector<std::size_t>(a.n(), 1));
            for (std::size_t q = 0; q < h.groups.size(); ++q)
                checks.add("H_" + std::to_string(q) + " rank at the trivial character",
                           {{"koszul", h.groups[q].free_rank}, {"binomial", binom[q]}});
        }
        notes.push_back("not a generic section: only the range q < girth - 2 is checked");
        return;
    }
    auto c = koszul::complete_homology_generic_position(a, u);
    checks.add("top homology rank", {{"kernel_snf", c.top_rank_kernel}, {"kappa_formula", c.top_rank_formula}});
    if (ring.is_laurent()) {
        auto pi = koszul::pi_p_presentation_boolean(a, ch, ring);
        auto tor = koszul_tor_ranks(u, a.r());
        long chi = arrangement::betti_data(a).euler_characteristic;
        std::vector<std::pair<std::string, json>> values = {
            {"cokernel_snf", static_cast<long>(pi.cokernel.free_rank)},
            {"formula_general", tower::rank_formula_general(chi, a.r(), tor)}};
        if (arrangement::nonresonance(Arrangement::boolean(a.size()), ch).nonresonant) {
            long b_r = tower::poincare_coefficients(std::vector<std::size_t>(a.n(), 1))[static_cast<std::size_t>(a.r())];
            values.push_back({"formula_nonresonant",
                              tower::rank_formula_nonresonant(chi, a.r(), static_cast<int>(a.size()), b_r).value});
        }
        checks.add("rank of pi_" + std::to_string(pi.p), values);
    }
    if (trivial) {
        auto binom = tower::poincare_coefficients(std::vector<std::size_t>(a.n(), 1));
        for (std::size_t q = 0; q + 1 < c.groups.size(); ++q)
            checks.add("H_" + std::to_string(q) + " rank at the trivial character",
                       {{"koszul", c.groups[q].free_rank}, {"binomial", binom[q]}});
    }
}

void crosscheck_presentation(const json& job, Checks& checks, json& notes) {
    auto p = load_presentation(job);
    Ring ring = job_ring(job);
    auto units = presentation_units(job, p.generators(), ring);
    auto alex = fox::alexander_complex(p, units);
    // The Koszul complex uses x^-1 - 1, so it receives the inverted units.
    auto k = koszul::build_koszul(UnitAssignment::scalars(ring, inverted(units)), 2);
    std::size_t top = 0;
    if (job.contains("arrangement")) {
        auto a = load_arrangement(job);
        if (a.n() != p.generators()) bad("the arrangement and the presentation have different meridian counts");
        auto g = arrangement::girth(a);
        if (!g || *g >= 4) top = 1;
        if (g && *g == 3) notes.push_back("girth 3: only H_0 is presentation-independent");
    } else {
        notes.push_back("without an arrangement only H_0 is compared with the Koszul complex");
    }
    for (std::size_t q = 0; q <= top; ++q)
        checks.add("H_" + std::to_string(q),
                   {{"alexander", to_json(chain::homology(alex, q))}, {"koszul", to_json(chain::homology(k.complex, q))}});
}

void crosscheck_tower(const json& job, Checks& checks, json& notes) {
    auto t = load_tower(job);
    Ring ring = job_ring(job);
    auto c = tower::build_tower_complex(t.spec, t.character, ring);
    std::vector<Scalar> units;
    for (long w : t.character.weights) units.push_back(Scalar::t_power(ring, -w));
    auto alex = fox::alexander_complex(tower::standard_presentation(t.spec), units);
    for (std::size_t q = 0; q <= 1; ++q)
        checks.add("H_" + std::to_string(q),
                   {{"tower", to_json(chain::homology(c, q))}, {"standard_presentation", to_json(chain::homology(alex, q))}});
    auto poincare = tower::poincare_coefficients(t.spec.exponents());
    json ranks = json::array();
    for (auto r : c.ranks()) ranks.push_back(static_cast<long>(r));
    checks.add("chain ranks", {{"tower", ranks}, {"poincare", poincare}});
    bool direct = true;
    for (const auto& lv : t.spec.levels()) {
        direct = direct && lv.rank == 1;
        for (const auto& f : lv.action) direct = direct && fox::is_identity(f);
    }
    if (direct) {
        std::vector<Scalar> tu;
        for (long w : t.character.weights) tu.push_back(Scalar::t_power(ring, w));
        auto k = koszul::build_koszul(UnitAssignment::scalars(ring, tu), t.spec.length());
        checks.add("isomorphic to the Koszul complex",
                   {{"decide_isomorphic", chain::decide_isomorphic(c, k.complex).isomorphic}, {"expected", true}});
    }
    if (job.contains("arrangement")) {
        auto a = load_arrangement(job);
        int p = a.r() - 1;
        if (static_cast<std::size_t>(p + 2) <= t.spec.length()) {
            auto pi = tower::pi_p_presentation_fibertype(t.spec, p, t.character, ring);
            std::vector<long> tor;
            for (const auto& h : tower::tor_groups(t.spec, t.character, static_cast<std::size_t>(a.r()), ring))
                tor.push_back(static_cast<long>(h.free_rank));
            checks.add("rank of pi_" + std::to_string(p),
                       {{"cokernel_snf", static_cast<long>(pi.cokernel.free_rank)},
                        {"formula_general",
                         tower::rank_formula_general(arrangement::betti_data(a).euler_characteristic, a.r(), tor)}});
        } else {
            notes.push_back("the tower is too short for pi_" + std::to_string(p));
        }
    }
}

json cmd_crosscheck(const json& job) {
    Checks checks;
    json notes = json::array();
    if (job.contains("tower")) {
        crosscheck_tower(job, checks, notes);
    } else if (job.contains("presentation")) {
        crosscheck_presentation(job, checks, notes);
    } else if (job.contains("arrangement")) {
        crosscheck_arrangement(job, checks, notes);
    } else {
        bad("crosscheck needs an arrangement, a presentation or a tower");
    }
    if (checks.list.empty()) bad("no two computation paths apply to this input");
    return json{{"checks", checks.list}, {"notes", notes}, {"agree", checks.agree}};
}

json cmd_selftest(const json& job) {
    std::uint64_t seed = job.value("seed", std::uint64_t{1});
    SelftestOptions opt;
    opt.words = job.value("words", opt.words);
    opt.towers = job.value("towers", opt.towers);
    return selftest(seed, opt);
}

using Handler = std::function<json(const json&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"lattice", cmd_lattice},
        {"girth", cmd_girth},
        {"dense", cmd_dense},
        {"betti", cmd_betti},
        {"nonres", cmd_nonres},
        {"homology-koszul", cmd_homology_koszul},
        {"homology-fox", cmd_homology_fox},
        {"homology-tower", cmd_homology_tower},
        {"milnor-spectrum", cmd_milnor_spectrum},
        {"milnor-obstruct", cmd_milnor_obstruct},
        {"pi-rank", cmd_pi_rank},
        {"chain-iso", cmd_chain_iso},
        {"chain-homology", cmd_chain_homology},
        {"crosscheck", cmd_crosscheck},
        {"selftest", cmd_selftest},
    };
    return table;
}

std::string class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::Input: return "input";
        case ErrorClass::Refusal: return "refusal";
        case ErrorClass::Disagreement: return "disagreement";
    }
    return "input";
}

}  // namespace

int exit_code(ErrorClass c) {
    switch (c) {
        case ErrorClass::Input: return 1;
        case ErrorClass::Refusal: return 2;
        case ErrorClass::Disagreement: return 3;
    }
    return 1;
}

JobOutcome run_job(const json& job) noexcept {
    JobOutcome out;
    std::string command;
    auto fail = [&](ErrorCode code, const std::string& message) {
        ErrorClass c = classify(code);
        out.report = json{{"format", kReportFormat},
                          {"command", command},
                          {"error", {{"code", std::string(to_string(code))}, {"class", class_name(c)}, {"message", message}}}};
        out.exit_code = exit_code(c);
    };
    try {
        if (!job.is_object() || !job.contains("command") || !job.at("command").is_string())
            bad("a job is an object with a \"command\" string");
        command = job.at("command").get<std::string>();
        auto it = handlers().find(command);
        if (it == handlers().end()) bad("unknown command '" + command + "'");
        json body = it->second(job);
        out.report = json{{"format", kReportFormat}, {"command", command}};
        for (auto& [k, v] : body.items()) out.report[k] = v;
        bool agree = !body.contains("agree") || body.at("agree").get<bool>();
        out.exit_code = agree ? 0 : exit_code(ErrorClass::Disagreement);
    } catch (const Error& e) {
        fail(e.code(), e.what());
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("malformed job: ") + e.what());
    } catch (const std::exception& e) {
        fail(ErrorCode::InvalidInput, e.what());
    }
    return out;
}

namespace {

fox::FreeWord random_word(std::mt19937_64& rng, int generators, int max_length) {
    std::uniform_int_distribution<int> len(0, max_length), gen(0, generators - 1), sign(0, 1);
    std::vector<fox::Letter> letters;
    for (int i = len(rng); i > 0; --i) letters.push_back(fox::Letter{gen(rng), sign(rng) ? 1 : -1});
    return fox::FreeWord(letters);
}

struct Gate {
    explicit Gate(std::string n) : name(std::move(n)) {}

    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    json to_json() const {
        json j{{"name", name}, {"cases", cases}, {"failures", failures}, {"passed", failures == 0}};
        if (failures) j["first_failure"] = first_failure;
        return j;
    }
};

}  // namespace

json selftest(std::uint64_t seed, const SelftestOptions& options) {
    std::mt19937_64 rng(seed);
    constexpr int kGenerators = 3;
    Gate identity{"fundamental identity of the Fox calculus"}, chain_rule{"Fox chain rule"};
    for (int i = 0; i < options.words; ++i) {
        auto w = random_word(rng, kGenerators, 12);
        fox::GroupRingElement sum;
        for (int g = 0; g < kGenerators; ++g)
            sum += fox::fox_derivative(w, g) *
                   (fox::GroupRingElement(fox::FreeWord::generator(g)) - fox::GroupRingElement::one());
        identity.record(sum == fox::GroupRingElement(w) - fox::GroupRingElement::one(), w.to_string());
        auto u = random_word(rng, kGenerators, 6), v = random_word(rng, kGenerators, 6);
        for (int g = 0; g < kGenerators; ++g)
            chain_rule.record(fox::fox_derivative(u * v, g) ==
                                  fox::fox_derivative(u, g) + fox::GroupRingElement(u) * fox::fox_derivative(v, g),
                              u.to_string() + " * " + v.to_string());
    }
    Gate valid{"random towers pass check_tower"}, ranks{"tower chain ranks equal Poincare coefficients"},
        low{"tower H_0, H_1 equal those of the standard presentation"};
    const Ring laurent = Ring::laurent(Ring::rationals());
    std::uniform_int_distribution<long> weight(-2, 2);
    for (int i = 0; i < options.towers; ++i) {
        auto tw = tower::random_tower(rng);
        std::string label = "tower " + std::to_string(i);
        valid.record(tower::check_tower(tw).valid, label);
        tower::TowerCharacter ch;
        for (std::size_t g = 0; g < tw.generator_count(); ++g) ch.weights.push_back(weight(rng));
        try {
            auto c = tower::build_tower_complex(tw, ch, laurent);
            auto expected = tower::poincare_coefficients(tw.exponents());
            bool same = c.ranks().size() == expected.size();
            for (std::size_t q = 0; same && q < expected.size(); ++q)
                same = static_cast<long>(c.ranks()[q]) == expected[q];
            ranks.record(same, label);
            std::vector<Scalar> units;
            for (long w : ch.weights) units.push_back(Scalar::t_power(laurent, -w));
            auto alex = fox::alexander_complex(tower::standard_presentation(tw), units);
            low.record(chain::homology(c, 0) == chain::homology(alex, 0) &&
                           chain::homology(c, 1) == chain::homology(alex, 1),
                       label);
        } catch (const Error& e) {
            ranks.record(false, label + ": " + e.what());
        }
    }
    json gates = json::array();
    bool agree = true;
    for (const Gate* g : {&identity, &chain_rule, &valid, &ranks, &low}) {
        gates.push_back(g->to_json());
        agree = agree && g->failures == 0;
    }
    return json{{"seed", seed}, {"gates", gates}, {"agree", agree}};
}

std::string version_string() {
    return std::string("arrtwist ") + ARRTWIST_VERSION_STRING + " (formats: arrangement/" +
           std::to_string(kArrangementFormat) + ", presentation/" + std::to_string(kPresentationFormat) + ", tower/" +
           std::to_string(kTowerFormat) + ", complex/" + std::to_string(kComplexFormat) + ", spectrum/" +
           std::to_string(kSpectrumFormat) + ", report/" + std::to_string(kReportFormat) + ")";
}

}  // namespace arrtwist::driver
