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


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arrtwist/arrtwist.h"

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

json integer_list(const std::string& text, const std::string& what) {
    json out = json::array();
    for (const auto& s : split(text)) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw CLI::ValidationError(what, "'" + s + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

// "1,0,-1" or, for towers, "x1=1,y1=-2".
json weights_json(const std::string& text) {
    if (text.find('=') == std::string::npos) return integer_list(text, "--weights");
    json out = json::object();
    for (const auto& s : split(text)) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--weights", "mixed list and name=value forms");
        out[s.substr(0, eq)] = integer_list(s.substr(eq + 1), "--weights")[0];
    }
    return out;
}

json units_json(const std::string& text) {
    json out = json::array();
    for (const auto& s : split(text)) out.push_back(s);
    return out;
}

struct Options {
    std::string arrangement, presentation, tower, a, b, complex, job_file, scope = "projective", ring, value, units,
        weights, spectrum;
    std::size_t n = 0;
    int p = -1;
    int max_degree = -1;
    bool full = false, witness = false;
    std::uint64_t seed = 1;
    int words = 1000, towers = 100;
};

void put_path(json& job, const char* key, const std::string& path) {
    if (!path.empty()) job[key] = path;
}

void put_common(json& job, const Options& o) {
    put_path(job, "arrangement", o.arrangement);
    put_path(job, "presentation", o.presentation);
    put_path(job, "tower", o.tower);
    if (!o.ring.empty()) job["ring"] = o.ring;
    if (!o.value.empty()) job["value"] = o.value;
    if (!o.units.empty()) job["units"] = units_json(o.units);
    if (!o.weights.empty()) job["weights"] = weights_json(o.weights);
}

int run(const json& job) {
    char* report = nullptr;
    at_status status = at_run_job(job.dump().c_str(), &report);
    if (report) {
        std::cout << report << "\n";
        at_string_free(report);
    }
    if (status != AT_OK && *at_last_error()) std::cerr << "arrtwist: " << at_last_error() << "\n";
    return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted homology of hyperplane arrangement complements"};
    app.set_version_flag("--version", std::string(at_version()));
    app.require_subcommand(1);
    Options o;
    json job;

    auto add_ring = [&](CLI::App* c) {
        c->add_option("--ring", o.ring, "laurent, laurent:<base>, cyclotomic:<d>, q, z or fp:<p>");
    };
    auto add_weights = [&](CLI::App* c, const char* help) { c->add_option("--weights", o.weights, help); };

    auto* arr = app.add_subcommand("arr", "Combinatorics of an arrangement");
    arr->require_subcommand(1);
    for (const char* name : {"lattice", "girth", "dense", "betti", "nonres"}) {
        auto* c = arr->add_subcommand(name);
        c->add_option("--arrangement", o.arrangement, "arrangement JSON file")->required();
        if (std::string(name) == "lattice" || std::string(name) == "dense")
            c->add_option("--scope", o.scope, "projective or cone")
                ->check(CLI::IsMember({"projective", "cone"}));
        if (std::string(name) == "nonres")
            add_weights(c, "gamma_0..gamma_n or gamma_1..gamma_n; omitted: search for nonresonant weights");
        c->callback([&, name] {
            job = json{{"command", name}};
            put_common(job, o);
            if (std::string(name) == "lattice" || std::string(name) == "dense") job["scope"] = o.scope;
        });
    }

    auto* hom = app.add_subcommand("homology", "Twisted homology");
    hom->require_subcommand(1);
    auto* hk = hom->add_subcommand("koszul", "Koszul complex of Z^n over the arrangement's meridians");
    hk->add_option("--arrangement", o.arrangement)->required();
    add_weights(hk, "character weights");
    add_ring(hk);
    hk->add_option("--value", o.value, "scalar substituted for the generator of the character");
    hk->add_option("--units", o.units, "comma separated units u_1..u_n")->excludes("--weights");
    hk->add_flag("--full", o.full, "complete homology in generic position");
    hk->callback([&] {
        job = json{{"command", "homology-koszul"}, {"full", o.full}};
        put_common(job, o);
    });
    auto* hf = hom->add_subcommand("fox", "Alexander complex of a presentation");
    hf->add_option("--presentation", o.presentation)->required();
    add_weights(hf, "exponents w_j for x_j -> t^w_j");
    add_ring(hf);
    hf->add_option("--value", o.value);
    hf->add_option("--units", o.units)->excludes("--weights");
    hf->callback([&] {
        job = json{{"command", "homology-fox"}};
        put_common(job, o);
    });
    auto* ht = hom->add_subcommand("tower", "Equivariant complex of an iterated semidirect product");
    ht->add_option("--tower", o.tower)->required();
    add_weights(ht, "top-down list or name=weight pairs");
    add_ring(ht);
    ht->add_option("--max-degree", o.max_degree);
    ht->callback([&] {
        job = json{{"command", "homology-tower"}};
        put_common(job, o);
        if (o.max_degree >= 0) job["max_degree"] = o.max_degree;
    });

    auto* pi = app.add_subcommand("pi", "Character-abelianized homotopy groups");
    pi->require_subcommand(1);
    auto* pr = pi->add_subcommand("rank", "Rank of pi_p over K[t,t^-1]");
    pr->add_option("--arrangement", o.arrangement);
    pr->add_option("--tower", o.tower);
    pr->add_option("--p", o.p, "degree, required with --tower");
    add_weights(pr, "character weights");
    add_ring(pr);
    pr->callback([&] {
        job = json{{"command", "pi-rank"}};
        put_common(job, o);
        if (o.p >= 0) job["p"] = o.p;
    });

    auto* mil = app.add_subcommand("milnor", "Milnor fiber first Betti numbers");
    mil->require_subcommand(1);
    auto* ms = mil->add_subcommand("spectrum", "b_1^t from a meridian-marked presentation");
    ms->add_option("--presentation", o.presentation)->required();
    ms->callback([&] {
        job = json{{"command", "milnor-spectrum"}};
        put_common(job, o);
    });
    auto* mo = mil->add_subcommand("obstruct", "Relative minimality test of a spectrum");
    mo->add_option("--spectrum", o.spectrum, "b_1^0,...,b_1^n or a spectrum file")->required();
    mo->add_option("--n", o.n, "number of hyperplanes minus one");
    mo->callback([&] {
        json spectrum = std::filesystem::is_regular_file(o.spectrum) ? json(o.spectrum)
                                                                     : integer_list(o.spectrum, "--spectrum");
        job = json{{"command", "milnor-obstruct"}, {"spectrum", spectrum}};
        if (o.n) job["n"] = o.n;
    });

    auto* ch = app.add_subcommand("chain", "Free chain complexes over a PID");
    ch->require_subcommand(1);
    auto* ci = ch->add_subcommand("iso", "Decide chain isomorphism");
    ci->add_option("--a", o.a)->required();
    ci->add_option("--b", o.b)->required();
    ci->add_flag("--witness", o.witness, "emit a chain isomorphism");
    ci->callback([&] { job = json{{"command", "chain-iso"}, {"a", o.a}, {"b", o.b}, {"witness", o.witness}}; });
    auto* chh = ch->add_subcommand("homology", "Homology in every degree");
    chh->add_option("--complex", o.complex)->required();
    chh->callback([&] { job = json{{"command", "chain-homology"}, {"complex", o.complex}}; });

    auto* cc = app.add_subcommand("crosscheck", "Run every applicable computation path and compare");
    cc->add_option("--arrangement", o.arrangement);
    cc->add_option("--presentation", o.presentation);
    cc->add_option("--tower", o.tower);
    add_weights(cc, "character weights");
    add_ring(cc);
    cc->add_option("--value", o.value);
    cc->add_option("--units", o.units);
    cc->callback([&] {
        job = json{{"command", "crosscheck"}};
        put_common(job, o);
    });

    auto* st = app.add_subcommand("selftest", "Property gates on random inputs");
    st->add_option("--seed", o.seed, "seed of the input generators");
    st->add_option("--words", o.words);
    st->add_option("--towers", o.towers);
    st->callback([&] { job = json{{"command", "selftest"}, {"seed", o.seed}, {"words", o.words}, {"towers", o.towers}}; });

    auto* rj = app.add_subcommand("run", "Run a JSON job file");
    rj->add_option("--job", o.job_file)->required();
    rj->callback([&] {
        std::ifstream in(o.job_file);
        if (!in) throw CLI::ValidationError("--job", "cannot open " + o.job_file);
        try {
            job = json::parse(in);
        } catch (const json::exception& e) {
            throw CLI::ValidationError("--job", e.what());
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return run(job);
}
