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


#include "arrtwist/driver/io.hpp"

#include <fstream>
#include <map>

#include "arrtwist/error.hpp"

namespace arrtwist::driver {

using algebra::Matrix;
using algebra::Ring;
using algebra::Scalar;

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::InvalidInput, message); }

const json& require(const json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) bad(what + ": missing \"" + key + "\"");
    return j.at(key);
}

long as_long(const json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<long>();
}

std::size_t as_count(const json& j, const std::string& what) {
    long v = as_long(j, what);
    if (v < 0) bad(what + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

std::string as_string(const json& j, const std::string& what) {
    if (!j.is_string()) bad(what + " must be a string");
    return j.get<std::string>();
}

mpq_class rational_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        mpq_class q;
        std::string s = j.get<std::string>();
        if (s.empty() || q.set_str(s, 10) != 0) bad("'" + s + "' is not a rational number");
        if (q.get_den() == 0) bad("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    }
    bad("coordinates must be integers or rational strings such as \"1/2\"");
}

std::string level_key(std::size_t level) { return "level_" + std::to_string(level + 2); }

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        bad("'" + path + "' is not valid JSON: " + e.what());
    }
}

json resolve(const json& value, const std::string& what) {
    if (value.is_string()) return read_json_file(value.get<std::string>());
    if (value.is_object()) return value;
    bad(what + " must be an object or a file path");
}

arrangement::Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object()) bad("an arrangement must be a JSON object");
    if (j.contains("generic")) {
        const json& g = j.at("generic");
        return arrangement::Arrangement::generic(as_count(require(g, "hyperplanes", "generic"), "hyperplanes"),
                                                 static_cast<int>(as_long(require(g, "r", "generic"), "r")));
    }
    if (j.contains("boolean")) return arrangement::Arrangement::boolean(as_count(j.at("boolean"), "boolean"));
    const json& rj = j.contains("r") ? j.at("r") : require(j, "rank", "arrangement");
    int r = static_cast<int>(as_long(rj, "r"));
    const json& forms = require(j, "forms", "arrangement");
    if (!forms.is_array()) bad("\"forms\" must be a list of coefficient lists");
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& f : forms) {
        if (!f.is_array()) bad("each form is a list of coefficients");
        std::vector<mpq_class> row;
        for (const auto& c : f) row.push_back(rational_from_json(c));
        rows.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) labels.push_back(as_string(l, "label"));
    return arrangement::Arrangement::create(r, std::move(rows), std::move(labels));
}

json to_json(const arrangement::Arrangement& a) {
    json forms = json::array();
    for (const auto& f : a.forms()) {
        json row = json::array();
        for (const auto& c : f) {
            if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
                row.push_back(c.get_num().get_si());
            } else {
                row.push_back(c.get_str());
            }
        }
        forms.push_back(std::move(row));
    }
    return json{{"format", kArrangementFormat}, {"r", a.r()}, {"forms", forms}, {"labels", a.labels()}};
}

fox::GroupPresentation presentation_from_json(const json& j) {
    if (!j.is_object()) bad("a presentation must be a JSON object");
    const json& g = require(j, "generators", "presentation");
    std::vector<std::string> names;
    std::size_t n;
    bool compact;
    if (g.is_array()) {
        for (const auto& x : g) names.push_back(as_string(x, "generator name"));
        n = names.size();
        compact = names == fox::default_names(n) && n <= 26;
    } else {
        n = as_count(g, "generators");
        names = fox::default_names(n);
        compact = n <= 26;
    }
    std::vector<fox::FreeWord> relators;
    if (j.contains("relators"))
        for (const auto& r : j.at("relators")) {
            std::string text = as_string(r, "relator");
            relators.push_back(compact ? fox::parse_word(text) : fox::parse_named_word(text, names));
        }
    bool meridians = j.value("meridians", false);
    return fox::GroupPresentation::create(n, std::move(relators), meridians, std::move(names));
}

json to_json(const fox::GroupPresentation& p) {
    bool compact = p.names() == fox::default_names(p.generators()) && p.generators() <= 26;
    json rel = json::array();
    for (const auto& r : p.relators()) rel.push_back(compact ? r.to_string() : r.to_string(p.names()));
    json out{{"format", kPresentationFormat}};
    if (compact) {
        out["generators"] = p.generators();
    } else {
        out["generators"] = p.names();
    }
    out["relators"] = rel;
    out["meridians"] = p.meridians();
    return out;
}

tower::TowerSpec tower_from_json(const json& j) {
    if (!j.is_object()) bad("a tower must be a JSON object");
    const json& ex = require(j, "exponents", "tower");
    if (!ex.is_array() || ex.empty()) bad("\"exponents\" must be a nonempty list");
    std::size_t L = ex.size();
    std::vector<tower::TowerLevel> levels(L);
    for (std::size_t pos = 0; pos < L; ++pos) levels[L - 1 - pos].rank = as_count(ex[pos], "exponent");
    if (j.contains("names")) {
        const json& names = j.at("names");
        for (auto it = names.begin(); it != names.end(); ++it) {
            bool found = false;
            for (std::size_t i = 0; i < L; ++i)
                if (it.key() == level_key(i)) {
                    found = true;
                    for (const auto& n : it.value()) levels[i].names.push_back(as_string(n, "name"));
                }
            if (!found) bad("unknown level '" + it.key() + "' in \"names\"");
        }
    }
    tower::TowerSpec shape = tower::TowerSpec::create(levels);
    auto global = shape.generator_names();
    for (std::size_t i = 0; i < L; ++i) {
        levels[i].names = shape.levels()[i].names;
        levels[i].action.clear();
    }
    if (j.contains("monodromy")) {
        const json& mono = j.at("monodromy");
        if (!mono.is_object()) bad("\"monodromy\" must be an object keyed by level");
        for (auto it = mono.begin(); it != mono.end(); ++it) {
            std::size_t level = L;
            for (std::size_t i = 0; i < L; ++i)
                if (it.key() == level_key(i)) level = i;
            if (level == L) bad("unknown level '" + it.key() + "' in \"monodromy\"");
            if (level == 0) bad(it.key() + " is the bottom level and has no monodromy");
            auto& lv = levels[level];
            std::size_t below = shape.offset(level);
            lv.action.assign(below, fox::identity_endomorphism(lv.rank));
            for (auto gen = it.value().begin(); gen != it.value().end(); ++gen) {
                auto where = std::find(global.begin(), global.begin() + below, gen.key());
                if (where == global.begin() + below)
                    bad("'" + gen.key() + "' is not a generator below " + it.key());
                const json& images = gen.value();
                if (!images.is_array() || images.size() != lv.rank)
                    bad(it.key() + "." + gen.key() + " must list " + std::to_string(lv.rank) + " words");
                fox::Endomorphism f;
                for (const auto& w : images) f.push_back(fox::parse_named_word(as_string(w, "word"), lv.names));
                lv.action[static_cast<std::size_t>(where - global.begin())] = std::move(f);
            }
        }
    }
    return tower::TowerSpec::create(std::move(levels));
}

json to_json(const tower::TowerSpec& tw) {
    json ex = json::array(), names = json::object(), mono = json::object();
    auto global = tw.generator_names();
    for (std::size_t pos = 0; pos < tw.length(); ++pos) {
        std::size_t i = tw.length() - 1 - pos;
        const auto& lv = tw.levels()[i];
        ex.push_back(lv.rank);
        names[level_key(i)] = lv.names;
        json acts = json::object();
        for (std::size_t y = 0; y < lv.action.size(); ++y) {
            if (fox::is_identity(lv.action[y])) continue;
            json words = json::array();
            for (const auto& w : lv.action[y]) words.push_back(w.to_string(lv.names));
            acts[global[y]] = words;
        }
        if (!acts.empty()) mono[level_key(i)] = acts;
    }
    return json{{"format", kTowerFormat}, {"exponents", ex}, {"names", names}, {"monodromy", mono}};
}

tower::TowerCharacter tower_weights_from_json(const json& j, const tower::TowerSpec& tw) {
    auto global = tw.generator_names();
    std::size_t n = global.size();
    // Top-down order: levels from the top, generators in order within a level.
    std::vector<std::size_t> top_down;
    for (std::size_t pos = 0; pos < tw.length(); ++pos) {
        std::size_t i = tw.length() - 1 - pos;
        for (std::size_t k = 0; k < tw.levels()[i].rank; ++k) top_down.push_back(tw.offset(i) + k);
    }
    tower::TowerCharacter ch{std::vector<long>(n, 0)};
    if (j.is_array()) {
        if (j.size() != n) bad("expected " + std::to_string(n) + " tower weights, got " + std::to_string(j.size()));
        for (std::size_t i = 0; i < n; ++i) ch.weights[top_down[i]] = as_long(j[i], "weight");
    } else if (j.is_object()) {
        std::vector<bool> seen(n, false);
        for (auto it = j.begin(); it != j.end(); ++it) {
            auto where = std::find(global.begin(), global.end(), it.key());
            if (where == global.end()) bad("weight for unknown generator '" + it.key() + "'");
            std::size_t g = static_cast<std::size_t>(where - global.begin());
            ch.weights[g] = as_long(it.value(), "weight");
            seen[g] = true;
        }
        for (std::size_t g = 0; g < n; ++g)
            if (!seen[g]) bad("no weight given for generator '" + global[g] + "'");
    } else {
        bad("tower weights must be a list or a map from generator names");
    }
    return ch;
}

Scalar scalar_from_json(const json& j, const Ring& ring) {
    if (j.is_number_integer()) return Scalar::from_integer(ring, mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) return algebra::parse_scalar(j.get<std::string>(), ring);
    bad("matrix entries must be integers or scalar strings");
}

chain::FreeChainComplex complex_from_json(const json& j) {
    if (!j.is_object()) bad("a complex must be a JSON object");
    Ring ring = Ring::parse(as_string(require(j, "ring", "complex"), "ring"));
    std::vector<std::size_t> ranks;
    for (const auto& r : require(j, "ranks", "complex")) ranks.push_back(as_count(r, "rank"));
    if (ranks.empty()) bad("a complex needs at least one rank");
    std::vector<Matrix> boundaries;
    const json empty = json::array();
    const json& bs = j.contains("boundaries") ? j.at("boundaries") : empty;
    if (bs.size() != ranks.size() - 1)
        bad("expected " + std::to_string(ranks.size() - 1) + " boundary matrices, got " + std::to_string(bs.size()));
    for (std::size_t q = 1; q < ranks.size(); ++q) {
        const json& rows = bs[q - 1];
        if (!rows.is_array() || rows.size() != ranks[q - 1])
            bad("d_" + std::to_string(q) + " must have " + std::to_string(ranks[q - 1]) + " rows");
        Matrix m(ring, ranks[q - 1], ranks[q]);
        for (std::size_t i = 0; i < ranks[q - 1]; ++i) {
            if (!rows[i].is_array() || rows[i].size() != ranks[q])
                bad("each row of d_" + std::to_string(q) + " has " + std::to_string(ranks[q]) + " entries");
            for (std::size_t k = 0; k < ranks[q]; ++k) m(i, k) = scalar_from_json(rows[i][k], ring);
        }
        boundaries.push_back(std::move(m));
    }
    return chain::FreeChainComplex::create(ring, std::move(ranks), std::move(boundaries));
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const chain::FreeChainComplex& c) {
    json bs = json::array();
    for (std::size_t q = 1; q <= c.top_degree(); ++q) bs.push_back(to_json(c.boundary(q)));
    return json{{"format", kComplexFormat}, {"ring", c.ring().name()}, {"ranks", c.ranks()}, {"boundaries", bs}};
}

json to_json(const chain::HomologyGroup& h) {
    json torsion = json::array();
    for (const auto& t : h.torsion) torsion.push_back(t.to_string());
    return json{{"free_rank", h.free_rank}, {"torsion", torsion}};
}

json to_json(const std::vector<chain::HomologyGroup>& groups) {
    json out = json::array();
    for (const auto& h : groups) out.push_back(to_json(h));
    return out;
}

json to_json(const arrangement::Flat& f, const arrangement::Arrangement& a) {
    json hs = json::array();
    for (int i : f.indices()) hs.push_back(a.labels()[static_cast<std::size_t>(i)]);
    return json{{"hyperplanes", hs}, {"codim", f.codim}};
}

json to_json(const milnor::MilnorSpectrum& s) {
    return json{{"format", kSpectrumFormat}, {"n", s.n}, {"values", s.values}, {"b1_total", s.b1_total}};
}

json to_json(const milnor::ObstructionReport& r) {
    return json{{"n", r.n},
                {"b1_total", r.b1_total},
                {"constant_tail", r.constant_tail},
                {"divides", r.divides},
                {"verdict", r.verdict},
                {"certificate", r.certificate}};
}

}  // namespace arrtwist::driver
