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

#include "arrtwist/fox/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "arrtwist/error.hpp"

namespace arrtwist::fox {

FreeWord::FreeWord(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) {
        if (l.exponent != 1 && l.exponent != -1)
            throw Error(ErrorCode::InvalidInput, "letters carry exponent +1 or -1");
        if (l.generator < 0) throw Error(ErrorCode::InvalidInput, "negative generator index");
        if (!letters_.empty() && letters_.back().generator == l.generator &&
            letters_.back().exponent == -l.exponent) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

FreeWord FreeWord::generator(int g, int exponent) { return FreeWord({Letter{g, exponent}}); }

int FreeWord::max_generator() const {
    int m = -1;
    for (const auto& l : letters_) m = std::max(m, l.generator);
    return m;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(Letter{it->generator, -it->exponent});
    return w;
}

FreeWord FreeWord::pow(long e) const {
    FreeWord base = e < 0 ? inverse() : *this, out;
    for (long i = 0; i < std::labs(e); ++i) out = out * base;
    return out;
}

long FreeWord::exponent_sum(int g) const {
    long s = 0;
    for (const auto& l : letters_)
        if (l.generator == g) s += l.exponent;
    return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    for (const Letter& l : b.letters_) {
        if (!w.letters_.empty() && w.letters_.back().generator == l.generator &&
            w.letters_.back().exponent == -l.exponent) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (l.generator >= 26) throw Error(ErrorCode::InvalidInput, "compact words use at most 26 letters");
        s.push_back(static_cast<char>('a' + l.generator));
        if (l.exponent < 0) s += "-1";
    }
    return s;
}

std::string FreeWord::to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const auto& l = letters_[i];
        if (l.generator >= static_cast<int>(names.size()))
            throw Error(ErrorCode::InvalidInput, "generator without a name");
        out << (i ? " " : "") << names[l.generator] << (l.exponent < 0 ? "-1" : "");
    }
    return out.str();
}

namespace {

// Parses an optional exponent suffix: "-1", "^-1", "^3", "^-2". Advances pos.
long parse_exponent(std::string_view s, std::size_t& pos, std::string_view whole) {
    auto fail = [&]() -> long {
        throw Error(ErrorCode::InvalidInput, "bad exponent in word '" + std::string(whole) + "'");
    };
    if (pos >= s.size()) return 1;
    bool caret = false;
    if (s[pos] == '^') {
        caret = true;
        ++pos;
    }
    if (pos >= s.size()) return caret ? fail() : 1;
    bool negative = false;
    if (s[pos] == '-') {
        negative = true;
        ++pos;
    } else if (!caret) {
        return 1;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) return fail();
    long e = std::stol(std::string(s.substr(start, pos - start)));
    return negative ? -e : e;
}

}  // namespace

FreeWord parse_word(std::string_view text) {
    FreeWord w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++pos;
            continue;
        }
        if (c == '1' && (pos + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
            ++pos;
            continue;
        }
        if (c < 'a' || c > 'z')
            throw Error(ErrorCode::InvalidInput, "unexpected '" + std::string(1, c) + "' in word '" +
                                                     std::string(text) + "'");
        ++pos;
        long e = parse_exponent(text, pos, text);
        w = w * FreeWord::generator(c - 'a').pow(e);
    }
    return w;
}

FreeWord parse_named_word(std::string_view text, const std::vector<std::string>& names) {
    FreeWord w;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "1") continue;
        int best = -1;
        for (std::size_t g = 0; g < names.size(); ++g) {
            const std::string& n = names[g];
            if (token.compare(0, n.size(), n) != 0) continue;
            if (best < 0 || n.size() > names[best].size()) best = static_cast<int>(g);
        }
        if (best < 0)
            throw Error(ErrorCode::InvalidInput, "unknown generator in '" + token + "'");
        std::size_t pos = names[best].size();
        long e = parse_exponent(token, pos, text);
        if (pos != token.size())
            throw Error(ErrorCode::InvalidInput, "cannot parse '" + token + "' in word '" + std::string(text) + "'");
        w = w * FreeWord::generator(best).pow(e);
    }
    return w;
}

FreeWord substitute(const Endomorphism& f, const FreeWord& w) {
    FreeWord out;
    for (const auto& l : w.letters()) {
        if (l.generator >= static_cast<int>(f.size()))
            throw Error(ErrorCode::InvalidInput, "word uses a generator outside the endomorphism's domain");
        out = out * (l.exponent > 0 ? f[l.generator] : f[l.generator].inverse());
    }
    return out;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
    Endomorphism h;
    for (const auto& w : g) h.push_back(substitute(f, w));
    return h;
}

Endomorphism identity_endomorphism(std::size_t n) {
    Endomorphism f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(FreeWord::generator(static_cast<int>(i)));
    return f;
}

bool is_identity(const Endomorphism& f) { return f == identity_endomorphism(f.size()); }

std::optional<Endomorphism> invert_automorphism(const Endomorphism& f) {
    std::size_t n = f.size();
    std::vector<FreeWord> u = f, expr = identity_endomorphism(n);
    struct Move {
        std::size_t i, j;
        bool right;
        int sign;
    };
    auto result = [&](const Move& m) {
        FreeWord x = m.sign > 0 ? u[m.j] : u[m.j].inverse();
        return m.right ? u[m.i] * x : x * u[m.i];
    };
    auto commit = [&](const Move& m) {
        FreeWord x = m.sign > 0 ? expr[m.j] : expr[m.j].inverse();
        u[m.i] = result(m);
        expr[m.i] = m.right ? expr[m.i] * x : x * expr[m.i];
    };
    auto moves = [&]() {
        std::vector<Move> all;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    for (bool right : {true, false})
                        for (int sign : {1, -1}) all.push_back(Move{i, j, right, sign});
        return all;
    };
    const std::vector<Move> all = moves();
    auto best_reduction = [&]() -> std::optional<Move> {
        std::optional<Move> best;
        long gain = 0;
        for (const auto& m : all) {
            long g = static_cast<long>(u[m.i].length()) - static_cast<long>(result(m).length());
            if (g > gain) {
                gain = g;
                best = m;
            }
        }
        return best;
    };
    for (int iteration = 0; iteration < 100000; ++iteration) {
        for (const auto& w : u)
            if (w.empty()) return std::nullopt;
        if (std::all_of(u.begin(), u.end(), [](const FreeWord& w) { return w.length() == 1; })) break;
        if (auto m = best_reduction()) {
            commit(*m);
            continue;
        }
        // Stuck: look one length-preserving move ahead.
        bool moved = false;
        for (const auto& m : all) {
            if (result(m).length() != u[m.i].length()) continue;
            auto saved_u = u, saved_e = expr;
            commit(m);
            if (best_reduction()) {
                moved = true;
                break;
            }
            u = std::move(saved_u);
            expr = std::move(saved_e);
        }
        if (!moved) return std::nullopt;
    }
    Endomorphism inv(n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].length() != 1) return std::nullopt;
        const Letter& l = u[i].letters()[0];
        if (l.generator >= static_cast<int>(n) || seen[l.generator]) return std::nullopt;
        seen[l.generator] = true;
        inv[l.generator] = l.exponent > 0 ? expr[i] : expr[i].inverse();
    }
    if (!is_identity(compose(f, inv)) || !is_identity(compose(inv, f))) return std::nullopt;
    return inv;
}

}  // namespace arrtwist::fox
