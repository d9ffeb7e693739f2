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


#include "arrtwist/tower/tower.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "arrtwist/error.hpp"

namespace arrtwist::tower {

using algebra::Scalar;
using fox::GroupRingElement;
using fox::Letter;

namespace {

FreeWord shift(const FreeWord& w, std::size_t by) {
    std::vector<Letter> letters = w.letters();
    for (auto& l : letters) l.generator += static_cast<int>(by);
    return FreeWord(letters);
}

// Involution w -> w^-1 extended linearly.
GroupRingElement involution(const GroupRingElement& e) {
    GroupRingElement out;
    for (const auto& [w, c] : e.terms()) out += GroupRingElement(w.inverse(), c);
    return out;
}

std::vector<std::string> default_level_names(std::size_t level, std::size_t levels, std::size_t rank) {
    static const std::string letters = "xyzwvusrqponmlkjihgfedcba";
    std::size_t from_top = levels - 1 - level;
    std::string stem = from_top < letters.size() ? std::string(1, letters[from_top]) : "g" + std::to_string(level + 2) + "_";
    std::vector<std::string> names;
    for (std::size_t k = 0; k < rank; ++k) names.push_back(stem + std::to_string(k + 1));
    return names;
}

}  // namespace

TowerSpec TowerSpec::create(std::vector<TowerLevel> levels) {
    if (levels.empty()) throw Error(ErrorCode::TowerInvalid, "a tower needs at least one level");
    TowerSpec tw;
    std::size_t below = 0;
    std::set<std::string> seen;
    for (std::size_t j = 0; j < levels.size(); ++j) {
        TowerLevel& lv = levels[j];
        std::string where = "level_" + std::to_string(j + 2);
        if (lv.rank == 0) throw Error(ErrorCode::TowerInvalid, where + " has rank 0");
        if (lv.names.empty()) lv.names = default_level_names(j, levels.size(), lv.rank);
        if (lv.names.size() != lv.rank)
            throw Error(ErrorCode::TowerInvalid, where + ": expected " + std::to_string(lv.rank) + " names");
        for (const auto& n : lv.names)
            if (n.empty() || !seen.insert(n).second)
                throw Error(ErrorCode::TowerInvalid, "generator name '" + n + "' is empty or repeated");
        if (lv.action.empty()) lv.action.assign(below, fox::identity_endomorphism(lv.rank));
        if (lv.action.size() != below)
            throw Error(ErrorCode::TowerInvalid, where + ": expected an action for each of the " +
                                                     std::to_string(below) + " lower generators");
        for (auto& f : lv.action) {
            if (f.empty()) f = fox::identity_endomorphism(lv.rank);
            if (f.size() != lv.rank)
                throw Error(ErrorCode::TowerInvalid, where + ": each action lists " + std::to_string(lv.rank) +
                                                         " images");
            for (const auto& w : f)
                if (w.max_generator() >= static_cast<int>(lv.rank))
                    throw Error(ErrorCode::TowerInvalid, where + ": image uses a generator outside the level");
        }
        below += lv.rank;
    }
    tw.levels_ = std::move(levels);
    return tw;
}

TowerSpec TowerSpec::direct_product(const std::vector<std::size_t>& ranks) {
    std::vector<TowerLevel> levels;
    for (std::size_t d : ranks) levels.push_back(TowerLevel{d, {}, {}});
    return create(std::move(levels));
}

std::vector<std::size_t> TowerSpec::exponents() const {
    std::vector<std::size_t> e;
    for (const auto& lv : levels_) e.push_back(lv.rank);
    return e;
}

std::size_t TowerSpec::generator_count() const { return offset(levels_.size()); }

std::size_t TowerSpec::offset(std::size_t level) const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < level && j < levels_.size(); ++j) s += levels_[j].rank;
    return s;
}

std::size_t TowerSpec::level_of(std::size_t generator) const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        s += levels_[j].rank;
        if (generator < s) return j;
    }
    throw Error(ErrorCode::InvalidInput, "generator index out of range");
}

std::vector<std::string> TowerSpec::generator_names() const {
    std::vector<std::string> names;
    for (const auto& lv : levels_) names.insert(names.end(), lv.names.begin(), lv.names.end());
    return names;
}

Endomorphism TowerSpec::action(std::size_t level, const FreeWord& g) const {
    const TowerLevel& lv = levels_.at(level);
    Endomorphism out = fox::identity_endomorphism(lv.rank);
    for (const Letter& l : g.letters()) {
        if (l.generator >= static_cast<int>(lv.action.size()))
            throw Error(ErrorCode::InvalidInput, "word does not lie below level_" + std::to_string(level + 2));
        const Endomorphism& f = lv.action[l.generator];
        if (l.exponent > 0) {
            out = fox::compose(out, f);
        } else {
            auto inv = fox::invert_automorphism(f);
            if (!inv)
                throw Error(ErrorCode::TowerInvalid, "the action of " + generator_names()[l.generator] +
                                                         " on level_" + std::to_string(level + 2) +
                                                         " is not invertible");
            out = fox::compose(out, *inv);
        }
    }
    return out;
}

TowerReport check_tower(const TowerSpec& tw) {
    TowerReport report;
    auto names = tw.generator_names();
    auto fail = [&](std::size_t level, std::size_t y, std::string kind, std::string detail) {
        report.valid = false;
        report.violations.push_back(TowerViolation{level + 2, names[y], std::move(kind), std::move(detail)});
    };
    const auto& levels = tw.levels();
    for (std::size_t j = 1; j < levels.size(); ++j) {
        const TowerLevel& lv = levels[j];
        std::vector<std::optional<Endomorphism>> inverses(lv.action.size());
        for (std::size_t y = 0; y < lv.action.size(); ++y) {
            const Endomorphism& f = lv.action[y];
            for (std::size_t k = 0; k < lv.rank; ++k) {
                bool same = true;
                for (std::size_t m = 0; m < lv.rank; ++m)
                    same = same && f[k].exponent_sum(static_cast<int>(m)) == (k == m ? 1 : 0);
                if (!same)
                    fail(j, y, "homology",
                         "image of " + lv.names[k] + " is " + f[k].to_string(lv.names) + ", which is not " +
                             lv.names[k] + " in homology");
            }
            inverses[y] = fox::invert_automorphism(f);
            if (!inverses[y]) fail(j, y, "not_automorphism", "the images do not form a basis of the free group");
        }
        // Conjugation relators of the lower tower must act trivially.
        for (std::size_t i = 1; i < j; ++i) {
            std::size_t oi = tw.offset(i);
            for (std::size_t k = 0; k < levels[i].rank; ++k) {
                std::size_t x = oi + k;
                for (std::size_t y = 0; y < oi; ++y) {
                    if (!inverses[y]) continue;
                    Endomorphism lhs = fox::compose(lv.action[y], fox::compose(lv.action[x], *inverses[y]));
                    Endomorphism rhs = tw.action(j, shift(levels[i].action[y][k], oi));
                    if (lhs != rhs)
                        fail(j, y, "relation",
                             "conjugating " + names[x] + " by " + names[y] + " is not respected by the action on level_" +
                                 std::to_string(j + 2));
                }
            }
        }
    }
    return report;
}

namespace {

void require_valid(const TowerSpec& tw) {
    auto report = check_tower(tw);
    if (!report.valid) {
        const auto& v = report.violations.front();
        throw Error(ErrorCode::TowerInvalid, "level_" + std::to_string(v.level) + ", generator " + v.generator +
                                                 ": " + v.detail);
    }
}

void require_character(const TowerSpec& tw, const TowerCharacter& ch, const Ring& laurent) {
    if (!laurent.is_laurent())
        throw Error(ErrorCode::UnsupportedRing, "tower complexes live over K[t,t^-1], got " + laurent.name());
    if (ch.weights.size() != tw.generator_count())
        throw Error(ErrorCode::InvalidCharacter, "expected " + std::to_string(tw.generator_count()) +
                                                     " weights, got " + std::to_string(ch.weights.size()));
}

// Matrices of a representation on the generators of the lowest levels.
struct Rep {
    std::size_t dim = 0;
    std::vector<Matrix> fwd, inv;
};

// Per level j >= 1, per lower generator y, per sign: iota(d alpha^{+-1}(y)(x_k) / d x_m).
struct Prepared {
    const TowerSpec* tw = nullptr;
    Ring ring;
    std::vector<std::vector<std::array<std::vector<std::vector<GroupRingElement>>, 2>>> jac;
};

Prepared prepare(const TowerSpec& tw, const Ring& ring) {
    Prepared p{&tw, ring, {}};
    p.jac.resize(tw.length());
    for (std::size_t j = 1; j < tw.length(); ++j) {
        const TowerLevel& lv = tw.levels()[j];
        for (std::size_t y = 0; y < lv.action.size(); ++y) {
            std::array<std::vector<std::vector<GroupRingElement>>, 2> both;
            auto inv = fox::invert_automorphism(lv.action[y]);
            const Endomorphism* images[2] = {&lv.action[y], &*inv};
            for (int s = 0; s < 2; ++s) {
                both[s].assign(lv.rank, std::vector<GroupRingElement>(lv.rank));
                for (std::size_t k = 0; k < lv.rank; ++k)
                    for (std::size_t m = 0; m < lv.rank; ++m)
                        both[s][k][m] = involution(fox::fox_derivative((*images[s])[k], static_cast<int>(m)));
            }
            p.jac[j].push_back(std::move(both));
        }
    }
    return p;
}

Matrix rep_word(const Rep& rep, const FreeWord& w, std::size_t offset, const Ring& R) {
    Matrix out = Matrix::identity(R, rep.dim);
    for (const Letter& l : w.letters()) {
        std::size_t g = offset + static_cast<std::size_t>(l.generator);
        out = out * (l.exponent > 0 ? rep.fwd[g] : rep.inv[g]);
    }
    return out;
}

Matrix rep_element(const Rep& rep, const GroupRingElement& e, std::size_t offset, const Ring& R) {
    Matrix out(R, rep.dim, rep.dim);
    for (const auto& [w, c] : e.terms()) out = out + Scalar::from_integer(R, c) * rep_word(rep, w, offset, R);
    return out;
}

struct RawComplex {
    std::vector<std::size_t> ranks;
    std::vector<Matrix> boundaries;  // boundaries[q-1] : C_q -> C_{q-1}
};

// Complex of the sub-tower of levels 0..top with coefficients in rep.
RawComplex evaluate(const Prepared& p, int top, const Rep& rep) {
    const Ring& R = p.ring;
    if (top < 0) return RawComplex{{rep.dim}, {}};
    const TowerSpec& tw = *p.tw;
    const std::size_t level = static_cast<std::size_t>(top);
    const std::size_t d = tw.levels()[level].rank, N = rep.dim, below = tw.offset(level);

    Rep lower{N, {rep.fwd.begin(), rep.fwd.begin() + below}, {rep.inv.begin(), rep.inv.begin() + below}};
    RawComplex D = evaluate(p, top - 1, lower);

    Rep twisted{d * N, {}, {}};
    for (std::size_t y = 0; y < below; ++y) {
        for (int s = 0; s < 2; ++s) {
            const auto& jac = p.jac[level][y][s];
            const Matrix& phi_y = s == 0 ? rep.fwd[y] : rep.inv[y];
            Matrix m(R, d * N, d * N);
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t row = 0; row < d; ++row)
                    m.set_block(row * N, k * N, rep_element(rep, jac[k][row], below, R) * phi_y);
            (s == 0 ? twisted.fwd : twisted.inv).push_back(std::move(m));
        }
    }
    RawComplex E = evaluate(p, top - 1, twisted);

    std::vector<Matrix> slot;  // Phi(x_k)^-1 - 1
    for (std::size_t k = 0; k < d; ++k) slot.push_back(rep.inv[below + k] - Matrix::identity(R, N));

    auto rank_of = [](const RawComplex& c, long q) -> std::size_t {
        return q >= 0 && q < static_cast<long>(c.ranks.size()) ? c.ranks[q] : 0;
    };
    RawComplex out;
    std::size_t degrees = D.ranks.size() + 1;
    for (std::size_t q = 0; q < degrees; ++q)
        out.ranks.push_back(rank_of(D, static_cast<long>(q)) + rank_of(E, static_cast<long>(q) - 1));
    for (std::size_t q = 1; q < degrees; ++q) {
        std::size_t dq1 = rank_of(D, static_cast<long>(q) - 1), dq = rank_of(D, static_cast<long>(q));
        Matrix b(R, out.ranks[q - 1], out.ranks[q]);
        if (q <= D.boundaries.size()) b.set_block(0, 0, D.boundaries[q - 1]);
        // Slot map from E_{q-1} into D_{q-1}.
        std::size_t cells = rank_of(E, static_cast<long>(q) - 1) / (d * N);
        Scalar sign = Scalar::from_integer(R, (q - 1) % 2 ? -1 : 1);
        for (std::size_t c = 0; c < cells; ++c)
            for (std::size_t k = 0; k < d; ++k) b.set_block(c * N, dq + c * d * N + k * N, sign * slot[k]);
        if (q >= 2 && q - 1 <= E.boundaries.size()) b.set_block(dq1, dq, E.boundaries[q - 2]);
        out.boundaries.push_back(std::move(b));
    }
    return out;
}

Rep character_rep(const TowerCharacter& ch, const Ring& R) {
    Rep rep{1, {}, {}};
    for (long w : ch.weights) {
        rep.fwd.push_back(Matrix::from_rows(R, {{Scalar::t_power(R, w)}}));
        rep.inv.push_back(Matrix::from_rows(R, {{Scalar::t_power(R, -w)}}));
    }
    return rep;
}

}  // namespace

Matrix jacobian_rep(const TowerSpec& tw, std::size_t level, const FreeWord& g, const TowerCharacter& ch,
                    const Ring& laurent) {
    require_character(tw, ch, laurent);
    if (level >= tw.length()) throw Error(ErrorCode::InvalidInput, "no such level");
    Endomorphism alpha = tw.action(level, g);
    long nu = 0;
    for (const Letter& l : g.letters()) nu += l.exponent * ch.weights[l.generator];
    std::size_t d = tw.levels()[level].rank, off = tw.offset(level);
    std::vector<Scalar> units;
    for (std::size_t k = 0; k < d; ++k) units.push_back(Scalar::t_power(laurent, -ch.weights[off + k]));
    Scalar tn = Scalar::t_power(laurent, nu);
    Matrix out(laurent, d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m)
            out(m, k) = tn * fox::specialize(fox::fox_derivative(alpha[k], static_cast<int>(m)), units);
    return out;
}

FreeChainComplex build_tower_complex(const TowerSpec& tw, const TowerCharacter& ch, const Ring& laurent) {
    require_character(tw, ch, laurent);
    require_valid(tw);
    Prepared p = prepare(tw, laurent);
    RawComplex raw = evaluate(p, static_cast<int>(tw.length()) - 1, character_rep(ch, laurent));
    return FreeChainComplex::create(laurent, std::move(raw.ranks), std::move(raw.boundaries));
}

std::vector<HomologyGroup> tor_groups(const TowerSpec& tw, const TowerCharacter& ch, std::size_t max_q,
                                      const Ring& laurent) {
    auto c = build_tower_complex(tw, ch, laurent);
    std::vector<HomologyGroup> out;
    for (std::size_t q = 0; q <= std::min(max_q, c.top_degree()); ++q) out.push_back(chain::homology(c, q));
    return out;
}

koszul::PiPresentation pi_p_presentation_fibertype(const TowerSpec& tw, int p, const TowerCharacter& ch,
                                                   const Ring& laurent) {
    if (p < 1 || static_cast<std::size_t>(p + 2) > tw.length())
        throw Error(ErrorCode::DegreeUnavailable,
                    "pi_" + std::to_string(p) + " needs the boundary in degree " + std::to_string(p + 2) +
                        ", but the tower complex stops at degree " + std::to_string(tw.length()));
    auto c = build_tower_complex(tw, ch, laurent);
    koszul::PiPresentation out;
    out.p = p;
    out.presentation = c.boundary(static_cast<std::size_t>(p + 2));
    out.cokernel = chain::cokernel(out.presentation);
    return out;
}

fox::GroupPresentation standard_presentation(const TowerSpec& tw) {
    std::vector<FreeWord> relators;
    for (std::size_t j = 1; j < tw.length(); ++j) {
        const TowerLevel& lv = tw.levels()[j];
        std::size_t off = tw.offset(j);
        for (std::size_t y = 0; y < lv.action.size(); ++y)
            for (std::size_t k = 0; k < lv.rank; ++k) {
                FreeWord yw = FreeWord::generator(static_cast<int>(y));
                FreeWord x = FreeWord::generator(static_cast<int>(off + k));
                relators.push_back(yw * x * yw.inverse() * shift(lv.action[y][k], off).inverse());
            }
    }
    return fox::GroupPresentation::create(tw.generator_count(), std::move(relators), false, tw.generator_names());
}

std::vector<long> poincare_coefficients(const std::vector<std::size_t>& exponents) {
    std::vector<long> c{1};
    for (std::size_t d : exponents) {
        c.push_back(0);
        for (std::size_t q = c.size() - 1; q >= 1; --q) c[q] += static_cast<long>(d) * c[q - 1];
    }
    return c;
}

long rank_formula_general(long chi, int r, const std::vector<long>& tor_ranks) {
    if (r < 1) throw Error(ErrorCode::InvalidInput, "r must be positive");
    long alt = 0;
    for (int q = 0; q <= r; ++q) {
        long t = q < static_cast<int>(tor_ranks.size()) ? tor_ranks[q] : 0;
        alt += (q % 2 ? -1 : 1) * t;
    }
    return ((r - 1) % 2 ? -1 : 1) * (chi - alt);
}

NonresonantRank rank_formula_nonresonant(long chi, int r, int m, std::optional<long> b_r_pi,
                                         const std::optional<std::vector<std::size_t>>& exponents) {
    if (r < 1 || m < 1) throw Error(ErrorCode::InvalidInput, "r and m must be positive");
    if (r + 1 > m) throw Error(ErrorCode::InvalidInput, "an essential arrangement in P^{r-1} has m >= r + 1");
    NonresonantRank out;
    if (exponents) {
        auto c = poincare_coefficients(*exponents);
        out.betti_from_exponents = r < static_cast<int>(c.size()) ? c[r] : 0;
        long prod = 1;
        for (std::size_t d : *exponents) prod *= static_cast<long>(d);
        out.exponent_product = prod;
    }
    if (r + 1 < m) {
        out.case_name = "r+1<m";
        out.value = ((r - 1) % 2 ? -1 : 1) * chi;
    } else {
        out.case_name = "r+1=m";
        if (!b_r_pi) b_r_pi = out.betti_from_exponents;
        if (!b_r_pi) throw Error(ErrorCode::InvalidInput, "the case r+1=m needs b_r(pi) or the exponents");
        out.value = *b_r_pi;
    }
    return out;
}

namespace {

FreeWord random_word(std::mt19937_64& rng, std::size_t generators, std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, max_length));
    std::uniform_int_distribution<int> gen(0, static_cast<int>(generators) - 1);
    std::vector<Letter> letters;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) letters.push_back(Letter{gen(rng), rng() % 2 ? 1 : -1});
    return FreeWord(letters);
}

Endomorphism inner(const FreeWord& w, std::size_t rank) {
    Endomorphism f;
    for (std::size_t k = 0; k < rank; ++k) f.push_back(w * FreeWord::generator(static_cast<int>(k)) * w.inverse());
    return f;
}

std::size_t longest(const Endomorphism& f) {
    std::size_t m = 0;
    for (const auto& w : f) m = std::max(m, w.length());
    return m;
}

// Product of partial conjugations x_k -> x_j^{+-1} x_k x_j^{-+1}, k in a set avoiding j.
Endomorphism random_ia(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
    Endomorphism f = fox::identity_endomorphism(rank);
    if (rank < 2) return f;
    std::size_t steps = 1 + rng() % 3;
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t j = rng() % rank;
        FreeWord c = FreeWord::generator(static_cast<int>(j), rng() % 2 ? 1 : -1);
        Endomorphism e = fox::identity_endomorphism(rank);
        for (std::size_t k = 0; k < rank; ++k)
            if (k != j && rng() % 2) e[k] = c * e[k] * c.inverse();
        Endomorphism next = fox::compose(f, e);
        if (longest(next) <= max_length) f = std::move(next);
    }
    return f;
}

}  // namespace

TowerSpec random_tower(std::mt19937_64& rng, const RandomTowerOptions& options) {
    std::size_t L = 1 + rng() % std::max<std::size_t>(1, options.max_levels);
    std::vector<TowerLevel> levels;
    for (std::size_t j = 0; j < L; ++j) levels.push_back(TowerLevel{1 + rng() % options.max_rank, {}, {}});
    std::size_t d0 = levels[0].rank;
    bool inner_mode = L >= 3 && rng() % 2;
    std::vector<FreeWord> conj_by;  // level 1 actions Inn(w_y) in inner mode
    if (L >= 2) {
        auto& lv = levels[1];
        for (std::size_t y = 0; y < d0; ++y) {
            if (inner_mode) {
                FreeWord w = random_word(rng, lv.rank, std::max<std::size_t>(1, (options.max_word_length - 1) / 2));
                conj_by.push_back(w);
                lv.action.push_back(inner(w, lv.rank));
            } else {
                lv.action.push_back(rng() % 3 == 0 ? inner(random_word(rng, lv.rank, 1), lv.rank)
                                                   : random_ia(rng, lv.rank, options.max_word_length));
            }
        }
    }
    for (std::size_t j = 2; j < L; ++j) {
        auto& lv = levels[j];
        std::size_t below = 0;
        for (std::size_t i = 0; i < j; ++i) below += levels[i].rank;
        if (inner_mode && j == 2) {
            // alpha_2 = Inn o phi with phi(y) = phi(w_y).
            std::size_t d1 = levels[1].rank;
            std::vector<FreeWord> phi;
            for (std::size_t k = 0; k < d1; ++k) phi.push_back(rng() % 3 ? random_word(rng, lv.rank, 1) : FreeWord{});
            auto phi_of = [&](const FreeWord& w) {
                FreeWord out;
                for (const Letter& l : w.letters()) out = out * (l.exponent > 0 ? phi[l.generator] : phi[l.generator].inverse());
                return out;
            };
            std::vector<Endomorphism> actions(below);
            for (std::size_t y = 0; y < d0; ++y) actions[y] = inner(phi_of(conj_by[y]), lv.rank);
            for (std::size_t k = 0; k < d1; ++k) actions[d0 + k] = inner(phi[k], lv.rank);
            bool short_enough = true;
            for (const auto& f : actions) short_enough = short_enough && longest(f) <= options.max_word_length;
            if (short_enough) {
                lv.action = std::move(actions);
                continue;
            }
        }
        // Action factoring through the bottom level.
        lv.action.assign(below, fox::identity_endomorphism(lv.rank));
        for (std::size_t y = 0; y < d0; ++y) lv.action[y] = random_ia(rng, lv.rank, options.max_word_length);
    }
    TowerSpec tw = TowerSpec::create(std::move(levels));
    auto report = check_tower(tw);
    if (!report.valid)
        throw Error(ErrorCode::TowerInvalid, "random tower generator produced an invalid tower: " +
                                                 report.violations.front().detail);
    return tw;
}

}  // namespace arrtwist::tower
