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


#include <gtest/gtest.h>

#include <random>

#include "arrtwist/error.hpp"
#include "arrtwist/fox/presentation.hpp"
#include "arrtwist/koszul/koszul.hpp"

using namespace arrtwist;
using namespace arrtwist::fox;
using algebra::Ring;
using algebra::Scalar;

namespace {

FreeWord random_word(std::mt19937_64& rng, int generators, std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<int> gen(0, generators - 1), sign(0, 1);
    std::vector<Letter> letters;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) letters.push_back(Letter{gen(rng), sign(rng) ? 1 : -1});
    return FreeWord(letters);
}

GroupRingElement g(const FreeWord& w) { return GroupRingElement(w); }

// Independent derivative: split the word in half and apply the product rule.
GroupRingElement fox_by_halves(const std::vector<Letter>& letters, int i) {
    if (letters.empty()) return {};
    if (letters.size() == 1) {
        const Letter& l = letters[0];
        if (l.generator != i) return {};
        if (l.exponent > 0) return GroupRingElement::one();
        return -g(FreeWord::generator(i, -1));
    }
    std::size_t h = letters.size() / 2;
    std::vector<Letter> u(letters.begin(), letters.begin() + h), v(letters.begin() + h, letters.end());
    return fox_by_halves(u, i) + g(FreeWord(u)) * fox_by_halves(v, i);
}

}  // namespace

TEST(FreeWord, ReductionAndParsing) {
    EXPECT_TRUE(parse_word("aa-1").empty());
    EXPECT_EQ(parse_word("ab-1ba").to_string(), "aa");
    EXPECT_EQ(parse_word("a^-2 b^2").to_string(), "a-1a-1bb");
    EXPECT_EQ(parse_word("1"), FreeWord{});
    EXPECT_EQ(parse_word("aba-1b-1").inverse(), parse_word("bab-1a-1"));
    std::vector<std::string> names = {"x1", "x2", "x10"};
    EXPECT_EQ(parse_named_word("x10 x1-1 x2^2", names),
              FreeWord({{2, 1}, {0, -1}, {1, 1}, {1, 1}}));
    EXPECT_EQ(parse_named_word("x1 x2 x1-1", names).to_string(names), "x1 x2 x1-1");
    EXPECT_THROW(parse_word("aB"), Error);
    EXPECT_THROW(parse_named_word("y1", names), Error);
    EXPECT_EQ(parse_word("abab-1").exponent_sum(0), 2);
    EXPECT_EQ(parse_word("abab-1").exponent_sum(1), 0);
}

TEST(Fox, DefiningExamples) {
    FreeWord x = FreeWord::generator(0), y = FreeWord::generator(1);
    EXPECT_EQ(fox_derivative(x * y, 0), GroupRingElement::one());
    EXPECT_EQ(fox_derivative(x * y, 1), g(x));
    EXPECT_EQ(fox_derivative(x.inverse(), 0), -g(x.inverse()));
    FreeWord w = y * x * y.inverse() * x.inverse();
    EXPECT_EQ(fox_derivative(w, 0), g(y) - g(w));
}

TEST(Fox, FundamentalIdentityRandomWords) {
    std::mt19937_64 rng(20261017);
    const int n = 4;
    for (int trial = 0; trial < 1500; ++trial) {
        FreeWord w = random_word(rng, n, 12);
        GroupRingElement sum;
        for (int i = 0; i < n; ++i) {
            GroupRingElement d = fox_derivative(w, i);
            ASSERT_EQ(d, fox_by_halves(w.letters(), i)) << w.to_string();
            sum += d * (g(FreeWord::generator(i)) - GroupRingElement::one());
        }
        ASSERT_EQ(sum, g(w) - GroupRingElement::one()) << w.to_string();
    }
}

TEST(Fox, ChainRuleUnderSubstitution) {
    std::mt19937_64 rng(7);
    const int n = 3;
    for (int trial = 0; trial < 1000; ++trial) {
        Endomorphism beta;
        for (int i = 0; i < n; ++i) beta.push_back(random_word(rng, n, 4));
        FreeWord w = random_word(rng, n, 12);
        FreeWord bw = substitute(beta, w);
        for (int m = 0; m < n; ++m) {
            GroupRingElement rhs;
            for (int p = 0; p < n; ++p) rhs += substitute(beta, fox_derivative(w, p)) * fox_derivative(beta[p], m);
            ASSERT_EQ(fox_derivative(bw, m), rhs);
        }
    }
}

TEST(Fox, Specialize) {
    Ring L = Ring::laurent(Ring::rationals());
    Scalar t = Scalar::t_power(L, 1);
    FreeWord x = FreeWord::generator(0), y = FreeWord::generator(1);
    FreeWord w = y * x * y.inverse() * x.inverse();
    EXPECT_EQ(specialize(g(y) - g(w), {t, t}), t - Scalar::one(L));
    EXPECT_TRUE(specialize(GroupRingElement::one(), {t}).is_one());
    Ring K = Ring::cyclotomic(3);
    Scalar z = Scalar::zeta(K);
    EXPECT_EQ(specialize(g(x.inverse()), {z}), z * z);
}

TEST(Alexander, Examples) {
    Ring K = Ring::cyclotomic(3);
    Scalar z = Scalar::zeta(K);
    auto free2 = GroupPresentation::create(2, {});
    auto c = alexander_complex(free2, {z, z});
    EXPECT_EQ(chain::homology(c, 0).free_rank, 0u);
    EXPECT_EQ(chain::homology(c, 1).free_rank, 1u);

    auto z2 = GroupPresentation::create(2, {parse_word("aba-1b-1")}, true);
    Ring Q = Ring::rationals();
    auto triv = alexander_complex(z2, {Scalar::one(Q), Scalar::one(Q)});
    EXPECT_EQ(chain::homology(triv, 0).free_rank, 1u);
    EXPECT_EQ(chain::homology(triv, 1).free_rank, 2u);

    Ring L = Ring::laurent(Q);
    Scalar t = Scalar::t_power(L, 1);
    auto tc = alexander_complex(z2, {t, t});
    auto h1 = chain::homology(tc, 1);
    EXPECT_EQ(h1.free_rank, 0u);
    EXPECT_EQ(h1.torsion, (std::vector<Scalar>{t - Scalar::one(L)}));
    // Koszul uses x^-1 - 1, so it is compared with inverted units.
    auto k = koszul::build_koszul(koszul::UnitAssignment::scalars(L, {t.inverse(), t.inverse()}), 2);
    for (std::size_t q = 0; q <= 1; ++q) EXPECT_EQ(chain::homology(tc, q), chain::homology(k.complex, q));

    try {
        alexander_complex(GroupPresentation::create(1, {parse_word("aa")}), {t});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RelatorNotKilled);
    }
    EXPECT_THROW(GroupPresentation::create(2, {parse_word("aab-1")}, true), Error);
}

TEST(Alexander, CommutatorPresentationMatchesKoszulInLowDegrees) {
    std::mt19937_64 rng(3);
    Ring L = Ring::laurent(Ring::rationals());
    for (std::size_t n = 1; n <= 4; ++n) {
        auto p = GroupPresentation::free_abelian(n);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Scalar> units, inv;
            for (std::size_t i = 0; i < n; ++i) {
                long e = std::uniform_int_distribution<long>(-3, 3)(rng);
                units.push_back(Scalar::t_power(L, e));
                inv.push_back(Scalar::t_power(L, -e));
            }
            auto a = alexander_complex(p, units);
            auto k = koszul::build_koszul(koszul::UnitAssignment::scalars(L, inv), 2);
            for (std::size_t q = 0; q <= 1; ++q) EXPECT_EQ(chain::homology(a, q), chain::homology(k.complex, q));
            bool trivial = std::all_of(units.begin(), units.end(), [](const Scalar& u) { return u.is_one(); });
            auto h0 = chain::homology(a, 0);
            EXPECT_EQ(trivial, h0.free_rank == 1 && h0.torsion.empty());
        }
    }
}

TEST(Nielsen, InvertsRandomAutomorphisms) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + trial % 3;
        Endomorphism f = identity_endomorphism(n);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        int steps = 1 + trial % 8;
        for (int s = 0; s < steps; ++s) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            FreeWord xj = FreeWord::generator(static_cast<int>(j), rng() % 2 ? 1 : -1);
            Endomorphism e = identity_endomorphism(n);
            switch (rng() % 3) {
                case 0: e[i] = e[i] * xj; break;
                case 1: e[i] = xj * e[i]; break;
                default: e[i] = xj * e[i] * xj.inverse(); break;
            }
            f = compose(f, e);
        }
        auto inv = invert_automorphism(f);
        ASSERT_TRUE(inv.has_value());
        EXPECT_TRUE(is_identity(compose(f, *inv)));
        EXPECT_TRUE(is_identity(compose(*inv, f)));
    }
    EXPECT_FALSE(invert_automorphism({parse_word("aa"), parse_word("b")}).has_value());
    EXPECT_FALSE(invert_automorphism({parse_word("ab"), parse_word("ba")}).has_value());
}
