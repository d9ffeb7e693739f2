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

#include "arrtwist/arrangement/arrangement.hpp"
#include "arrtwist/error.hpp"

using namespace arrtwist;
using namespace arrtwist::arrangement;

namespace {

Arrangement from_ints(int r, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<mpq_class>> forms;
    for (const auto& row : rows) {
        forms.emplace_back();
        for (long v : row) forms.back().push_back(mpq_class(v));
    }
    return Arrangement::create(r, forms);
}

Arrangement near_pencil() { return from_ints(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}); }
Arrangement pencil() { return from_ints(2, {{1, 0}, {0, 1}, {1, 1}}); }

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<int>> index_lists(const std::vector<Flat>& flats) {
    std::vector<std::vector<int>> out;
    for (const auto& f : flats) out.push_back(f.indices());
    return out;
}

// Brute-force matroid connectivity: no split into two nonempty parts with
// additive rank.
bool splits(const Arrangement& a, const Flat& f) {
    std::vector<int> idx = f.indices();
    int total = a.rank_of(f.mask);
    for (std::uint64_t part = 1; part + 1 < (std::uint64_t(1) << idx.size()); ++part) {
        std::uint64_t p1 = 0, p2 = 0;
        for (std::size_t k = 0; k < idx.size(); ++k)
            ((part >> k) & 1u ? p1 : p2) |= std::uint64_t(1) << idx[k];
        if (a.rank_of(p1) + a.rank_of(p2) == total) return true;
    }
    return false;
}

}  // namespace

TEST(Arrangement, Validation) {
    EXPECT_THROW(from_ints(2, {{1, 0}, {2, 0}}), Error);
    EXPECT_THROW(from_ints(2, {{1, 0}, {0, 0}}), Error);
    EXPECT_THROW(from_ints(2, {{1, 0, 0}, {0, 1}}), Error);
    EXPECT_TRUE(from_ints(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}).rank() == 2);
}

TEST(Lattice, ThreeGenericLines) {
    auto flats = intersection_lattice(Arrangement::generic(3, 3));
    std::vector<std::vector<int>> expected = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    EXPECT_EQ(index_lists(flats), expected);
    EXPECT_EQ(flats[3].codim, 2);
}

TEST(Lattice, PencilProjectiveAndCone) {
    EXPECT_EQ(index_lists(intersection_lattice(pencil())),
              (std::vector<std::vector<int>>{{0}, {1}, {2}}));
    auto cone = intersection_lattice(pencil(), LatticeScope::Cone);
    EXPECT_EQ(cone.back().indices(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(cone.back().codim, 2);
}

TEST(Lattice, BooleanIsAllProperSubsets) {
    for (std::size_t m = 2; m <= 5; ++m) {
        auto flats = intersection_lattice(Arrangement::boolean(m));
        EXPECT_EQ(flats.size(), (std::size_t(1) << m) - 2);
        for (const auto& f : flats) EXPECT_EQ(static_cast<std::size_t>(f.codim), f.size());
    }
}

TEST(Girth, Examples) {
    EXPECT_FALSE(girth(Arrangement::generic(3, 3)).has_value());
    EXPECT_EQ(girth(Arrangement::generic(4, 3)), 4);
    EXPECT_EQ(girth(near_pencil()), 3);
    EXPECT_EQ(girth(Arrangement::generic(6, 4)), 5);
    EXPECT_FALSE(girth(Arrangement::boolean(5)).has_value());
}

TEST(DenseEdges, Examples) {
    EXPECT_EQ(index_lists(dense_edges(Arrangement::boolean(4))),
              (std::vector<std::vector<int>>{{0}, {1}, {2}, {3}}));
    auto cone = dense_edges(pencil(), LatticeScope::Cone);
    EXPECT_EQ(cone.back().indices(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(dense_edges(Arrangement::generic(3, 3)).size(), 3u);
    auto np = index_lists(dense_edges(near_pencil()));
    EXPECT_EQ(np, (std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {0, 1, 2}}));
}

TEST(DenseEdges, AgreeWithBruteForcePartitions) {
    std::vector<Arrangement> fixtures = {
        near_pencil(), pencil(), Arrangement::generic(5, 3), Arrangement::boolean(4),
        // braid arrangement A_3: x_i - x_j in C^4, plus a generic extra
        from_ints(4, {{1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}, {0, 1, -1, 0}, {0, 1, 0, -1},
                      {0, 0, 1, -1}, {1, 2, 3, 5}})};
    for (const auto& a : fixtures) {
        auto dense = dense_edges(a, LatticeScope::Cone);
        for (const auto& f : intersection_lattice(a, LatticeScope::Cone)) {
            if (f.mask == 0) continue;
            bool is_dense = std::find(dense.begin(), dense.end(), f) != dense.end();
            EXPECT_EQ(is_dense, !splits(a, f));
        }
    }
}

TEST(Nonresonance, Examples) {
    auto b = Arrangement::boolean(4);
    EXPECT_TRUE(nonresonance(b, Character::create({-3, 1, 1, 1})).nonresonant);
    auto r = nonresonance(b, Character::create({0, 1, -1, 0}));
    EXPECT_FALSE(r.nonresonant);
    ASSERT_TRUE(r.violation.has_value());
    EXPECT_EQ(r.violation->indices(), (std::vector<int>{0}));
    EXPECT_FALSE(nonresonance(near_pencil(), Character::trivial(4)).nonresonant);
    EXPECT_TRUE(nonresonance(Arrangement::generic(5, 3), Character::create({-4, 1, 1, 1, 1})).nonresonant);
    try {
        nonresonance(b, Character{{1, 1, 1, 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidCharacter);
    }
}

TEST(Nonresonance, SearchFindsCharacters) {
    for (const auto& a : {near_pencil(), Arrangement::generic(5, 3), Arrangement::boolean(3), pencil()}) {
        auto ch = find_nonresonant_character(a);
        ASSERT_TRUE(ch.has_value());
        EXPECT_TRUE(nonresonance(a, *ch).nonresonant);
    }
}

TEST(Betti, GenericArrangementsAreBinomial) {
    for (int r = 2; r <= 5; ++r)
        for (std::size_t m = r + 1; m <= 8; ++m) {
            auto data = betti_data(Arrangement::generic(m, r));
            long n = static_cast<long>(m) - 1, chi = 0;
            for (int q = 0; q < r; ++q) {
                EXPECT_EQ(data.betti[q], binomial(n, q)) << "m=" << m << " r=" << r << " q=" << q;
                chi += (q % 2 ? -1 : 1) * binomial(n, q);
            }
            EXPECT_EQ(data.euler_characteristic, chi);
        }
}

TEST(Betti, Examples) {
    auto five = betti_data(Arrangement::generic(5, 3));
    EXPECT_EQ(five.betti, (std::vector<long>{1, 4, 6}));
    EXPECT_EQ(five.euler_characteristic, 3);
    auto p = betti_data(pencil());
    EXPECT_EQ(p.betti, (std::vector<long>{1, 2}));
    EXPECT_EQ(p.euler_characteristic, -1);
    // Two parallel lines and a transversal in C^2: (1 + 2T)(1 + T).
    auto np = betti_data(near_pencil());
    EXPECT_EQ(np.betti, (std::vector<long>{1, 3, 2}));
    EXPECT_EQ(np.euler_characteristic, 0);
    // Boolean: complement is a torus (C*)^n.
    EXPECT_EQ(betti_data(Arrangement::boolean(4)).betti, (std::vector<long>{1, 3, 3, 1}));
    EXPECT_THROW(betti_data(from_ints(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})), Error);
}

TEST(Profile, Examples) {
    auto p = generic_position_profile(Arrangement::generic(4, 3));
    EXPECT_EQ(p.p, 2);
    EXPECT_TRUE(p.generic_position);
    p = generic_position_profile(Arrangement::boolean(4));
    EXPECT_FALSE(p.p.has_value());
    EXPECT_FALSE(p.generic_position);
    p = generic_position_profile(Arrangement::generic(6, 4));
    EXPECT_EQ(p.p, 3);
    EXPECT_TRUE(p.generic_position);
    try {
        generic_position_profile(near_pencil());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GirthTooSmall);
        EXPECT_EQ(classify(e.code()), ErrorClass::Refusal);
    }
}
