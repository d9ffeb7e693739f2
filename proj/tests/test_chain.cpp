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

#include "arrtwist/chain/complex.hpp"
#include "arrtwist/error.hpp"
#include "test_support.hpp"

using namespace arrtwist;
using namespace arrtwist::algebra;
using namespace arrtwist::chain;

namespace {

const Ring ZZ = Ring::integers();
const Ring LQ = Ring::laurent(Ring::rationals());

Scalar L(const char* s) { return parse_scalar(s, LQ); }

// Conjugates every differential by random unimodular changes of basis.
FreeChainComplex scramble(const FreeChainComplex& c, std::mt19937_64& rng) {
    std::vector<Matrix> g, ginv;
    for (std::size_t q = 0; q <= c.top_degree(); ++q) {
        g.push_back(test_support::random_unimodular(rng, c.ring(), c.rank(q)));
        ginv.push_back(*inverse(g.back()));
    }
    std::vector<Matrix> d;
    for (std::size_t q = 1; q <= c.top_degree(); ++q) d.push_back(g[q - 1] * c.boundary(q) * ginv[q]);
    return FreeChainComplex::create(c.ring(), c.ranks(), d);
}

void expect_witness(const FreeChainComplex& a, const FreeChainComplex& b) {
    auto r = decide_isomorphic(a, b, true);
    ASSERT_TRUE(r.isomorphic) << r.reason;
    ASSERT_TRUE(r.witness.has_value());
    const auto& f = *r.witness;
    for (std::size_t q = 0; q <= a.top_degree(); ++q) EXPECT_TRUE(determinant(f[q]).is_unit());
    for (std::size_t q = 1; q <= a.top_degree(); ++q)
        EXPECT_EQ(f[q - 1] * a.boundary(q), b.boundary(q) * f[q]) << "degree " << q;
}

// Three-term complex R^2 <- R^3 <- R^1 built from a scalar a and b in the
// middle; the homology is readable by hand.
FreeChainComplex sample(const Scalar& a, const Scalar& b) {
    const Ring& R = a.ring();
    Matrix d1(R, 2, 3), d2(R, 3, 1);
    d1(0, 0) = a;
    d1(1, 1) = b;
    d2(2, 0) = b;
    return FreeChainComplex::create(R, {2, 3, 1}, {d1, d2});
}

}  // namespace

TEST(Homology, IntegerExamples) {
    auto c = FreeChainComplex::create(ZZ, {1, 1}, {Matrix::from_integers(ZZ, {{2}})});
    auto h0 = homology(c, 0);
    EXPECT_EQ(h0.free_rank, 0u);
    ASSERT_EQ(h0.torsion.size(), 1u);
    EXPECT_EQ(h0.torsion[0].to_string(), "2");
    EXPECT_EQ(homology(c, 1).free_rank, 0u);
    EXPECT_THROW(homology(c, 2), Error);
}

TEST(Homology, LaurentCircle) {
    auto c = FreeChainComplex::create(LQ, {1, 1}, {Matrix::from_rows(LQ, {{L("t - 1")}})});
    auto h0 = homology(c, 0);
    ASSERT_EQ(h0.torsion.size(), 1u);
    EXPECT_EQ(h0.torsion[0], L("t - 1"));
    EXPECT_EQ(homology(c, 1).free_rank, 0u);
}

TEST(Homology, HandComputedSample) {
    auto c = sample(L("t - 1"), L("t^2 - 1"));
    auto h = homology_all(c);
    // H0 = R/(t-1) + R/(t^2-1); H1 = R e_3 / (t^2-1); H2 = 0.
    EXPECT_EQ(h[0].free_rank, 0u);
    EXPECT_EQ(h[0].torsion, (std::vector<Scalar>{L("t - 1"), L("t^2 - 1")}));
    EXPECT_EQ(h[1].free_rank, 0u);
    EXPECT_EQ(h[1].torsion, (std::vector<Scalar>{L("t^2 - 1")}));
    EXPECT_EQ(h[2].free_rank, 0u);
    EXPECT_EQ(euler_characteristic(c), 0);
}

TEST(Complex, RejectsNonComplex) {
    Matrix d1 = Matrix::from_integers(ZZ, {{1}});
    Matrix d2 = Matrix::from_integers(ZZ, {{1}});
    try {
        FreeChainComplex::create(ZZ, {1, 1, 1}, {d1, d2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidComplex);
    }
    EXPECT_THROW(FreeChainComplex::create(ZZ, {1, 2}, {d1}), Error);
}

TEST(Isomorphism, SeparatesTorsion) {
    auto a = FreeChainComplex::create(LQ, {1, 1}, {Matrix::from_rows(LQ, {{L("t - 1")}})});
    auto b = FreeChainComplex::create(LQ, {1, 1}, {Matrix::from_rows(LQ, {{L("t^2 - 1")}})});
    auto c = FreeChainComplex::create(LQ, {1, 1}, {Matrix::from_rows(LQ, {{L("-2*t^-3 + 2*t^-2")}})});
    EXPECT_FALSE(decide_isomorphic(a, b).isomorphic);
    EXPECT_TRUE(decide_isomorphic(a, c).isomorphic);
    expect_witness(a, c);
    auto d = FreeChainComplex::create(LQ, {1, 2}, {Matrix(LQ, 1, 2)});
    EXPECT_FALSE(decide_isomorphic(a, d).isomorphic);
}

TEST(Isomorphism, InvariantUnderUnimodularChanges) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto c = sample(test_support::random_laurent(rng, LQ, 2), test_support::random_laurent(rng, LQ, 2));
        auto c2 = scramble(c, rng);
        auto ha = homology_all(c), hb = homology_all(c2);
        EXPECT_EQ(ha, hb);
        expect_witness(c, c2);
    }
    for (int trial = 0; trial < 25; ++trial) {
        auto c = sample(Scalar::from_integer(ZZ, long(rng() % 9) - 4), Scalar::from_integer(ZZ, long(rng() % 9) - 4));
        auto c2 = scramble(c, rng);
        EXPECT_EQ(homology_all(c), homology_all(c2));
        expect_witness(c, c2);
    }
}

TEST(Cokernel, Presentation) {
    auto h = cokernel(Matrix::from_integers(ZZ, {{2, 0}, {0, 3}, {0, 0}}));
    EXPECT_EQ(h.free_rank, 1u);
    ASSERT_EQ(h.torsion.size(), 1u);
    EXPECT_EQ(h.torsion[0].to_string(), "6");
    EXPECT_EQ(cokernel(Matrix(ZZ, 3, 0)).free_rank, 3u);
}
