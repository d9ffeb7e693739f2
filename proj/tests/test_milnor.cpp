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

#include "arrtwist/error.hpp"
#include "arrtwist/milnor/milnor.hpp"

using namespace arrtwist;
using namespace arrtwist::milnor;
using fox::GroupPresentation;
using fox::parse_word;

TEST(Obstruction, PaperSpectra) {
    auto five = obstruction_report(MilnorSpectrum::create(5, {5, 0, 1, 0, 1, 0}));
    EXPECT_EQ(five.b1_total, 7);
    EXPECT_FALSE(five.divides);
    EXPECT_FALSE(five.constant_tail);
    EXPECT_EQ(five.verdict, "obstructed");
    auto eight = obstruction_report(MilnorSpectrum::create(8, {8, 0, 0, 1, 0, 0, 1, 0, 0}));
    EXPECT_EQ(eight.b1_total, 10);
    EXPECT_FALSE(eight.divides);
    EXPECT_EQ(eight.verdict, "obstructed");
    auto pencil = obstruction_report(MilnorSpectrum::create(2, {2, 1, 1}));
    EXPECT_TRUE(pencil.constant_tail);
    EXPECT_TRUE(pencil.divides);
    EXPECT_EQ(pencil.verdict, "not obstructed");
    // Non-constant tail with a divisible total is still obstructed.
    auto tail = obstruction_report(MilnorSpectrum::create(4, {4, 2, 0, 0, 2}));
    EXPECT_FALSE(tail.constant_tail);
    EXPECT_TRUE(tail.divides);
    EXPECT_EQ(tail.verdict, "obstructed");
}

TEST(Obstruction, SpectrumValidation) {
    EXPECT_THROW(MilnorSpectrum::create(2, {2, 1}), Error);
    EXPECT_THROW(MilnorSpectrum::create(2, {3, 1, 1}), Error);
    EXPECT_THROW(MilnorSpectrum::create(3, {3, 1, 0, 0}), Error);
    EXPECT_THROW(MilnorSpectrum::create(2, {2, -1, -1}), Error);
}

TEST(Spectrum, Pencil) {
    auto s = spectrum_from_presentation(GroupPresentation::create(2, {}, true));
    EXPECT_EQ(s.values, (std::vector<long>{2, 1, 1}));
    EXPECT_EQ(s.b1_total, 4);
    // Euler characteristic oracle: chi(F) = 3 chi(M) = 3 (1 - 2) = -3, b_0(F) = 1, so b_1(F) = 4.
    EXPECT_EQ(1 - s.b1_total, 3 * (1 - 2));
    EXPECT_EQ(obstruction_report(s).verdict, "not obstructed");
}

TEST(Spectrum, GenericLinesAndCircle) {
    auto z2 = spectrum_from_presentation(GroupPresentation::free_abelian(2));
    EXPECT_EQ(z2.values, (std::vector<long>{2, 0, 0}));
    auto z1 = spectrum_from_presentation(GroupPresentation::create(1, {}, true));
    EXPECT_EQ(z1.values, (std::vector<long>{1, 0}));
    // Generic arrangements: Z^n, only constant coefficients contribute.
    for (std::size_t n = 3; n <= 4; ++n) {
        auto s = spectrum_from_presentation(GroupPresentation::free_abelian(n));
        EXPECT_EQ(s.b1_total, static_cast<long>(n));
    }
}

TEST(Spectrum, TietzeInvariance) {
    // Conjugating, inverting and adding consequences of relators keeps the meridians.
    auto p1 = GroupPresentation::free_abelian(3);
    std::vector<fox::FreeWord> rel;
    for (const auto& r : p1.relators()) {
        fox::FreeWord c = parse_word("cab");
        rel.push_back(c * r.inverse() * c.inverse());
    }
    rel.push_back(rel[0] * rel[1]);
    auto p2 = GroupPresentation::create(3, rel, true);
    EXPECT_EQ(spectrum_from_presentation(p1).values, spectrum_from_presentation(p2).values);
    auto pencil3 = GroupPresentation::create(3, {parse_word("abca-1b-1c-1"), parse_word("bcab-1c-1a-1")}, true);
    auto conj = GroupPresentation::create(
        3, {parse_word("b") * parse_word("abca-1b-1c-1") * parse_word("b-1"), parse_word("bcab-1c-1a-1")}, true);
    EXPECT_EQ(spectrum_from_presentation(pencil3).values, spectrum_from_presentation(conj).values);
}

TEST(Spectrum, RequiresMeridians) {
    try {
        spectrum_from_presentation(GroupPresentation::create(2, {}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotMeridianMarked);
    }
}
