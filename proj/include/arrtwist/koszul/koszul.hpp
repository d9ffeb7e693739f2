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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrtwist/arrangement/arrangement.hpp"
#include "arrtwist/chain/complex.hpp"

namespace arrtwist::koszul {

using algebra::Matrix;
using algebra::Ring;
using algebra::Scalar;
using arrangement::Arrangement;
using arrangement::Character;
using chain::FreeChainComplex;
using chain::HomologyGroup;

// Action of the meridians x_1..x_n of Z^n on a free module of rank d.
// Rank one assignments are 1x1 matrices.
struct UnitAssignment {
    Ring ring;
    std::size_t module_rank = 1;
    std::vector<Matrix> units;

    static UnitAssignment scalars(const Ring& ring, const std::vector<Scalar>& units);
    // Square matrices with unit determinant, pairwise commuting.
    static UnitAssignment matrices(const Ring& ring, std::vector<Matrix> units);
    // x_i -> t^{gamma_i} over a Laurent ring, zeta_d^{gamma_i} over Q(zeta_d),
    // value^{gamma_i} over any other ring when a value is given, 1 otherwise.
    static UnitAssignment from_character(const Character& ch, const Ring& ring,
                                         const std::optional<Scalar>& value = std::nullopt);

    std::size_t n() const { return units.size(); }
};

// q-subsets of {0..n-1} as bitmasks, in colex order.
std::vector<std::uint64_t> colex_subsets(std::size_t n, std::size_t q);

struct KoszulComplex {
    FreeChainComplex complex;
    std::vector<std::vector<std::uint64_t>> basis;  // per degree, colex subsets
};

// Degrees 0..min(top, n); d(e_I (x) v) = sum_r (-1)^{r-1} e_{I - i_r} (x) (U_{i_r}^{-1} - 1) v.
KoszulComplex build_koszul(const UnitAssignment& u, std::size_t top_degree);

struct RangeHomology {
    std::optional<int> girth;
    std::size_t degrees = 0;  // H_q is reported for q < degrees
    std::vector<HomologyGroup> groups;
    std::string note;
};

// Homology of the complement in the range q < girth - 2, where it agrees
// with that of Z^n.
RangeHomology generic_range_homology(const Arrangement& a, const UnitAssignment& u);

struct CompleteHomology {
    std::vector<HomologyGroup> groups;  // degrees 0 .. r-1; zero above
    long top_rank_kernel = 0;           // rank of ker d_{r-1}
    long top_rank_formula = 0;          // (-1)^{r-1} (d chi - kappa)
    long kappa = 0;
    long euler_characteristic = 0;
};

CompleteHomology complete_homology_generic_position(const Arrangement& a, const UnitAssignment& u);

struct PiPresentation {
    int p = 0;
    Matrix presentation;  // d_{p+2}: C_{p+2} -> C_{p+1}
    HomologyGroup cokernel;
};

// Presentation of the character-abelianized p-th homotopy group, p = r - 1,
// over K[t, t^-1].
PiPresentation pi_p_presentation_boolean(const Arrangement& a, const Character& ch, const Ring& laurent);

}  // namespace arrtwist::koszul
