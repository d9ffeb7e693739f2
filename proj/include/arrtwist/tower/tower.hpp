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
#include <random>
#include <string>
#include <vector>

#include "arrtwist/chain/complex.hpp"
#include "arrtwist/fox/presentation.hpp"
#include "arrtwist/koszul/koszul.hpp"

namespace arrtwist::tower {

using algebra::Matrix;
using algebra::Ring;
using chain::FreeChainComplex;
using chain::HomologyGroup;
using fox::Endomorphism;
using fox::FreeWord;

// One free factor F_d of pi = F_{d_l} x| ... x| F_{d_2}. Levels are stored
// bottom first. action[y] is the automorphism of this factor induced by
// conjugation with lower generator y (global index), y x y^-1 = action[y](x).
struct TowerLevel {
    std::size_t rank = 0;
    std::vector<std::string> names;
    std::vector<Endomorphism> action;
};

class TowerSpec {
  public:
    // Checks shapes only; missing actions are the identity, missing names are
    // generated (x, y, z, w, ... from the top level down).
    static TowerSpec create(std::vector<TowerLevel> levels);
    // Product of free groups with trivial monodromy; ranks bottom first.
    static TowerSpec direct_product(const std::vector<std::size_t>& ranks);

    const std::vector<TowerLevel>& levels() const { return levels_; }
    std::size_t length() const { return levels_.size(); }
    std::vector<std::size_t> exponents() const;  // d_2 .. d_l
    std::size_t generator_count() const;
    std::size_t offset(std::size_t level) const;
    std::size_t level_of(std::size_t generator) const;
    std::vector<std::string> generator_names() const;  // global order, bottom first

    // Automorphism of level j induced by a word in the generators below j.
    Endomorphism action(std::size_t level, const FreeWord& g) const;

  private:
    std::vector<TowerLevel> levels_;
};

struct TowerViolation {
    std::size_t level = 0;
    std::string generator;
    std::string kind;  // "homology", "relation", "not_automorphism"
    std::string detail;
};

struct TowerReport {
    bool valid = true;
    std::vector<TowerViolation> violations;
};

TowerReport check_tower(const TowerSpec& tw);

// Integer weight per generator, global order (bottom first).
struct TowerCharacter {
    std::vector<long> weights;
};

// t^{nu(g)} J(g)^T, J(g)_{km} = d(alpha(g)(x_k))/dx_m specialized at x -> t^{-nu(x)}.
Matrix jacobian_rep(const TowerSpec& tw, std::size_t level, const FreeWord& g, const TowerCharacter& ch,
                    const Ring& laurent);

// Character-specialized equivariant complex of the tower in degrees 0..length.
FreeChainComplex build_tower_complex(const TowerSpec& tw, const TowerCharacter& ch, const Ring& laurent);

std::vector<HomologyGroup> tor_groups(const TowerSpec& tw, const TowerCharacter& ch, std::size_t max_q,
                                      const Ring& laurent);

koszul::PiPresentation pi_p_presentation_fibertype(const TowerSpec& tw, int p, const TowerCharacter& ch,
                                                   const Ring& laurent);

// Generators are all x's; relators y x y^-1 alpha(y)(x)^-1.
fox::GroupPresentation standard_presentation(const TowerSpec& tw);

// Coefficients of prod_j (1 + d_j T).
std::vector<long> poincare_coefficients(const std::vector<std::size_t>& exponents);

// (-1)^{r-1} [chi - sum_q (-1)^q tor_q], q = 0..r; missing ranks count as zero.
long rank_formula_general(long chi, int r, const std::vector<long>& tor_ranks);

struct NonresonantRank {
    long value = 0;
    std::string case_name;                   // "r+1<m" or "r+1=m"
    std::optional<long> betti_from_exponents;  // T^r coefficient of prod (1 + d_j T)
    std::optional<long> exponent_product;      // prod d_j
};

NonresonantRank rank_formula_nonresonant(long chi, int r, int m, std::optional<long> b_r_pi,
                                         const std::optional<std::vector<std::size_t>>& exponents = std::nullopt);

struct RandomTowerOptions {
    std::size_t max_levels = 3;
    std::size_t max_rank = 3;
    std::size_t max_word_length = 6;
};

// Valid tower built from inner automorphisms and partial conjugations.
TowerSpec random_tower(std::mt19937_64& rng, const RandomTowerOptions& options = {});

}  // namespace arrtwist::tower
