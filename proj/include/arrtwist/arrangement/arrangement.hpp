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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arrtwist::arrangement {

// Projective hyperplane arrangement H_0, ..., H_n in P^{r-1}, given by
// rational linear forms on C^r. H_0 plays the role of the hyperplane at
// infinity, so the meridians are indexed 1..n.
class Arrangement {
  public:
    static Arrangement create(int r, std::vector<std::vector<mpq_class>> forms,
                              std::vector<std::string> labels = {});

    // n+1 hyperplanes in general position: rows of a Vandermonde matrix.
    static Arrangement generic(std::size_t hyperplanes, int r);
    // Coordinate hyperplanes x_0 ... x_n in P^n.
    static Arrangement boolean(std::size_t hyperplanes);

    int r() const { return r_; }
    std::size_t size() const { return forms_.size(); }
    std::size_t n() const { return forms_.size() - 1; }
    const std::vector<std::vector<mpq_class>>& forms() const { return forms_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int rank() const { return rank_; }
    bool essential() const { return rank_ == r_; }

    // Rank of the forms with indices in mask.
    int rank_of(std::uint64_t mask) const;

  private:
    int r_ = 0;
    int rank_ = 0;
    std::vector<std::vector<mpq_class>> forms_;
    std::vector<std::string> labels_;
};

// A flat of the central arrangement: the set of hyperplanes containing an
// intersection, and its codimension.
struct Flat {
    std::uint64_t mask = 0;
    int codim = 0;

    std::vector<int> indices() const;
    bool contains(int i) const { return (mask >> i) & 1u; }
    std::size_t size() const;
    bool operator==(const Flat&) const = default;
};

enum class LatticeScope {
    Projective,  // nonempty projective intersections: codim 1 .. r-1
    Cone,        // every flat of the central arrangement, bottom included
};

// Flats sorted by codimension, then by sorted index list.
std::vector<Flat> intersection_lattice(const Arrangement& a, LatticeScope scope = LatticeScope::Projective);

// Smallest size of a linearly dependent set of forms; nullopt if none is.
std::optional<int> girth(const Arrangement& a);

// Flats whose localization is a connected matroid.
std::vector<Flat> dense_edges(const Arrangement& a, LatticeScope scope = LatticeScope::Projective);

struct Character {
    std::vector<long> weights;  // gamma_0 .. gamma_n, summing to zero

    static Character create(std::vector<long> weights);
    static Character trivial(std::size_t hyperplanes);
};

struct NonresonanceReport {
    bool nonresonant = true;
    std::vector<Flat> checked;       // dense edges contained in H_0
    std::optional<Flat> violation;   // first one whose weight sum vanishes
};

NonresonanceReport nonresonance(const Arrangement& a, const Character& ch);

// Small weights making the arrangement nonresonant, found by search.
std::optional<Character> find_nonresonant_character(const Arrangement& a, long bound = 3);

struct BettiData {
    std::vector<long> betti;  // b_0 .. b_{r-1} of the projective complement
    long euler_characteristic = 0;
};

BettiData betti_data(const Arrangement& a);

struct GenericPositionProfile {
    std::optional<int> girth;
    std::optional<int> p;  // girth - 2; nullopt when the girth is infinite
    bool generic_position = false;
};

GenericPositionProfile generic_position_profile(const Arrangement& a);

}  // namespace arrtwist::arrangement
