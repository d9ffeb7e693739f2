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

#include <optional>
#include <string>
#include <vector>

#include "arrtwist/algebra/matrix.hpp"

namespace arrtwist::chain {

using algebra::Matrix;
using algebra::Ring;
using algebra::Scalar;

// 0 <- C_0 <- C_1 <- ... <- C_top, each C_q free of the given rank.
class FreeChainComplex {
  public:
    FreeChainComplex() = default;

    // boundaries[q - 1] is d_q : C_q -> C_{q-1}, of shape ranks[q-1] x ranks[q].
    // Throws InvalidComplex on shape mismatch or d o d != 0.
    static FreeChainComplex create(Ring ring, std::vector<std::size_t> ranks,
                                   std::vector<Matrix> boundaries);

    const Ring& ring() const { return ring_; }
    std::size_t top_degree() const { return ranks_.size() - 1; }
    std::size_t rank(std::size_t q) const { return q < ranks_.size() ? ranks_[q] : 0; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    // d_q for 1 <= q <= top; a zero matrix of the right shape otherwise.
    Matrix boundary(std::size_t q) const;

    // Degrees 0..top of this complex, with d_{top+1} dropped.
    FreeChainComplex truncate(std::size_t top) const;

  private:
    Ring ring_;
    std::vector<std::size_t> ranks_;
    std::vector<Matrix> boundaries_;
};

struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Scalar> torsion;  // normalized non-unit invariant factors

    bool operator==(const HomologyGroup&) const = default;
    std::string to_string() const;
};

HomologyGroup homology(const FreeChainComplex& c, std::size_t q);
std::vector<HomologyGroup> homology_all(const FreeChainComplex& c);

// Cokernel of a presentation matrix A : R^cols -> R^rows.
HomologyGroup cokernel(const Matrix& a);

struct IsomorphismReport {
    bool isomorphic = false;
    std::string reason;
    // Normalized nonzero invariant factors of each d_q, q = 1..top.
    std::vector<std::vector<Scalar>> divisors_a, divisors_b;
    // Chain isomorphism f_q : C_q -> C'_q with f_{q-1} d_q = d'_q f_q.
    std::optional<std::vector<Matrix>> witness;
};

// Chain-isomorphism test for bounded free complexes over a PID: equal ranks
// and, degreewise, equal Smith invariants of the differentials.
IsomorphismReport decide_isomorphic(const FreeChainComplex& a, const FreeChainComplex& b,
                                    bool want_witness = false);

long euler_characteristic(const FreeChainComplex& c);

}  // namespace arrtwist::chain
