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

#include <string>
#include <vector>

#include "arrtwist/chain/complex.hpp"
#include "arrtwist/fox/group_ring.hpp"

namespace arrtwist::fox {

class GroupPresentation {
  public:
    // A meridian-marked presentation has relators with zero exponent sums,
    // so that H_1 is free on the generators.
    static GroupPresentation create(std::size_t generators, std::vector<FreeWord> relators,
                                    bool meridians = false, std::vector<std::string> names = {});
    // <x_1..x_n | [x_i, x_j], i < j>, meridian-marked.
    static GroupPresentation free_abelian(std::size_t n);

    std::size_t generators() const { return generators_; }
    const std::vector<FreeWord>& relators() const { return relators_; }
    bool meridians() const { return meridians_; }
    const std::vector<std::string>& names() const { return names_; }

  private:
    std::size_t generators_ = 0;
    std::vector<FreeWord> relators_;
    bool meridians_ = false;
    std::vector<std::string> names_;
};

// Default generator names a, b, c, ... (x1, x2, ... beyond 26).
std::vector<std::string> default_names(std::size_t n);

// R <- R^n <- R^m with d1 = (u_j - 1) and d2(j, k) = specialize(d r_k / d x_j).
chain::FreeChainComplex alexander_complex(const GroupPresentation& p, const std::vector<algebra::Scalar>& units);

}  // namespace arrtwist::fox
