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

#include <random>
#include <string>

#include "arrtwist/algebra/scalar.hpp"

namespace test_support {

// Random Laurent polynomial with small integer coefficients and span <= span.
inline arrtwist::algebra::Scalar random_laurent(std::mt19937_64& rng,
                                                const arrtwist::algebra::Ring& ring, int span) {
    using arrtwist::algebra::Scalar;
    long valuation = static_cast<long>(rng() % 5) - 2;
    std::vector<Scalar> c;
    int len = 1 + static_cast<int>(rng() % (span + 1));
    for (int i = 0; i < len; ++i)
        c.push_back(Scalar::from_integer(ring.base(), static_cast<long>(rng() % 7) - 3));
    return Scalar::laurent(ring, valuation, std::move(c));
}

inline std::string data_path(const std::string& name) {
    return std::string(ARRTWIST_DATA_DIR) + "/" + name;
}

}  // namespace test_support

#include "arrtwist/algebra/matrix.hpp"

namespace test_support {

// Product of random elementary operations; determinant is a unit.
inline arrtwist::algebra::Matrix random_unimodular(std::mt19937_64& rng,
                                                   const arrtwist::algebra::Ring& ring,
                                                   std::size_t n, int steps = 8) {
    using namespace arrtwist::algebra;
    Matrix m = Matrix::identity(ring, n);
    if (n == 0) return m;
    for (int k = 0; k < steps; ++k) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i != j) {
            Scalar f = ring.is_laurent()
                           ? Scalar::monomial(ring, Scalar::from_integer(ring.base(), long(rng() % 5) - 2),
                                              long(rng() % 3) - 1)
                           : Scalar::from_integer(ring, long(rng() % 5) - 2);
            m.add_row_multiple(i, j, f);
        } else {
            Scalar u = ring.is_laurent() ? Scalar::t_power(ring, long(rng() % 3) - 1)
                                         : Scalar::from_integer(ring, -1);
            m.scale_row(i, u);
        }
        if (rng() % 3 == 0) m.swap_rows(rng() % n, rng() % n);
    }
    return m;
}

}  // namespace test_support
