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


#include "arrtwist/fox/presentation.hpp"

#include "arrtwist/error.hpp"

namespace arrtwist::fox {

using algebra::Matrix;
using algebra::Scalar;

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
    return names;
}

GroupPresentation GroupPresentation::create(std::size_t generators, std::vector<FreeWord> relators,
                                            bool meridians, std::vector<std::string> names) {
    if (generators == 0) throw Error(ErrorCode::InvalidInput, "a presentation needs at least one generator");
    if (names.empty()) names = default_names(generators);
    if (names.size() != generators)
        throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(generators) + " generator names");
    for (std::size_t k = 0; k < relators.size(); ++k) {
        if (relators[k].max_generator() >= static_cast<int>(generators))
            throw Error(ErrorCode::InvalidInput, "relator " + std::to_string(k + 1) + " uses an unknown generator");
        if (meridians)
            for (std::size_t g = 0; g < generators; ++g)
                if (relators[k].exponent_sum(static_cast<int>(g)) != 0)
                    throw Error(ErrorCode::NotMeridianMarked,
                                "relator " + relators[k].to_string(names) + " has nonzero exponent sum in " +
                                    names[g] + "; H_1 would not be free on the meridians");
    }
    GroupPresentation p;
    p.generators_ = generators;
    p.relators_ = std::move(relators);
    p.meridians_ = meridians;
    p.names_ = std::move(names);
    return p;
}

GroupPresentation GroupPresentation::free_abelian(std::size_t n) {
    std::vector<FreeWord> rel;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            FreeWord a = FreeWord::generator(static_cast<int>(i)), b = FreeWord::generator(static_cast<int>(j));
            rel.push_back(a * b * a.inverse() * b.inverse());
        }
    return create(n, std::move(rel), true);
}

chain::FreeChainComplex alexander_complex(const GroupPresentation& p, const std::vector<Scalar>& units) {
    std::size_t n = p.generators(), m = p.relators().size();
    if (units.size() != n)
        throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(n) + " units, got " +
                                                 std::to_string(units.size()));
    const algebra::Ring R = units[0].ring();
    for (const auto& u : units) {
        if (!(u.ring() == R)) throw Error(ErrorCode::MixedRings, "units from different rings");
        if (!u.is_unit()) throw Error(ErrorCode::NotInvertible, u.to_string() + " is not a unit");
    }
    for (const auto& r : p.relators())
        if (!specialize(r, units).is_one())
            throw Error(ErrorCode::RelatorNotKilled,
                        "relator " + r.to_string(p.names()) + " does not specialize to 1");
    Matrix d1(R, 1, n), d2(R, n, m);
    for (std::size_t j = 0; j < n; ++j) d1(0, j) = units[j] - Scalar::one(R);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j)
            d2(j, k) = specialize(fox_derivative(p.relators()[k], static_cast<int>(j)), units);
    return chain::FreeChainComplex::create(R, {1, n, m}, {std::move(d1), std::move(d2)});
}

}  // namespace arrtwist::fox
