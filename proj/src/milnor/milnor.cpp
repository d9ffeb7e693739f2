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


#include "arrtwist/milnor/milnor.hpp"

#include "arrtwist/error.hpp"

namespace arrtwist::milnor {

using algebra::Ring;
using algebra::Scalar;

MilnorSpectrum MilnorSpectrum::create(std::size_t n, std::vector<long> values) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "a spectrum needs n >= 1");
    if (values.size() != n + 1)
        throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(n + 1) + " values b_1^0..b_1^n, got " +
                                                 std::to_string(values.size()));
    for (long v : values)
        if (v < 0) throw Error(ErrorCode::InvalidInput, "Betti numbers are nonnegative");
    if (values[0] != static_cast<long>(n))
        throw Error(ErrorCode::InvalidInput, "b_1^0 must equal n = " + std::to_string(n) + ", got " +
                                                 std::to_string(values[0]));
    for (std::size_t t = 1; t <= n; ++t)
        if (values[t] != values[n + 1 - t])
            throw Error(ErrorCode::InvalidInput, "b_1^" + std::to_string(t) + " != b_1^" +
                                                     std::to_string(n + 1 - t) +
                                                     ": spectra are symmetric under complex conjugation");
    MilnorSpectrum s;
    s.n = n;
    s.values = std::move(values);
    for (long v : s.values) s.b1_total += v;
    return s;
}

MilnorSpectrum spectrum_from_presentation(const fox::GroupPresentation& p) {
    if (!p.meridians())
        throw Error(ErrorCode::NotMeridianMarked,
                    "the presentation must be meridian-marked: generators are meridians of all but one hyperplane");
    std::size_t n = p.generators();
    std::vector<long> values;
    Ring Q = Ring::rationals();
    auto h1 = [&](const std::vector<Scalar>& units) {
        return static_cast<long>(chain::homology(fox::alexander_complex(p, units), 1).free_rank);
    };
    values.push_back(h1(std::vector<Scalar>(n, Scalar::one(Q))));
    Ring K = Ring::cyclotomic(n + 1);
    Scalar u = Scalar::zeta(K);
    for (std::size_t t = 1; t <= n; ++t) values.push_back(h1(std::vector<Scalar>(n, u.pow(static_cast<long>(t)))));
    if (values[0] != static_cast<long>(n))
        throw Error(ErrorCode::Disagreement, "b_1^0 = " + std::to_string(values[0]) + " differs from n = " +
                                                 std::to_string(n));
    for (std::size_t t = 1; t <= n; ++t)
        if (values[t] != values[n + 1 - t])
            throw Error(ErrorCode::Disagreement, "computed spectrum is not conjugation symmetric");
    return MilnorSpectrum::create(n, std::move(values));
}

ObstructionReport obstruction_report(const MilnorSpectrum& s) {
    ObstructionReport r;
    r.n = s.n;
    r.b1_total = s.b1_total;
    r.constant_tail = true;
    for (std::size_t t = 2; t <= s.n; ++t) r.constant_tail = r.constant_tail && s.values[t] == s.values[1];
    r.divides = s.b1_total % static_cast<long>(s.n) == 0;
    if (r.constant_tail && !r.divides)
        throw Error(ErrorCode::Disagreement, "a constant tail forces n | b_1(F)");
    r.obstructed = !r.constant_tail || !r.divides;
    r.verdict = r.obstructed ? "obstructed" : "not obstructed";
    if (r.obstructed) {
        std::string why = !r.divides ? std::to_string(s.n) + " does not divide b_1(F) = " + std::to_string(s.b1_total)
                                     : "b_1^t(F) is not constant for 1 <= t <= " + std::to_string(s.n);
        r.certificate = why + "; for any arrangement realizing this spectrum, the inclusion into the Boolean "
                              "arrangement complement cannot be realized by a cellular map of minimal complexes "
                              "that is the identity on 1-skeleta and a subcomplex inclusion on 2-skeleta";
    } else {
        r.certificate = "no obstruction: the tail is constant and n divides b_1(F); this does not imply that "
                        "the relative minimality problem has a positive answer";
    }
    return r;
}

}  // namespace arrtwist::milnor
