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

#include "arrtwist/fox/presentation.hpp"

namespace arrtwist::milnor {

// b_1^t(F) for t = 0..n, where n + 1 is the number of hyperplanes.
struct MilnorSpectrum {
    std::size_t n = 0;
    std::vector<long> values;
    long b1_total = 0;

    // Checks length n + 1, nonnegativity, b_1^0 = n and b_1^t = b_1^{n+1-t}.
    static MilnorSpectrum create(std::size_t n, std::vector<long> values);
};

// Over Q(zeta_{n+1}) with x_i -> zeta^t for t >= 1, over Q with trivial
// coefficients for t = 0.
MilnorSpectrum spectrum_from_presentation(const fox::GroupPresentation& p);

struct ObstructionReport {
    std::size_t n = 0;
    long b1_total = 0;
    bool constant_tail = false;  // b_1^t independent of 1 <= t <= n
    bool divides = false;        // n | b_1(F)
    bool obstructed = false;
    std::string verdict;  // "obstructed" or "not obstructed"
    std::string certificate;
};

ObstructionReport obstruction_report(const MilnorSpectrum& s);

}  // namespace arrtwist::milnor
