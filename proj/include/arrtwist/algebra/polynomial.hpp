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

#include <string>
#include <utility>
#include <vector>

namespace arrtwist::algebra {

// Dense polynomial over Q, coefficient of x^i at index i, no trailing zeros.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial
QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b);
// Returns (g, s) with s*a = g mod b, g the monic gcd.
std::pair<QPoly, QPoly> poly_gcdinv(const QPoly& a, const QPoly& b);
std::string poly_to_string(const QPoly& p, const std::string& var = "x");

// Phi_d, from x^d - 1 divided by Phi_e for the proper divisors e of d.
// Cached; safe to call from several threads.
const QPoly& cyclotomic_poly(int d);
int euler_phi(int d);

}  // namespace arrtwist::algebra
