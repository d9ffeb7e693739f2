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
#include <string>
#include <string_view>

namespace arrtwist::algebra {

enum class RingKind : std::uint8_t { Integer, Rational, PrimeField, Cyclotomic, Laurent };

// Value description of a coefficient ring. Laurent rings are one variable
// t over a field: Q, F_p or Q(zeta_d).
class Ring {
  public:
    Ring() = default;

    static Ring integers();
    static Ring rationals();
    static Ring prime_field(std::uint64_t p);
    static Ring cyclotomic(int d);
    static Ring laurent(const Ring& base);

    // Accepts "Z", "Q", "F7", "Q(z3)", "Q[t,t^-1]", "F7[t,t^-1]",
    // "Q(z3)[t,t^-1]" and the short forms "laurent", "laurent:F7",
    // "cyclotomic:3", "q".
    static Ring parse(std::string_view text);

    RingKind kind() const { return kind_; }
    // Coefficient field of a Laurent ring; the ring itself otherwise.
    Ring base() const;
    std::uint64_t modulus() const { return modulus_; }
    int order() const { return order_; }

    bool is_field() const;
    bool is_laurent() const { return kind_ == RingKind::Laurent; }
    // Z, fields and Laurent rings over fields; the only rings with Smith forms here.
    bool is_euclidean() const { return true; }

    std::string name() const;

    friend bool operator==(const Ring&, const Ring&) = default;

  private:
    RingKind kind_ = RingKind::Integer;
    RingKind base_kind_ = RingKind::Integer;
    std::uint64_t modulus_ = 0;
    int order_ = 0;
};

bool is_prime(std::uint64_t p);

}  // namespace arrtwist::algebra
