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

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arrtwist/algebra/scalar.hpp"
#include "arrtwist/fox/free_group.hpp"

namespace arrtwist::fox {

// Element of the integral group ring of a free group; zero coefficients are never stored.
class GroupRingElement {
  public:
    GroupRingElement() = default;
    explicit GroupRingElement(const FreeWord& w, const mpz_class& c = 1);
    static GroupRingElement one() { return GroupRingElement(FreeWord{}); }

    const std::map<FreeWord, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coefficient(const FreeWord& w) const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator-(const GroupRingElement& a);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const mpz_class& c, const GroupRingElement& a);
    bool operator==(const GroupRingElement&) const = default;

    std::string to_string() const;

  private:
    void add_term(const FreeWord& w, const mpz_class& c);
    std::map<FreeWord, mpz_class> terms_;
};

// Linear extension of a substitution to the group ring.
GroupRingElement substitute(const Endomorphism& f, const GroupRingElement& e);

// Left Fox derivative d w / d x_i.
GroupRingElement fox_derivative(const FreeWord& w, int i);

// Ring homomorphism sending x_j to units[j].
algebra::Scalar specialize(const GroupRingElement& e, const std::vector<algebra::Scalar>& units);
algebra::Scalar specialize(const FreeWord& w, const std::vector<algebra::Scalar>& units);

}  // namespace arrtwist::fox
