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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arrtwist/algebra/ring.hpp"

namespace arrtwist::algebra {

class Scalar;

// Element of Q(zeta_d): coefficients of 1, z, ..., z^(phi(d)-1).
struct CyclotomicValue {
    std::vector<mpq_class> coeffs;
};

// Element of K[t, t^-1]: sum of coeffs[i] * t^(valuation + i).
// Trimmed so that both end coefficients are nonzero; zero has no coefficients.
struct LaurentValue {
    long valuation = 0;
    std::vector<Scalar> coeffs;
};

class Scalar {
  public:
    Scalar();  // the integer 0

    static Scalar zero(const Ring& ring);
    static Scalar one(const Ring& ring);
    static Scalar from_integer(const Ring& ring, const mpz_class& value);
    static Scalar from_integer(const Ring& ring, long value) {
        return from_integer(ring, mpz_class(value));
    }
    // Throws NotInvertible when the denominator has no inverse in the ring.
    static Scalar from_rational(const Ring& ring, const mpq_class& value);
    // Primitive d-th root of unity in Q(zeta_d), or in a Laurent ring over it.
    static Scalar zeta(const Ring& ring);
    static Scalar t_power(const Ring& ring, long exponent);
    static Scalar monomial(const Ring& ring, const Scalar& coeff, long exponent);
    static Scalar cyclotomic(const Ring& ring, std::vector<mpq_class> coeffs);
    static Scalar laurent(const Ring& ring, long valuation, std::vector<Scalar> coeffs);

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    std::string to_string() const;

    const mpz_class& integer_value() const;
    const mpq_class& rational_value() const;
    std::uint64_t residue() const;
    const std::vector<mpq_class>& cyclotomic_coeffs() const;
    long valuation() const;
    long top_degree() const;  // largest exponent of a Laurent element
    const std::vector<Scalar>& laurent_coeffs() const;
    // Coefficient of t^e in a Laurent element.
    Scalar coefficient(long exponent) const;

  private:
    Scalar(Ring ring, std::variant<mpz_class, mpq_class, std::uint64_t, CyclotomicValue,
                                   LaurentValue> value);

    Ring ring_;
    std::variant<mpz_class, mpq_class, std::uint64_t, CyclotomicValue, LaurentValue> value_;
};

// Euclidean structure on Z, fields and Laurent rings over fields.
// Size is |a| on Z, the degree span on Laurent rings and 0 on field units.
mpz_class euclidean_size(const Scalar& a);
std::pair<Scalar, Scalar> divmod(const Scalar& a, const Scalar& b);
// Throws NotInvertible when b does not divide a.
Scalar exact_quotient(const Scalar& a, const Scalar& b);
bool divides(const Scalar& b, const Scalar& a);

// Canonical representative of the unit orbit: nonnegative on Z, 1 for field
// units, valuation 0 and leading coefficient 1 on Laurent rings.
Scalar normalized(const Scalar& a);
// The unit u with a = u * normalized(a); one for zero.
Scalar unit_part(const Scalar& a);
Scalar gcd(const Scalar& a, const Scalar& b);
bool associates(const Scalar& a, const Scalar& b);

// Laurent helpers.
Scalar substitute_inverse_variable(const Scalar& a);  // t -> t^-1
Scalar evaluate_at(const Scalar& a, const Scalar& value);  // t -> value in the base field
Scalar change_ring(const Scalar& a, const Ring& target);  // coefficient-wise image

Scalar parse_scalar(std::string_view text, const Ring& ring);

// Ring shared by all elements; throws MixedRings otherwise.
Ring common_ring(std::span<const Scalar> values);

}  // namespace arrtwist::algebra
