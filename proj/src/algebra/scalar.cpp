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

#include "arrtwist/algebra/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "arrtwist/algebra/polynomial.hpp"
#include "arrtwist/error.hpp"

namespace arrtwist::algebra {

namespace {

using u128 = unsigned __int128;

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // Fermat; p is prime.
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * a % p);
        a = static_cast<std::uint64_t>(static_cast<u128>(a) * a % p);
        e >>= 1;
    }
    return r;
}

std::vector<mpq_class> reduce_cyclotomic(QPoly p, int d) {
    const QPoly& phi = cyclotomic_poly(d);
    trim(p);
    if (p.size() >= phi.size()) p = poly_divmod(p, phi).second;
    std::vector<mpq_class> out(phi.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i];
    return out;
}

QPoly as_poly(const std::vector<mpq_class>& c) {
    QPoly p = c;
    trim(p);
    return p;
}

void require_same(const Ring& a, const Ring& b) {
    if (!(a == b))
        throw Error(ErrorCode::MixedRings, "mixed rings: " + a.name() + " and " + b.name());
}

LaurentValue make_laurent(long valuation, std::vector<Scalar> coeffs) {
    std::size_t lo = 0, hi = coeffs.size();
    while (lo < hi && coeffs[lo].is_zero()) ++lo;
    while (hi > lo && coeffs[hi - 1].is_zero()) --hi;
    LaurentValue v;
    if (lo == hi) return v;
    v.valuation = valuation + static_cast<long>(lo);
    v.coeffs.assign(std::make_move_iterator(coeffs.begin() + lo),
                    std::make_move_iterator(coeffs.begin() + hi));
    return v;
}

bool is_composite_text(const Scalar& c) {
    if (c.ring().kind() != RingKind::Cyclotomic) return false;
    int terms = 0;
    for (const auto& q : c.cyclotomic_coeffs())
        if (q != 0) ++terms;
    return terms > 1;
}

// Appends "coeff * mono" to out with sign handling; mono may be empty.
void append_term(std::ostringstream& out, bool& first, const Scalar& coeff, const std::string& mono) {
    std::string c = coeff.to_string();
    bool negative = false;
    if (!is_composite_text(coeff) && !c.empty() && c[0] == '-') {
        negative = true;
        c = c.substr(1);
    }
    bool was_first = first;
    if (first) {
        if (negative) out << "-";
    } else {
        out << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
        out << (is_composite_text(coeff) && !was_first ? "(" + c + ")" : c);
        return;
    }
    if (c == "1") {
        out << mono;
    } else if (is_composite_text(coeff)) {
        out << "(" << c << ")*" << mono;
    } else {
        out << c << "*" << mono;
    }
}

}  // namespace

Scalar::Scalar() : ring_(Ring::integers()), value_(mpz_class(0)) {}

Scalar::Scalar(Ring ring,
               std::variant<mpz_class, mpq_class, std::uint64_t, CyclotomicValue, LaurentValue> value)
    : ring_(ring), value_(std::move(value)) {}

Scalar Scalar::zero(const Ring& ring) { return from_integer(ring, mpz_class(0)); }

Scalar Scalar::one(const Ring& ring) { return from_integer(ring, mpz_class(1)); }

Scalar Scalar::from_integer(const Ring& ring, const mpz_class& v) {
    switch (ring.kind()) {
    case RingKind::Integer: return Scalar(ring, v);
    case RingKind::Rational: return Scalar(ring, mpq_class(v));
    case RingKind::PrimeField: {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), ring.modulus());
        return Scalar(ring, static_cast<std::uint64_t>(r.get_ui()));
    }
    case RingKind::Cyclotomic: {
        std::vector<mpq_class> c(euler_phi(ring.order()));
        c[0] = v;
        return Scalar(ring, CyclotomicValue{std::move(c)});
    }
    case RingKind::Laurent: {
        Scalar c = from_integer(ring.base(), v);
        return Scalar(ring, make_laurent(0, {c}));
    }
    }
    return Scalar();
}

Scalar Scalar::from_rational(const Ring& ring, const mpq_class& v) {
    switch (ring.kind()) {
    case RingKind::Integer:
        if (v.get_den() != 1)
            throw Error(ErrorCode::NotInvertible, v.get_str() + " is not an integer");
        return Scalar(ring, v.get_num());
    case RingKind::Rational: return Scalar(ring, v);
    case RingKind::PrimeField: {
        Scalar num = from_integer(ring, v.get_num());
        Scalar den = from_integer(ring, v.get_den());
        if (den.is_zero())
            throw Error(ErrorCode::NotInvertible,
                        "denominator of " + v.get_str() + " vanishes in " + ring.name());
        return num * den.inverse();
    }
    case RingKind::Cyclotomic: {
        std::vector<mpq_class> c(euler_phi(ring.order()));
        c[0] = v;
        return Scalar(ring, CyclotomicValue{std::move(c)});
    }
    case RingKind::Laurent: return Scalar(ring, make_laurent(0, {from_rational(ring.base(), v)}));
    }
    return Scalar();
}

Scalar Scalar::zeta(const Ring& ring) {
    if (ring.base().kind() != RingKind::Cyclotomic)
        throw Error(ErrorCode::UnsupportedRing, "no root of unity generator in " + ring.name());
    Ring base = ring.base();
    Scalar z(base, CyclotomicValue{reduce_cyclotomic({mpq_class(0), mpq_class(1)}, base.order())});
    if (ring.is_laurent()) return monomial(ring, z, 0);
    return z;
}

Scalar Scalar::t_power(const Ring& ring, long exponent) {
    if (!ring.is_laurent())
        throw Error(ErrorCode::UnsupportedRing, "no variable t in " + ring.name());
    return Scalar(ring, make_laurent(exponent, {one(ring.base())}));
}

Scalar Scalar::monomial(const Ring& ring, const Scalar& coeff, long exponent) {
    if (!ring.is_laurent())
        throw Error(ErrorCode::UnsupportedRing, "no variable t in " + ring.name());
    require_same(coeff.ring(), ring.base());
    return Scalar(ring, make_laurent(exponent, {coeff}));
}

Scalar Scalar::cyclotomic(const Ring& ring, std::vector<mpq_class> coeffs) {
    if (ring.kind() != RingKind::Cyclotomic)
        throw Error(ErrorCode::UnsupportedRing, ring.name() + " is not cyclotomic");
    return Scalar(ring, CyclotomicValue{reduce_cyclotomic(std::move(coeffs), ring.order())});
}

Scalar Scalar::laurent(const Ring& ring, long valuation, std::vector<Scalar> coeffs) {
    if (!ring.is_laurent())
        throw Error(ErrorCode::UnsupportedRing, ring.name() + " is not a Laurent ring");
    for (const auto& c : coeffs) require_same(c.ring(), ring.base());
    return Scalar(ring, make_laurent(valuation, std::move(coeffs)));
}

bool Scalar::is_zero() const {
    switch (ring_.kind()) {
    case RingKind::Integer: return std::get<mpz_class>(value_) == 0;
    case RingKind::Rational: return std::get<mpq_class>(value_) == 0;
    case RingKind::PrimeField: return std::get<std::uint64_t>(value_) == 0;
    case RingKind::Cyclotomic: {
        const auto& c = std::get<CyclotomicValue>(value_).coeffs;
        return std::all_of(c.begin(), c.end(), [](const mpq_class& q) { return q == 0; });
    }
    case RingKind::Laurent: return std::get<LaurentValue>(value_).coeffs.empty();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

bool Scalar::is_unit() const {
    switch (ring_.kind()) {
    case RingKind::Integer: {
        const auto& v = std::get<mpz_class>(value_);
        return v == 1 || v == -1;
    }
    case RingKind::Laurent: return std::get<LaurentValue>(value_).coeffs.size() == 1;
    default: return !is_zero();
    }
}

Scalar Scalar::operator-() const {
    switch (ring_.kind()) {
    case RingKind::Integer: return Scalar(ring_, mpz_class(-std::get<mpz_class>(value_)));
    case RingKind::Rational: return Scalar(ring_, mpq_class(-std::get<mpq_class>(value_)));
    case RingKind::PrimeField: {
        auto v = std::get<std::uint64_t>(value_);
        return Scalar(ring_, v == 0 ? v : ring_.modulus() - v);
    }
    case RingKind::Cyclotomic: {
        auto c = std::get<CyclotomicValue>(value_);
        for (auto& q : c.coeffs) q = -q;
        return Scalar(ring_, std::move(c));
    }
    case RingKind::Laurent: {
        auto v = std::get<LaurentValue>(value_);
        for (auto& c : v.coeffs) c = -c;
        return Scalar(ring_, std::move(v));
    }
    }
    return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same(a.ring_, b.ring_);
    const Ring& R = a.ring_;
    switch (R.kind()) {
    case RingKind::Integer:
        return Scalar(R, mpz_class(std::get<mpz_class>(a.value_) + std::get<mpz_class>(b.value_)));
    case RingKind::Rational:
        return Scalar(R, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    case RingKind::PrimeField: {
        u128 s = static_cast<u128>(std::get<std::uint64_t>(a.value_)) + std::get<std::uint64_t>(b.value_);
        return Scalar(R, static_cast<std::uint64_t>(s % R.modulus()));
    }
    case RingKind::Cyclotomic: {
        auto c = std::get<CyclotomicValue>(a.value_);
        const auto& d = std::get<CyclotomicValue>(b.value_).coeffs;
        for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += d[i];
        return Scalar(R, std::move(c));
    }
    case RingKind::Laurent: {
        const auto& x = std::get<LaurentValue>(a.value_);
        const auto& y = std::get<LaurentValue>(b.value_);
        if (x.coeffs.empty()) return b;
        if (y.coeffs.empty()) return a;
        long lo = std::min(x.valuation, y.valuation);
        long hi = std::max(x.valuation + static_cast<long>(x.coeffs.size()),
                           y.valuation + static_cast<long>(y.coeffs.size()));
        std::vector<Scalar> c(hi - lo, Scalar::zero(R.base()));
        for (std::size_t i = 0; i < x.coeffs.size(); ++i) c[x.valuation - lo + i] += x.coeffs[i];
        for (std::size_t i = 0; i < y.coeffs.size(); ++i) c[y.valuation - lo + i] += y.coeffs[i];
        return Scalar(R, make_laurent(lo, std::move(c)));
    }
    }
    return a;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same(a.ring_, b.ring_);
    const Ring& R = a.ring_;
    switch (R.kind()) {
    case RingKind::Integer:
        return Scalar(R, mpz_class(std::get<mpz_class>(a.value_) * std::get<mpz_class>(b.value_)));
    case RingKind::Rational:
        return Scalar(R, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    case RingKind::PrimeField: {
        u128 s = static_cast<u128>(std::get<std::uint64_t>(a.value_)) * std::get<std::uint64_t>(b.value_);
        return Scalar(R, static_cast<std::uint64_t>(s % R.modulus()));
    }
    case RingKind::Cyclotomic: {
        QPoly p = poly_mul(as_poly(std::get<CyclotomicValue>(a.value_).coeffs),
                           as_poly(std::get<CyclotomicValue>(b.value_).coeffs));
        return Scalar(R, CyclotomicValue{reduce_cyclotomic(std::move(p), R.order())});
    }
    case RingKind::Laurent: {
        const auto& x = std::get<LaurentValue>(a.value_);
        const auto& y = std::get<LaurentValue>(b.value_);
        if (x.coeffs.empty() || y.coeffs.empty()) return Scalar::zero(R);
        std::vector<Scalar> c(x.coeffs.size() + y.coeffs.size() - 1, Scalar::zero(R.base()));
        for (std::size_t i = 0; i < x.coeffs.size(); ++i)
            for (std::size_t j = 0; j < y.coeffs.size(); ++j) c[i + j] += x.coeffs[i] * y.coeffs[j];
        return Scalar(R, make_laurent(x.valuation + y.valuation, std::move(c)));
    }
    }
    return a;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.ring_ == b.ring_)) return false;
    switch (a.ring_.kind()) {
    case RingKind::Integer: return std::get<mpz_class>(a.value_) == std::get<mpz_class>(b.value_);
    case RingKind::Rational: return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    case RingKind::PrimeField:
        return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
    case RingKind::Cyclotomic:
        return std::get<CyclotomicValue>(a.value_).coeffs == std::get<CyclotomicValue>(b.value_).coeffs;
    case RingKind::Laurent: {
        const auto& x = std::get<LaurentValue>(a.value_);
        const auto& y = std::get<LaurentValue>(b.value_);
        return x.valuation == y.valuation && x.coeffs == y.coeffs;
    }
    }
    return false;
}

Scalar Scalar::inverse() const {
    if (!is_unit())
        throw Error(ErrorCode::NotInvertible, to_string() + " is not a unit in " + ring_.name());
    switch (ring_.kind()) {
    case RingKind::Integer: return *this;
    case RingKind::Rational: return Scalar(ring_, mpq_class(1 / std::get<mpq_class>(value_)));
    case RingKind::PrimeField:
        return Scalar(ring_, mod_inverse(std::get<std::uint64_t>(value_), ring_.modulus()));
    case RingKind::Cyclotomic: {
        const QPoly& phi = cyclotomic_poly(ring_.order());
        auto [g, s] = poly_gcdinv(as_poly(std::get<CyclotomicValue>(value_).coeffs), phi);
        return Scalar(ring_, CyclotomicValue{reduce_cyclotomic(std::move(s), ring_.order())});
    }
    case RingKind::Laurent: {
        const auto& v = std::get<LaurentValue>(value_);
        return Scalar(ring_, make_laurent(-v.valuation, {v.coeffs[0].inverse()}));
    }
    }
    return *this;
}

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Scalar result = one(ring_), base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

std::string Scalar::to_string() const {
    switch (ring_.kind()) {
    case RingKind::Integer: return std::get<mpz_class>(value_).get_str();
    case RingKind::Rational: return std::get<mpq_class>(value_).get_str();
    case RingKind::PrimeField: return std::to_string(std::get<std::uint64_t>(value_));
    case RingKind::Cyclotomic:
        return poly_to_string(as_poly(std::get<CyclotomicValue>(value_).coeffs),
                              "z" + std::to_string(ring_.order()));
    case RingKind::Laurent: {
        const auto& v = std::get<LaurentValue>(value_);
        if (v.coeffs.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (long i = static_cast<long>(v.coeffs.size()) - 1; i >= 0; --i) {
            const Scalar& c = v.coeffs[i];
            if (c.is_zero()) continue;
            long e = v.valuation + i;
            std::string mono = e == 0 ? "" : e == 1 ? "t" : "t^" + std::to_string(e);
            append_term(out, first, c, mono);
        }
        return out.str();
    }
    }
    return "?";
}

const mpz_class& Scalar::integer_value() const {
    if (ring_.kind() != RingKind::Integer) throw Error(ErrorCode::MixedRings, "not an integer");
    return std::get<mpz_class>(value_);
}

const mpq_class& Scalar::rational_value() const {
    if (ring_.kind() != RingKind::Rational) throw Error(ErrorCode::MixedRings, "not a rational");
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (ring_.kind() != RingKind::PrimeField) throw Error(ErrorCode::MixedRings, "not in F_p");
    return std::get<std::uint64_t>(value_);
}

const std::vector<mpq_class>& Scalar::cyclotomic_coeffs() const {
    if (ring_.kind() != RingKind::Cyclotomic)
        throw Error(ErrorCode::MixedRings, "not a cyclotomic element");
    return std::get<CyclotomicValue>(value_).coeffs;
}

long Scalar::valuation() const {
    if (!ring_.is_laurent()) throw Error(ErrorCode::MixedRings, "not a Laurent polynomial");
    return std::get<LaurentValue>(value_).valuation;
}

long Scalar::top_degree() const {
    const auto& v = std::get<LaurentValue>(value_);
    return v.valuation + static_cast<long>(v.coeffs.size()) - 1;
}

const std::vector<Scalar>& Scalar::laurent_coeffs() const {
    if (!ring_.is_laurent()) throw Error(ErrorCode::MixedRings, "not a Laurent polynomial");
    return std::get<LaurentValue>(value_).coeffs;
}

Scalar Scalar::coefficient(long exponent) const {
    const auto& v = std::get<LaurentValue>(value_);
    long i = exponent - v.valuation;
    if (i < 0 || i >= static_cast<long>(v.coeffs.size())) return zero(ring_.base());
    return v.coeffs[i];
}

mpz_class euclidean_size(const Scalar& a) {
    switch (a.ring().kind()) {
    case RingKind::Integer: return abs(a.integer_value());
    case RingKind::Laurent:
        return a.is_zero() ? mpz_class(0)
                           : mpz_class(static_cast<long>(a.laurent_coeffs().size()) - 1);
    default: return 0;
    }
}

namespace {

// Division of polynomials with nonzero constant terms, coefficients in a field.
std::pair<std::vector<Scalar>, std::vector<Scalar>> field_poly_divmod(std::vector<Scalar> a,
                                                                       const std::vector<Scalar>& b,
                                                                       const Ring& field) {
    if (a.size() < b.size()) return {{}, a};
    std::vector<Scalar> q(a.size() - b.size() + 1, Scalar::zero(field));
    Scalar lead_inv = b.back().inverse();
    for (long k = static_cast<long>(a.size() - b.size()); k >= 0; --k) {
        Scalar c = a[k + b.size() - 1] * lead_inv;
        q[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    return {q, a};
}

}  // namespace

std::pair<Scalar, Scalar> divmod(const Scalar& a, const Scalar& b) {
    require_same(a.ring(), b.ring());
    if (b.is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero");
    const Ring& R = a.ring();
    switch (R.kind()) {
    case RingKind::Integer: {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.integer_value().get_mpz_t(),
                    b.integer_value().get_mpz_t());
        return {Scalar::from_integer(R, q), Scalar::from_integer(R, r)};
    }
    case RingKind::Laurent: {
        if (a.is_zero()) return {Scalar::zero(R), Scalar::zero(R)};
        auto [q, r] = field_poly_divmod(a.laurent_coeffs(), b.laurent_coeffs(), R.base());
        Scalar quotient = Scalar::laurent(R, a.valuation() - b.valuation(), std::move(q));
        Scalar remainder = Scalar::laurent(R, a.valuation(), std::move(r));
        return {quotient, remainder};
    }
    default: return {a * b.inverse(), Scalar::zero(R)};
    }
}

Scalar exact_quotient(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero");
    if (a.ring().kind() == RingKind::Integer) {
        if (!mpz_divisible_p(a.integer_value().get_mpz_t(), b.integer_value().get_mpz_t()))
            throw Error(ErrorCode::NotInvertible, b.to_string() + " does not divide " + a.to_string());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.integer_value().get_mpz_t(), b.integer_value().get_mpz_t());
        return Scalar::from_integer(a.ring(), q);
    }
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error(ErrorCode::NotInvertible, b.to_string() + " does not divide " + a.to_string());
    return q;
}

bool divides(const Scalar& b, const Scalar& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).second.is_zero();
}

Scalar unit_part(const Scalar& a) {
    const Ring& R = a.ring();
    if (a.is_zero()) return Scalar::one(R);
    switch (R.kind()) {
    case RingKind::Integer: return Scalar::from_integer(R, a.integer_value() < 0 ? -1 : 1);
    case RingKind::Laurent: return Scalar::monomial(R, a.laurent_coeffs().back(), a.valuation());
    default: return a;
    }
}

Scalar normalized(const Scalar& a) {
    if (a.is_zero()) return a;
    const Ring& R = a.ring();
    switch (R.kind()) {
    case RingKind::Integer: return Scalar::from_integer(R, abs(a.integer_value()));
    case RingKind::Laurent: {
        Scalar inv = a.laurent_coeffs().back().inverse();
        std::vector<Scalar> c = a.laurent_coeffs();
        for (auto& x : c) x *= inv;
        return Scalar::laurent(R, 0, std::move(c));
    }
    default: return Scalar::one(R);
    }
}

Scalar gcd(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    while (!y.is_zero()) {
        Scalar r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return normalized(x);
}

bool associates(const Scalar& a, const Scalar& b) { return normalized(a) == normalized(b); }

Scalar substitute_inverse_variable(const Scalar& a) {
    if (!a.ring().is_laurent()) return a;
    if (a.is_zero()) return a;
    std::vector<Scalar> c(a.laurent_coeffs().rbegin(), a.laurent_coeffs().rend());
    return Scalar::laurent(a.ring(), -a.top_degree(), std::move(c));
}

Scalar evaluate_at(const Scalar& a, const Scalar& value) {
    if (!a.ring().is_laurent())
        throw Error(ErrorCode::UnsupportedRing, "evaluation needs a Laurent polynomial");
    require_same(value.ring(), a.ring().base());
    Scalar acc = Scalar::zero(value.ring());
    if (a.is_zero()) return acc;
    const auto& c = a.laurent_coeffs();
    for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i) acc = acc * value + c[i];
    return acc * value.pow(a.valuation());
}

Scalar change_ring(const Scalar& a, const Ring& target) {
    const Ring& source = a.ring();
    if (source == target) return a;
    if (source.kind() == RingKind::Integer) return Scalar::from_integer(target, a.integer_value());
    if (source.kind() == RingKind::Rational) return Scalar::from_rational(target, a.rational_value());
    if (source.is_laurent() && target.is_laurent()) {
        std::vector<Scalar> c;
        for (const auto& x : a.laurent_coeffs()) c.push_back(change_ring(x, target.base()));
        return Scalar::laurent(target, a.is_zero() ? 0 : a.valuation(), std::move(c));
    }
    if (target.is_laurent() && source == target.base()) return Scalar::monomial(target, a, 0);
    throw Error(ErrorCode::UnsupportedRing,
                "cannot map " + source.name() + " into " + target.name());
}

Ring common_ring(std::span<const Scalar> values) {
    if (values.empty()) throw Error(ErrorCode::InvalidInput, "no values to take a ring from");
    for (const auto& v : values) require_same(values[0].ring(), v.ring());
    return values[0].ring();
}

}  // namespace arrtwist::algebra
