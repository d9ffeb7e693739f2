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

#include "arrtwist/algebra/ring.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "arrtwist/error.hpp"

namespace arrtwist::algebra {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::string trimmed(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

template <class T>
bool parse_number(std::string_view s, T& value) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

Ring parse_field(std::string_view s, std::string_view original) {
    auto fail = [&]() -> Ring {
        throw Error(ErrorCode::InvalidInput, "unknown ring '" + std::string(original) + "'");
    };
    if (s == "Q" || s == "q" || s == "QQ") return Ring::rationals();
    if (s == "Z" || s == "ZZ") return Ring::integers();
    std::uint64_t p = 0;
    int d = 0;
    if ((starts_with(s, "F") || starts_with(s, "f")) && parse_number(s.substr(1), p))
        return Ring::prime_field(p);
    if (starts_with(s, "GF(") && ends_with(s, ")") &&
        parse_number(s.substr(3, s.size() - 4), p))
        return Ring::prime_field(p);
    if (starts_with(s, "fp:") && parse_number(s.substr(3), p)) return Ring::prime_field(p);
    if (starts_with(s, "Q(z") && ends_with(s, ")") && parse_number(s.substr(3, s.size() - 4), d))
        return Ring::cyclotomic(d);
    if (starts_with(s, "cyclotomic:") && parse_number(s.substr(11), d)) return Ring::cyclotomic(d);
    return fail();
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Ring Ring::integers() { return Ring(); }

Ring Ring::rationals() {
    Ring r;
    r.kind_ = RingKind::Rational;
    r.base_kind_ = RingKind::Rational;
    return r;
}

Ring Ring::prime_field(std::uint64_t p) {
    if (!is_prime(p) || p >= (1ull << 62))
        throw Error(ErrorCode::InvalidInput, "F_p needs a prime p below 2^62, got " + std::to_string(p));
    Ring r;
    r.kind_ = RingKind::PrimeField;
    r.base_kind_ = RingKind::PrimeField;
    r.modulus_ = p;
    return r;
}

Ring Ring::cyclotomic(int d) {
    if (d < 1) throw Error(ErrorCode::InvalidInput, "cyclotomic order must be positive");
    Ring r;
    r.kind_ = RingKind::Cyclotomic;
    r.base_kind_ = RingKind::Cyclotomic;
    r.order_ = d;
    return r;
}

Ring Ring::laurent(const Ring& base) {
    if (!base.is_field())
        throw Error(ErrorCode::UnsupportedRing,
                    "Laurent rings need a field of coefficients, got " + base.name());
    Ring r = base;
    r.kind_ = RingKind::Laurent;
    return r;
}

Ring Ring::base() const {
    if (kind_ != RingKind::Laurent) return *this;
    Ring r = *this;
    r.kind_ = base_kind_;
    return r;
}

bool Ring::is_field() const {
    return kind_ == RingKind::Rational || kind_ == RingKind::PrimeField ||
           kind_ == RingKind::Cyclotomic;
}

std::string Ring::name() const {
    switch (kind_) {
    case RingKind::Integer: return "Z";
    case RingKind::Rational: return "Q";
    case RingKind::PrimeField: return "F" + std::to_string(modulus_);
    case RingKind::Cyclotomic: return "Q(z" + std::to_string(order_) + ")";
    case RingKind::Laurent: return base().name() + "[t,t^-1]";
    }
    return "?";
}

Ring Ring::parse(std::string_view text) {
    std::string s = trimmed(text);
    if (s == "laurent") return laurent(rationals());
    if (starts_with(s, "laurent:")) return laurent(parse_field(s.substr(8), text));
    if (ends_with(s, "[t,t^-1]")) return laurent(parse_field(s.substr(0, s.size() - 8), text));
    if (ends_with(s, "[t^-1,t]")) return laurent(parse_field(s.substr(0, s.size() - 8), text));
    return parse_field(s, text);
}

}  // namespace arrtwist::algebra
