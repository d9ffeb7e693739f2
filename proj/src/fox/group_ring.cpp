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


#include "arrtwist/fox/group_ring.hpp"

#include <sstream>

#include "arrtwist/error.hpp"

namespace arrtwist::fox {

using algebra::Scalar;

GroupRingElement::GroupRingElement(const FreeWord& w, const mpz_class& c) { add_term(w, c); }

void GroupRingElement::add_term(const FreeWord& w, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class GroupRingElement::coefficient(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GroupRingElement operator-(const GroupRingElement& a) {
    GroupRingElement out;
    for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
    return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) out.add_term(u * v, c * d);
    return out;
}

GroupRingElement operator*(const mpz_class& c, const GroupRingElement& a) {
    GroupRingElement out;
    for (const auto& [w, d] : a.terms_) out.add_term(w, c * d);
    return out;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        bool negative = c < 0;
        mpz_class mag = negative ? mpz_class(-c) : c;
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (mag != 1) {
            out << mag.get_str();
            if (!w.empty()) out << "*" << w.to_string();
        } else {
            out << w.to_string();
        }
    }
    return out.str();
}

GroupRingElement substitute(const Endomorphism& f, const GroupRingElement& e) {
    GroupRingElement out;
    for (const auto& [w, c] : e.terms()) out += GroupRingElement(substitute(f, w), c);
    return out;
}

GroupRingElement fox_derivative(const FreeWord& w, int i) {
    GroupRingElement out;
    FreeWord prefix;
    for (const Letter& l : w.letters()) {
        FreeWord next = prefix * FreeWord::generator(l.generator, l.exponent);
        if (l.generator == i) {
            if (l.exponent > 0) {
                out += GroupRingElement(prefix);
            } else {
                out -= GroupRingElement(next);
            }
        }
        prefix = std::move(next);
    }
    return out;
}

Scalar specialize(const FreeWord& w, const std::vector<Scalar>& units) {
    if (units.empty()) throw Error(ErrorCode::InvalidInput, "specialization needs at least one unit");
    Scalar out = Scalar::one(units[0].ring());
    for (const Letter& l : w.letters()) {
        if (l.generator >= static_cast<int>(units.size()))
            throw Error(ErrorCode::InvalidInput, "no unit assigned to generator " + std::to_string(l.generator));
        const Scalar& u = units[l.generator];
        out = out * (l.exponent > 0 ? u : u.inverse());
    }
    return out;
}

Scalar specialize(const GroupRingElement& e, const std::vector<Scalar>& units) {
    if (units.empty()) throw Error(ErrorCode::InvalidInput, "specialization needs at least one unit");
    Scalar out = Scalar::zero(units[0].ring());
    for (const auto& [w, c] : e.terms()) out = out + Scalar::from_integer(units[0].ring(), c) * specialize(w, units);
    return out;
}

}  // namespace arrtwist::fox
