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

#include "arrtwist/algebra/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "arrtwist/error.hpp"

namespace arrtwist::algebra {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly poly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw Error(ErrorCode::NotInvertible, "polynomial division by zero");
    QPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    QPoly q(r.size() - b.size() + 1);
    const mpq_class& lead = b.back();
    for (int k = degree(r) - degree(b); k >= 0; --k) {
        mpq_class c = r[k + b.size() - 1] / lead;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    trim(q);
    trim(r);
    return {q, r};
}

std::pair<QPoly, QPoly> poly_gcdinv(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b, s0 = {mpq_class(1)}, s1;
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        QPoly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (!r0.empty()) {
        mpq_class lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : s0) c /= lead;
    }
    return {r0, s0};
}

std::string poly_to_string(const QPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(p); k >= 0; --k) {
        mpq_class c = p[k];
        if (c == 0) continue;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << c.get_str();
            continue;
        }
        if (c != 1) out << c.get_str() << "*";
        out << var;
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

namespace {

QPoly compute_cyclotomic(int d) {
    QPoly p(d + 1);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        p = poly_divmod(p, cyclotomic_poly(e)).first;
    }
    return p;
}

}  // namespace

const QPoly& cyclotomic_poly(int d) {
    if (d < 1) throw Error(ErrorCode::InvalidInput, "cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<QPoly>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return *it->second;
    }
    // Computed outside the lock: the recursion re-enters for divisors.
    auto value = std::make_unique<QPoly>(compute_cyclotomic(d));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(d, std::move(value));
    return *it->second;
}

int euler_phi(int d) {
    int result = d;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

}  // namespace arrtwist::algebra
