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

#include "arrtwist/arrangement/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "arrtwist/error.hpp"

namespace arrtwist::arrangement {

namespace {

using Vec = std::vector<mpq_class>;

// Row space in reduced echelon form.
class RowSpace {
  public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    // Reduces v against the basis; true (and v is added) if independent.
    bool add(Vec v) {
        reduce(v);
        auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
        if (it == v.end()) return false;
        std::size_t p = it - v.begin();
        mpq_class lead = v[p];
        for (auto& x : v) x /= lead;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][p] == 0) continue;
            mpq_class f = rows_[i][p];
            for (std::size_t j = 0; j < dim_; ++j) rows_[i][j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(Vec v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    void reduce(Vec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const mpq_class f = v[pivots_[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[i][j];
        }
    }

    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

// Coefficients expressing target in the given independent rows.
Vec solve_combination(const std::vector<Vec>& basis, const Vec& target) {
    std::size_t k = basis.size(), dim = target.size();
    // Augmented system basis^T x = target, dim equations in k unknowns.
    std::vector<Vec> m(dim, Vec(k + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
        m[i][k] = target[i];
    }
    std::vector<std::size_t> pivot_row(k, dim);
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < dim; ++c) {
        std::size_t p = row;
        while (p < dim && m[p][c] == 0) ++p;
        if (p == dim) continue;
        std::swap(m[p], m[row]);
        mpq_class lead = m[row][c];
        for (auto& x : m[row]) x /= lead;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (std::size_t j = 0; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_row[c] = row++;
    }
    Vec x(k);
    for (std::size_t c = 0; c < k; ++c)
        if (pivot_row[c] < dim) x[c] = m[pivot_row[c]][k];
    return x;
}

bool flat_less(const Flat& a, const Flat& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    auto ia = a.indices(), ib = b.indices();
    return ia < ib;
}

std::uint64_t closure(const Arrangement& a, std::uint64_t mask) {
    RowSpace span(a.r());
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((mask >> i) & 1u) span.add(a.forms()[i]);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!((mask >> i) & 1u) && span.contains(a.forms()[i])) mask |= std::uint64_t(1) << i;
    return mask;
}

std::vector<Flat> all_flats(const Arrangement& a) {
    std::set<std::uint64_t> seen = {0};
    std::vector<Flat> flats = {Flat{0, 0}};
    std::vector<std::uint64_t> frontier = {0};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t f : frontier) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if ((f >> i) & 1u) continue;
                std::uint64_t g = closure(a, f | (std::uint64_t(1) << i));
                if (seen.insert(g).second) {
                    flats.push_back(Flat{g, a.rank_of(g)});
                    next.push_back(g);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(flats.begin(), flats.end(), flat_less);
    return flats;
}

bool connected_localization(const Arrangement& a, const Flat& f) {
    std::vector<int> idx = f.indices();
    if (idx.size() <= 1) return true;
    RowSpace span(a.r());
    std::vector<Vec> basis;
    std::vector<int> basis_idx, rest;
    for (int i : idx) {
        if (span.add(a.forms()[i])) {
            basis.push_back(a.forms()[i]);
            basis_idx.push_back(i);
        } else {
            rest.push_back(i);
        }
    }
    // Components are linked by fundamental circuits of the chosen basis.
    std::map<int, int> parent;
    for (int i : idx) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : rest) {
        Vec c = solve_combination(basis, a.forms()[e]);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0) parent[find(e)] = find(basis_idx[j]);
    }
    int root = find(idx[0]);
    return std::all_of(idx.begin(), idx.end(), [&](int i) { return find(i) == root; });
}

bool combinations_any(std::size_t n, std::size_t k, const std::function<bool(std::uint64_t)>& f) {
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        std::uint64_t mask = 0;
        for (auto i : c) mask |= std::uint64_t(1) << i;
        if (f(mask)) return true;
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

std::vector<int> Flat::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

std::size_t Flat::size() const { return std::popcount(mask); }

Arrangement Arrangement::create(int r, std::vector<std::vector<mpq_class>> forms,
                                std::vector<std::string> labels) {
    if (r < 1) throw Error(ErrorCode::InvalidInput, "ambient dimension r must be positive");
    if (forms.size() < 2) throw Error(ErrorCode::InvalidInput, "an arrangement needs at least two hyperplanes");
    if (forms.size() > 64) throw Error(ErrorCode::InvalidInput, "at most 64 hyperplanes are supported");
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].size() != static_cast<std::size_t>(r))
            throw Error(ErrorCode::InvalidInput, "form " + std::to_string(i) + " has " +
                                                     std::to_string(forms[i].size()) +
                                                     " coefficients, expected " + std::to_string(r));
        if (std::all_of(forms[i].begin(), forms[i].end(), [](const mpq_class& x) { return x == 0; }))
            throw Error(ErrorCode::InvalidInput, "form " + std::to_string(i) + " is zero");
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < forms.size(); ++i) labels.push_back("H" + std::to_string(i));
    } else if (labels.size() != forms.size()) {
        throw Error(ErrorCode::InvalidInput, "label count does not match the number of forms");
    }
    Arrangement a;
    a.r_ = r;
    a.forms_ = std::move(forms);
    a.labels_ = std::move(labels);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a.rank_of((std::uint64_t(1) << i) | (std::uint64_t(1) << j)) < 2)
                throw Error(ErrorCode::InvalidInput, "hyperplanes " + std::to_string(i) + " and " +
                                                         std::to_string(j) + " coincide");
    a.rank_ = a.rank_of(a.size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << a.size()) - 1);
    return a;
}

Arrangement Arrangement::generic(std::size_t hyperplanes, int r) {
    std::vector<std::vector<mpq_class>> forms;
    for (std::size_t i = 0; i < hyperplanes; ++i) {
        std::vector<mpq_class> f(r);
        mpq_class x = 1;
        for (int k = 0; k < r; ++k) {
            f[k] = x;
            x *= static_cast<long>(i + 1);
        }
        forms.push_back(std::move(f));
    }
    return create(r, std::move(forms));
}

Arrangement Arrangement::boolean(std::size_t hyperplanes) {
    int r = static_cast<int>(hyperplanes);
    std::vector<std::vector<mpq_class>> forms;
    for (int i = 0; i < r; ++i) {
        std::vector<mpq_class> f(r);
        f[i] = 1;
        forms.push_back(std::move(f));
    }
    return create(r, std::move(forms));
}

int Arrangement::rank_of(std::uint64_t mask) const {
    RowSpace span(r_);
    for (std::size_t i = 0; i < forms_.size(); ++i)
        if ((mask >> i) & 1u) span.add(forms_[i]);
    return static_cast<int>(span.rank());
}

std::vector<Flat> intersection_lattice(const Arrangement& a, LatticeScope scope) {
    std::vector<Flat> flats = all_flats(a);
    if (scope == LatticeScope::Cone) return flats;
    std::vector<Flat> out;
    for (const auto& f : flats)
        if (f.codim >= 1 && f.codim <= a.r() - 1) out.push_back(f);
    return out;
}

std::optional<int> girth(const Arrangement& a) {
    std::size_t limit = std::min<std::size_t>(a.size(), a.r() + 1);
    for (std::size_t k = 1; k <= limit; ++k) {
        bool dependent = combinations_any(a.size(), k, [&](std::uint64_t mask) {
            return a.rank_of(mask) < static_cast<int>(k);
        });
        if (dependent) return static_cast<int>(k);
    }
    return std::nullopt;
}

std::vector<Flat> dense_edges(const Arrangement& a, LatticeScope scope) {
    std::vector<Flat> out;
    for (const auto& f : intersection_lattice(a, scope))
        if (f.mask != 0 && connected_localization(a, f)) out.push_back(f);
    return out;
}

Character Character::create(std::vector<long> weights) {
    long sum = std::accumulate(weights.begin(), weights.end(), 0L);
    if (sum != 0)
        throw Error(ErrorCode::InvalidCharacter,
                    "weights must sum to zero, they sum to " + std::to_string(sum));
    return Character{std::move(weights)};
}

Character Character::trivial(std::size_t hyperplanes) {
    return Character{std::vector<long>(hyperplanes, 0)};
}

NonresonanceReport nonresonance(const Arrangement& a, const Character& ch) {
    if (ch.weights.size() != a.size())
        throw Error(ErrorCode::InvalidCharacter, "expected " + std::to_string(a.size()) +
                                                     " weights, got " + std::to_string(ch.weights.size()));
    Character::create(ch.weights);
    NonresonanceReport report;
    for (const auto& f : dense_edges(a)) {
        if (!f.contains(0)) continue;
        report.checked.push_back(f);
        long sum = 0;
        for (int i : f.indices()) sum += ch.weights[i];
        if (sum == 0 && report.nonresonant) {
            report.nonresonant = false;
            report.violation = f;
        }
    }
    return report;
}

std::optional<Character> find_nonresonant_character(const Arrangement& a, long bound) {
    std::vector<Flat> inside;
    for (const auto& f : dense_edges(a))
        if (f.contains(0)) inside.push_back(f);
    auto ok = [&](const std::vector<long>& w) {
        for (const auto& f : inside) {
            long s = 0;
            for (int i : f.indices()) s += w[i];
            if (s == 0) return false;
        }
        return true;
    };
    std::size_t n = a.n();
    // Deterministic walk through weight vectors with entries in [-bound, bound].
    std::vector<long> w(a.size(), 0);
    std::vector<long> digits(n, -bound);
    for (std::size_t step = 0; step < 200000; ++step) {
        long total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i + 1] = digits[i];
            total += digits[i];
        }
        w[0] = -total;
        if (ok(w)) return Character{w};
        std::size_t i = 0;
        while (i < n && digits[i] == bound) digits[i++] = -bound;
        if (i == n) break;
        ++digits[i];
    }
    return std::nullopt;
}

BettiData betti_data(const Arrangement& a) {
    if (!a.essential())
        throw Error(ErrorCode::NotEssential, "arrangement of rank " + std::to_string(a.rank()) +
                                                 " in C^" + std::to_string(a.r()) +
                                                 " is not essential; pass to the essential quotient first");
    std::vector<Flat> flats = all_flats(a);
    std::vector<long> mu(flats.size(), 0);
    mu[0] = 1;
    for (std::size_t x = 1; x < flats.size(); ++x) {
        long s = 0;
        for (std::size_t y = 0; y < x; ++y)
            if (flats[y].codim < flats[x].codim && (flats[y].mask & ~flats[x].mask) == 0) s += mu[y];
        mu[x] = -s;
    }
    BettiData data;
    data.betti.assign(a.r(), 0);
    // Decone at H_0: flats of the cone not below H_0.
    for (std::size_t x = 0; x < flats.size(); ++x) {
        if (flats[x].contains(0) || flats[x].codim >= a.r()) continue;
        data.betti[flats[x].codim] += std::labs(mu[x]);
    }
    for (std::size_t q = 0; q < data.betti.size(); ++q)
        data.euler_characteristic += (q % 2 == 0 ? 1 : -1) * data.betti[q];
    return data;
}

GenericPositionProfile generic_position_profile(const Arrangement& a) {
    if (!a.essential())
        throw Error(ErrorCode::NotEssential, "the arrangement is not essential");
    GenericPositionProfile p;
    p.girth = girth(a);
    if (p.girth && *p.girth == 3)
        throw Error(ErrorCode::GirthTooSmall,
                    "girth 3: three hyperplanes are dependent, so the higher homotopy is not "
                    "determined by the combinatorics alone");
    if (p.girth) p.p = *p.girth - 2;
    p.generic_position = p.girth && *p.girth == a.r() + 1 && a.size() > static_cast<std::size_t>(a.r());
    return p;
}

}  // namespace arrtwist::arrangement
