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

#include "arrtwist/koszul/koszul.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "arrtwist/error.hpp"

namespace arrtwist::koszul {

UnitAssignment UnitAssignment::scalars(const Ring& ring, const std::vector<Scalar>& units) {
    std::vector<Matrix> m;
    for (const auto& u : units) {
        if (!(u.ring() == ring))
            throw Error(ErrorCode::MixedRings, "unit " + u.to_string() + " is not in " + ring.name());
        if (!u.is_unit())
            throw Error(ErrorCode::NotInvertible, u.to_string() + " is not a unit in " + ring.name());
        m.push_back(Matrix::from_rows(ring, {{u}}));
    }
    return UnitAssignment{ring, 1, std::move(m)};
}

UnitAssignment UnitAssignment::matrices(const Ring& ring, std::vector<Matrix> units) {
    std::size_t d = units.empty() ? 1 : units[0].rows();
    for (const auto& u : units) {
        if (u.rows() != d || u.cols() != d)
            throw Error(ErrorCode::InvalidInput, "unit matrices must all be square of the same size");
        if (!(u.ring() == ring)) throw Error(ErrorCode::MixedRings, "unit matrix outside " + ring.name());
        if (!algebra::determinant(u).is_unit())
            throw Error(ErrorCode::NotInvertible, "unit matrix with non-unit determinant");
    }
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i + 1; j < units.size(); ++j)
            if (!(units[i] * units[j] == units[j] * units[i]))
                throw Error(ErrorCode::InvalidInput, "unit matrices must commute (the group is abelian)");
    return UnitAssignment{ring, d, std::move(units)};
}

UnitAssignment UnitAssignment::from_character(const Character& ch, const Ring& ring,
                                              const std::optional<Scalar>& value) {
    Character::create(ch.weights);
    if (ch.weights.empty()) throw Error(ErrorCode::InvalidCharacter, "empty character");
    Scalar base;
    if (value) {
        base = *value;
    } else if (ring.is_laurent()) {
        base = Scalar::t_power(ring, 1);
    } else if (ring.kind() == algebra::RingKind::Cyclotomic) {
        base = Scalar::zeta(ring);
    } else {
        base = Scalar::one(ring);
    }
    std::vector<Scalar> u;
    for (std::size_t i = 1; i < ch.weights.size(); ++i) u.push_back(base.pow(ch.weights[i]));
    return scalars(ring, u);
}

std::vector<std::uint64_t> colex_subsets(std::size_t n, std::size_t q) {
    std::vector<std::uint64_t> out;
    if (q > n) return out;
    if (q == 0) return {0};
    // Increasing bitmasks with q bits set are in colex order.
    std::uint64_t x = (std::uint64_t(1) << q) - 1;
    const std::uint64_t limit = std::uint64_t(1) << n;
    while (x < limit) {
        out.push_back(x);
        std::uint64_t c = x & -x, r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    return out;
}

KoszulComplex build_koszul(const UnitAssignment& u, std::size_t top_degree) {
    const Ring& R = u.ring;
    std::size_t n = u.n(), d = u.module_rank;
    if (n > 62) throw Error(ErrorCode::InvalidInput, "too many generators");
    std::size_t top = std::min(top_degree, n);
    std::vector<Matrix> slot;  // U_i^{-1} - 1
    for (const auto& m : u.units) {
        auto inv = algebra::inverse(m);
        if (!inv) throw Error(ErrorCode::NotInvertible, "unit matrix is not invertible");
        slot.push_back(*inv - Matrix::identity(R, d));
    }
    KoszulComplex k;
    std::vector<std::size_t> ranks;
    for (std::size_t q = 0; q <= top; ++q) {
        k.basis.push_back(colex_subsets(n, q));
        ranks.push_back(k.basis.back().size() * d);
    }
    std::vector<Matrix> boundaries;
    for (std::size_t q = 1; q <= top; ++q) {
        std::map<std::uint64_t, std::size_t> row_of;
        for (std::size_t i = 0; i < k.basis[q - 1].size(); ++i) row_of[k.basis[q - 1][i]] = i;
        Matrix bd(R, ranks[q - 1], ranks[q]);
        for (std::size_t col = 0; col < k.basis[q].size(); ++col) {
            std::uint64_t I = k.basis[q][col];
            int position = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!((I >> i) & 1u)) continue;
                std::size_t row = row_of.at(I & ~(std::uint64_t(1) << i));
                Matrix block = slot[i];
                if (position % 2 == 1) block = Scalar::from_integer(R, -1) * block;
                bd.set_block(row * d, col * d, block);
                ++position;
            }
        }
        boundaries.push_back(std::move(bd));
    }
    k.complex = FreeChainComplex::create(R, std::move(ranks), std::move(boundaries));
    return k;
}

namespace {

void require_matching(const Arrangement& a, const UnitAssignment& u) {
    if (u.n() != a.n())
        throw Error(ErrorCode::InvalidInput, "the arrangement has " + std::to_string(a.n()) +
                                                 " meridians but " + std::to_string(u.n()) +
                                                 " units were given");
}

}  // namespace

RangeHomology generic_range_homology(const Arrangement& a, const UnitAssignment& u) {
    require_matching(a, u);
    RangeHomology out;
    out.girth = arrangement::girth(a);
    if (out.girth && *out.girth == 3)
        throw Error(ErrorCode::GirthTooSmall,
                    "girth 3: no degree range is determined by the Koszul complex of Z^n");
    std::size_t top;
    if (!out.girth) {
        top = u.n();
        out.degrees = top + 1;
        out.note = "infinite girth: the complement is a torus, every degree is valid";
    } else {
        top = static_cast<std::size_t>(*out.girth - 2);
        out.degrees = top;
        out.note = "degrees below girth - 2 = " + std::to_string(top);
    }
    auto k = build_koszul(u, top);
    for (std::size_t q = 0; q < out.degrees; ++q) out.groups.push_back(chain::homology(k.complex, q));
    return out;
}

CompleteHomology complete_homology_generic_position(const Arrangement& a, const UnitAssignment& u) {
    require_matching(a, u);
    auto profile = arrangement::generic_position_profile(a);
    if (!profile.generic_position)
        throw Error(ErrorCode::NotGenericPosition,
                    "the arrangement is not a generic section (girth must be r + 1 with n + 1 > r)");
    const Ring& R = u.ring;
    if (R.is_laurent() ? u.module_rank != 1 : !R.is_field())
        throw Error(ErrorCode::UnsupportedRing,
                    "complete homology needs K[t,t^-1] with a character or a field with a representation, got " +
                        R.name());
    int r = a.r();
    auto k = build_koszul(u, static_cast<std::size_t>(r - 1));
    CompleteHomology out;
    for (int q = 0; q <= r - 2; ++q) {
        out.groups.push_back(chain::homology(k.complex, q));
        out.kappa += (q % 2 ? -1 : 1) * static_cast<long>(out.groups.back().free_rank);
    }
    std::size_t top = static_cast<std::size_t>(r - 1);
    out.top_rank_kernel = static_cast<long>(k.complex.rank(top)) -
                          static_cast<long>(algebra::rank(k.complex.boundary(top)));
    out.euler_characteristic = arrangement::betti_data(a).euler_characteristic;
    long sign = (r - 1) % 2 ? -1 : 1;
    out.top_rank_formula = sign * (static_cast<long>(u.module_rank) * out.euler_characteristic - out.kappa);
    if (out.top_rank_formula != out.top_rank_kernel)
        throw Error(ErrorCode::Disagreement,
                    "top homology rank: kernel gives " + std::to_string(out.top_rank_kernel) +
                        ", Euler characteristic formula gives " + std::to_string(out.top_rank_formula));
    out.groups.push_back(HomologyGroup{static_cast<std::size_t>(out.top_rank_kernel), {}});
    return out;
}

PiPresentation pi_p_presentation_boolean(const Arrangement& a, const Character& ch, const Ring& laurent) {
    auto profile = arrangement::generic_position_profile(a);
    if (!profile.generic_position)
        throw Error(ErrorCode::NotGenericPosition,
                    "the Koszul presentation of pi_p needs a generic section (girth r + 1, n + 1 > r)");
    if (!laurent.is_laurent())
        throw Error(ErrorCode::UnsupportedRing, "pi_p presentations live over K[t,t^-1], got " + laurent.name());
    if (ch.weights.size() != a.size())
        throw Error(ErrorCode::InvalidCharacter, "expected " + std::to_string(a.size()) + " weights");
    auto u = UnitAssignment::from_character(ch, laurent);
    PiPresentation out;
    out.p = a.r() - 1;
    std::size_t deg = static_cast<std::size_t>(out.p + 2);
    auto k = build_koszul(u, deg);
    if (deg <= k.complex.top_degree()) {
        out.presentation = k.complex.boundary(deg);
    } else {
        out.presentation = Matrix(laurent, k.complex.rank(deg - 1), 0);
    }
    out.cokernel = chain::cokernel(out.presentation);
    return out;
}

}  // namespace arrtwist::koszul
