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

#include "arrtwist/chain/complex.hpp"

#include <sstream>

#include "arrtwist/error.hpp"

namespace arrtwist::chain {

using algebra::SmithForm;
using algebra::smith_normal_form;

FreeChainComplex FreeChainComplex::create(Ring ring, std::vector<std::size_t> ranks,
                                          std::vector<Matrix> boundaries) {
    if (ranks.empty()) ranks.push_back(0);
    if (boundaries.size() != ranks.size() - 1)
        throw Error(ErrorCode::InvalidComplex, "expected " + std::to_string(ranks.size() - 1) +
                                                   " boundary matrices, got " +
                                                   std::to_string(boundaries.size()));
    for (std::size_t q = 1; q < ranks.size(); ++q) {
        const Matrix& d = boundaries[q - 1];
        if (d.rows() != ranks[q - 1] || d.cols() != ranks[q])
            throw Error(ErrorCode::InvalidComplex,
                        "d_" + std::to_string(q) + " has shape " + std::to_string(d.rows()) + "x" +
                            std::to_string(d.cols()) + ", expected " + std::to_string(ranks[q - 1]) +
                            "x" + std::to_string(ranks[q]));
        if (d.rows() * d.cols() > 0 && !(d.ring() == ring))
            throw Error(ErrorCode::MixedRings, "d_" + std::to_string(q) + " is not over " + ring.name());
    }
    FreeChainComplex c;
    c.ring_ = ring;
    c.ranks_ = std::move(ranks);
    c.boundaries_.reserve(boundaries.size());
    for (std::size_t q = 1; q < c.ranks_.size(); ++q) {
        const Matrix& d = boundaries[q - 1];
        c.boundaries_.push_back(d.rows() * d.cols() == 0 ? Matrix(ring, d.rows(), d.cols()) : d);
    }
    for (std::size_t q = 2; q < c.ranks_.size(); ++q) {
        if (!(c.boundaries_[q - 2] * c.boundaries_[q - 1]).is_zero())
            throw Error(ErrorCode::InvalidComplex,
                        "d_" + std::to_string(q - 1) + " o d_" + std::to_string(q) + " is not zero");
    }
    return c;
}

Matrix FreeChainComplex::boundary(std::size_t q) const {
    if (q >= 1 && q < ranks_.size()) return boundaries_[q - 1];
    return Matrix(ring_, q == 0 ? 0 : rank(q - 1), rank(q));
}

FreeChainComplex FreeChainComplex::truncate(std::size_t top) const {
    FreeChainComplex c;
    c.ring_ = ring_;
    for (std::size_t q = 0; q <= top; ++q) c.ranks_.push_back(rank(q));
    for (std::size_t q = 1; q <= top; ++q) c.boundaries_.push_back(boundary(q));
    return c;
}

std::string HomologyGroup::to_string() const {
    std::ostringstream out;
    out << "free " << free_rank;
    if (!torsion.empty()) {
        out << ", torsion [";
        for (std::size_t i = 0; i < torsion.size(); ++i) out << (i ? ", " : "") << torsion[i].to_string();
        out << "]";
    }
    return out.str();
}

namespace {

std::vector<Scalar> nonunit(const std::vector<Scalar>& divisors) {
    std::vector<Scalar> out;
    for (const auto& d : divisors)
        if (!d.is_unit()) out.push_back(d);
    return out;
}

}  // namespace

HomologyGroup homology(const FreeChainComplex& c, std::size_t q) {
    if (q > c.top_degree())
        throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(q) +
                                                     " is above the top degree " +
                                                     std::to_string(c.top_degree()));
    std::size_t in = q == 0 ? 0 : algebra::rank(c.boundary(q));
    HomologyGroup h;
    if (q == c.top_degree()) {
        h.free_rank = c.rank(q) - in;
        return h;
    }
    SmithForm s = smith_normal_form(c.boundary(q + 1));
    h.free_rank = c.rank(q) - in - s.rank;
    h.torsion = nonunit(s.divisors);
    return h;
}

std::vector<HomologyGroup> homology_all(const FreeChainComplex& c) {
    std::vector<HomologyGroup> out;
    for (std::size_t q = 0; q <= c.top_degree(); ++q) out.push_back(homology(c, q));
    return out;
}

HomologyGroup cokernel(const Matrix& a) {
    HomologyGroup h;
    if (a.cols() == 0) {
        h.free_rank = a.rows();
        return h;
    }
    SmithForm s = smith_normal_form(a);
    h.free_rank = a.rows() - s.rank;
    h.torsion = nonunit(s.divisors);
    return h;
}

long euler_characteristic(const FreeChainComplex& c) {
    long chi = 0;
    for (std::size_t q = 0; q <= c.top_degree(); ++q)
        chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(q));
    return chi;
}

namespace {

std::string list(const std::vector<Scalar>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + "]";
}

// Basis change W_q (columns in the old basis) putting every differential into
// the canonical form: d(n_i) = a_i z_i, with the z_i heading the kernel part.
std::vector<Matrix> canonical_bases(const FreeChainComplex& c, std::size_t top) {
    const Ring& R = c.ring();
    std::vector<std::size_t> s(top + 2, 0);
    std::vector<Matrix> N(top + 1), Z(top + 1), Vinv(top + 1);
    for (std::size_t q = 0; q <= top; ++q) {
        Matrix V;
        if (q == 0 || c.rank(q) == 0 || c.rank(q - 1) == 0) {
            V = Matrix::identity(R, c.rank(q));
            s[q] = 0;
        } else {
            SmithForm f = smith_normal_form(c.boundary(q), true);
            V = *f.right;
            s[q] = f.rank;
        }
        N[q] = V.block(0, 0, V.rows(), s[q]);
        Z[q] = V.block(0, s[q], V.rows(), V.cols() - s[q]);
        Vinv[q] = *algebra::inverse(V);
    }
    for (std::size_t q = 1; q <= top; ++q) {
        if (s[q] == 0) continue;
        Matrix image = Vinv[q - 1] * (c.boundary(q) * N[q]);
        Matrix E = image.block(s[q - 1], 0, image.rows() - s[q - 1], image.cols());
        SmithForm f = smith_normal_form(E, true);
        N[q] = N[q] * *f.right;
        Z[q - 1] = Z[q - 1] * *algebra::inverse(*f.left);
    }
    std::vector<Matrix> W;
    for (std::size_t q = 0; q <= top; ++q) {
        Matrix w(R, c.rank(q), c.rank(q));
        w.set_block(0, 0, N[q]);
        w.set_block(0, s[q], Z[q]);
        W.push_back(std::move(w));
    }
    return W;
}

}  // namespace

IsomorphismReport decide_isomorphic(const FreeChainComplex& a, const FreeChainComplex& b,
                                    bool want_witness) {
    if (!(a.ring() == b.ring()))
        throw Error(ErrorCode::MixedRings,
                    "complexes over " + a.ring().name() + " and " + b.ring().name());
    IsomorphismReport report;
    std::size_t top = std::max(a.top_degree(), b.top_degree());
    for (std::size_t q = 0; q <= top; ++q) {
        if (a.rank(q) != b.rank(q)) {
            report.reason = "C_" + std::to_string(q) + " has rank " + std::to_string(a.rank(q)) +
                            " vs " + std::to_string(b.rank(q));
            return report;
        }
    }
    bool same = true;
    for (std::size_t q = 1; q <= top; ++q) {
        auto da = smith_normal_form(a.boundary(q)).divisors;
        auto db = smith_normal_form(b.boundary(q)).divisors;
        if (same && da != db) {
            same = false;
            report.reason = "invariant factors of d_" + std::to_string(q) + " differ: " + list(da) +
                            " vs " + list(db);
        }
        report.divisors_a.push_back(std::move(da));
        report.divisors_b.push_back(std::move(db));
    }
    if (!same) return report;
    report.isomorphic = true;
    report.reason = "equal ranks and equal invariant factors in every degree";
    if (want_witness) {
        auto Wa = canonical_bases(a, top);
        auto Wb = canonical_bases(b, top);
        std::vector<Matrix> f;
        for (std::size_t q = 0; q <= top; ++q) f.push_back(Wb[q] * *algebra::inverse(Wa[q]));
        report.witness = std::move(f);
    }
    return report;
}

}  // namespace arrtwist::chain
