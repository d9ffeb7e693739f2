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

// Rank, determinant, inverse and Smith form over Euclidean rings.

#include "arrtwist/algebra/matrix.hpp"
#include "arrtwist/error.hpp"

namespace arrtwist::algebra {

namespace {

// Row with the smallest nonzero entry in column c among rows [from, rows).
std::optional<std::size_t> smallest_in_column(const Matrix& a, std::size_t c, std::size_t from) {
    std::optional<std::size_t> best;
    mpz_class best_size;
    for (std::size_t i = from; i < a.rows(); ++i) {
        if (a(i, c).is_zero()) continue;
        mpz_class s = euclidean_size(a(i, c));
        if (!best || s < best_size) {
            best = i;
            best_size = s;
        }
    }
    return best;
}

// Echelon form; returns the rank and the pivot product with sign.
std::pair<std::size_t, Scalar> eliminate(Matrix a) {
    const Ring& R = a.ring();
    Scalar det = Scalar::one(R);
    std::size_t r = 0;
    if (R.is_field()) {
        for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
            auto p = smallest_in_column(a, c, r);
            if (!p) continue;
            if (*p != r) {
                a.swap_rows(*p, r);
                det = -det;
            }
            Scalar inv = a(r, c).inverse();
            det *= a(r, c);
            for (std::size_t i = r + 1; i < a.rows(); ++i)
                if (!a(i, c).is_zero()) a.add_row_multiple(i, r, -(a(i, c) * inv));
            ++r;
        }
        return {r, det};
    }
    // Bareiss: entries stay minors of the input, each division is exact.
    Scalar prev = Scalar::one(R);
    int sign = 1;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        auto p = smallest_in_column(a, c, r);
        if (!p) continue;
        if (*p != r) {
            a.swap_rows(*p, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                a(i, j) = exact_quotient(a(r, c) * a(i, j) - a(i, c) * a(r, j), prev);
            a(i, c) = Scalar::zero(R);
        }
        prev = a(r, c);
        ++r;
    }
    det = sign > 0 ? prev : -prev;
    return {r, det};
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return eliminate(m).first;
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
    if (m.rows() == 0) return Scalar::one(m.ring());
    auto [r, det] = eliminate(m);
    if (r < m.rows()) return Scalar::zero(m.ring());
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidInput, "inverse of a non-square matrix");
    const Ring& R = m.ring();
    std::size_t n = m.rows();
    Matrix a = m, inv = Matrix::identity(R, n);
    for (std::size_t k = 0; k < n; ++k) {
        // Euclid on column k, rows k.., until a single nonzero entry remains.
        for (;;) {
            auto p = smallest_in_column(a, k, k);
            if (!p) return std::nullopt;
            a.swap_rows(*p, k);
            inv.swap_rows(*p, k);
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a(i, k).is_zero()) continue;
                Scalar q = divmod(a(i, k), a(k, k)).first;
                a.add_row_multiple(i, k, -q);
                inv.add_row_multiple(i, k, -q);
                if (!a(i, k).is_zero()) clean = false;
            }
            if (clean) break;
        }
        if (!a(k, k).is_unit()) return std::nullopt;
        Scalar u = a(k, k).inverse();
        a.scale_row(k, u);
        inv.scale_row(k, u);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            Scalar f = -a(i, k);
            a.add_row_multiple(i, k, f);
            inv.add_row_multiple(i, k, f);
        }
    }
    return inv;
}

SmithForm smith_normal_form(const Matrix& m, bool with_transforms) {
    const Ring& R = m.ring();
    if (R.kind() == RingKind::Rational || R.kind() == RingKind::PrimeField ||
        R.kind() == RingKind::Cyclotomic || R.kind() == RingKind::Integer || R.is_laurent()) {
        // supported
    } else {
        throw Error(ErrorCode::UnsupportedRing, "no Smith form over " + R.name());
    }
    Matrix a = m;
    std::optional<Matrix> U, V;
    if (with_transforms) {
        U = Matrix::identity(R, m.rows());
        V = Matrix::identity(R, m.cols());
    }
    auto row_add = [&](std::size_t dst, std::size_t src, const Scalar& f) {
        a.add_row_multiple(dst, src, f);
        if (U) U->add_row_multiple(dst, src, f);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Scalar& f) {
        a.add_col_multiple(dst, src, f);
        if (V) V->add_col_multiple(dst, src, f);
    };
    const bool field = R.is_field();
    std::size_t rows = a.rows(), cols = a.cols();
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        bool found = true;
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::optional<std::pair<std::size_t, std::size_t>> best;
            mpz_class best_size;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    if (a(i, j).is_zero()) continue;
                    mpz_class s = euclidean_size(a(i, j));
                    if (!best || s < best_size) {
                        best = {i, j};
                        best_size = s;
                    }
                }
            if (!best) {
                found = false;
                break;
            }
            a.swap_rows(k, best->first);
            if (U) U->swap_rows(k, best->first);
            a.swap_cols(k, best->second);
            if (V) V->swap_cols(k, best->second);

            bool clean = true;
            Scalar pivot_inv = field ? a(k, k).inverse() : Scalar::one(R);
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (a(i, k).is_zero()) continue;
                Scalar q = field ? a(i, k) * pivot_inv : divmod(a(i, k), a(k, k)).first;
                row_add(i, k, -q);
                if (!a(i, k).is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (a(k, j).is_zero()) continue;
                Scalar q = field ? a(k, j) * pivot_inv : divmod(a(k, j), a(k, k)).first;
                col_add(j, k, -q);
                if (!a(k, j).is_zero()) clean = false;
            }
            if (!clean) continue;
            if (field) break;
            // The pivot must divide the rest of the block.
            bool divisible = true;
            for (std::size_t i = k + 1; i < rows && divisible; ++i)
                for (std::size_t j = k + 1; j < cols; ++j) {
                    if (!divides(a(k, k), a(i, j))) {
                        row_add(k, i, Scalar::one(R));
                        divisible = false;
                        break;
                    }
                }
            if (divisible) break;
        }
        if (!found) break;
        Scalar u = unit_part(a(k, k)).inverse();
        a.scale_row(k, u);
        if (U) U->scale_row(k, u);
    }
    SmithForm out;
    out.rank = k;
    for (std::size_t i = 0; i < k; ++i) out.divisors.push_back(a(i, i));
    out.left = std::move(U);
    out.right = std::move(V);
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    SmithForm s = smith_normal_form(m, true);
    const Matrix& V = *s.right;
    Matrix k = V.block(0, s.rank, V.rows(), V.cols() - s.rank);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        for (std::size_t i = 0; i < k.rows(); ++i) {
            if (k(i, j).is_zero()) continue;
            k.scale_col(j, unit_part(k(i, j)).inverse());
            break;
        }
    }
    return k;
}

}  // namespace arrtwist::algebra
