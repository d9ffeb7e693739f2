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

#include "arrtwist/algebra/matrix.hpp"

#include <sstream>

#include "arrtwist/error.hpp"

namespace arrtwist::algebra {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring)) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
    return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(rows[i][j].ring() == ring))
                throw Error(ErrorCode::MixedRings, "matrix entry outside " + ring.name());
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_integers(const Ring& ring, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) {
        s.emplace_back();
        for (long v : r) s.back().push_back(Scalar::from_integer(ring, v));
    }
    if (s.empty()) return Matrix(ring, 0, 0);
    return from_rows(ring, s);
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw Error(ErrorCode::InvalidInput, "block does not fit");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::map(const std::function<Scalar(const Scalar&)>& f, const Ring& target) const {
    Matrix out(target, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
    return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Scalar& f) {
    if (f.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Scalar& s = (*this)(src, j);
        if (!s.is_zero()) (*this)(dst, j) += f * s;
    }
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Scalar& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& s = (*this)(i, src);
        if (!s.is_zero()) (*this)(i, dst) += f * s;
    }
}

void Matrix::scale_row(std::size_t r, const Scalar& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= f;
}

void Matrix::scale_col(std::size_t c, const Scalar& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) *= f;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.ring_ == b.ring_))
        throw Error(ErrorCode::MixedRings, "matrix product over " + a.ring_.name() + " and " + b.ring_.name());
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
    Matrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) c(i, j) += x * y;
            }
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::InvalidInput, "matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::InvalidInput, "matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix c = m;
    for (auto& x : c.data_) x = s * x;
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
        out << "]";
    }
    out << "]";
    return out.str();
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(blocks[0].ring(), r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

}  // namespace arrtwist::algebra
