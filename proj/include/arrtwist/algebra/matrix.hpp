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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arrtwist/algebra/scalar.hpp"

namespace arrtwist::algebra {

// Dense row-major matrix over a single ring.
class Matrix {
  public:
    Matrix() = default;
    Matrix(Ring ring, std::size_t rows, std::size_t cols);

    static Matrix identity(const Ring& ring, std::size_t n);
    static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_integers(const Ring& ring, const std::vector<std::vector<long>>& rows);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Matrix map(const std::function<Scalar(const Scalar&)>& f, const Ring& target) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row dst += f * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const Scalar& f);
    // col dst += f * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const Scalar& f);
    void scale_row(std::size_t r, const Scalar& f);
    void scale_col(std::size_t c, const Scalar& f);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

  private:
    Ring ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// Rank over the fraction field, by fraction-free elimination.
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
// Inverse of a matrix whose determinant is a unit; nullopt otherwise.
std::optional<Matrix> inverse(const Matrix& m);

struct SmithForm {
    std::vector<Scalar> divisors;  // normalized, each dividing the next
    std::size_t rank = 0;
    std::optional<Matrix> left;   // U
    std::optional<Matrix> right;  // V, with U * M * V diagonal
};

SmithForm smith_normal_form(const Matrix& m, bool with_transforms = false);

// Columns spanning the kernel of m (a saturated direct summand), each
// normalized so its first nonzero entry is a canonical representative.
Matrix kernel_basis(const Matrix& m);

// Block diagonal matrix with the given square blocks.
Matrix direct_sum(const std::vector<Matrix>& blocks);

}  // namespace arrtwist::algebra
