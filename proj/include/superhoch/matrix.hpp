/*
   Copyright 2026 The superhoch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPERHOCH_MATRIX_HPP
#define SUPERHOCH_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superhoch/scalar.hpp"

namespace superhoch {

using Vector = std::vector<Scalar>;

/// Row-major dense matrix over a Field.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    Vector apply(std::span<const Scalar> x) const;
    DenseMatrix operator*(const DenseMatrix& rhs) const;
    bool is_zero() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Reduced row echelon form together with its pivot columns (increasing).
struct RowEchelon {
    DenseMatrix reduced;
    std::vector<std::size_t> pivots;
};

// Pivot rule: columns scanned left to right, first nonzero row below the
// current one becomes the pivot row.
RowEchelon row_reduce(DenseMatrix m);

struct RankKernel {
    std::size_t rank = 0;
    /// One vector per free column, free columns in increasing order; the
    /// free coordinate is 1 and the pivot coordinates come from the RREF.
    std::vector<Vector> kernel;
};

RankKernel rank_and_kernel(const DenseMatrix& m);
std::size_t rank(const DenseMatrix& m);

/// Solution with every free variable set to zero, or nullopt if b is not in
/// the column span.
std::optional<Vector> solve(const DenseMatrix& m, std::span<const Scalar> b);

bool is_zero(std::span<const Scalar> v);

/// Incrementally grown row-echelon basis of a subspace.
class SubspaceBuilder {
public:
    explicit SubspaceBuilder(std::size_t ambient) : ambient_(ambient) {}

    /// Adds v; returns true when it enlarged the span.
    bool add(std::span<const Scalar> v);
    bool contains(std::span<const Scalar> v) const;
    std::size_t dimension() const noexcept { return basis_.size(); }

private:
    Vector reduce(std::span<const Scalar> v) const;

    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> leads_;
};

}  // namespace superhoch

#endif  // SUPERHOCH_MATRIX_HPP
