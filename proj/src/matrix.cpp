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

#include "superhoch/matrix.hpp"

#include <algorithm>
#include <utility>

namespace superhoch {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<Vector>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::dimension, "ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector DenseMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector DenseMatrix::apply(std::span<const Scalar> x) const {
    if (x.size() != cols_) throw Error(ErrorCode::dimension, "matrix-vector size mismatch");
    Vector y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero()) y[r] += a * x[c];
        }
    }
    return y;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorCode::dimension, "matrix product size mismatch");
    DenseMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Scalar& b = rhs(k, c);
                if (!b.is_zero()) out(r, c) += a * b;
            }
        }
    return out;
}

bool DenseMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

RowEchelon row_reduce(DenseMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pr = lead;
        while (pr < rows && m(pr, c).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != lead)
            for (std::size_t k = c; k < cols; ++k) std::swap(m(pr, k), m(lead, k));

        Scalar inv = m(lead, c).inverse();
        support.clear();
        for (std::size_t k = c; k < cols; ++k) {
            if (m(lead, k).is_zero()) continue;
            m(lead, k) *= inv;
            support.push_back(k);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            Scalar factor = m(r, c);
            for (std::size_t k : support) m(r, k) -= factor * m(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

RankKernel rank_and_kernel(const DenseMatrix& m) {
    RowEchelon e = row_reduce(m);
    RankKernel out;
    out.rank = e.pivots.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const DenseMatrix& m) { return row_reduce(m).pivots.size(); }

std::optional<Vector> solve(const DenseMatrix& m, std::span<const Scalar> b) {
    if (b.size() != m.rows())
        throw Error(ErrorCode::dimension, "right-hand side has length " + std::to_string(b.size()) +
                                              ", matrix has " + std::to_string(m.rows()) + " rows");
    DenseMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

Vector SubspaceBuilder::reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::dimension, "vector outside the ambient space");
    Vector w(v.begin(), v.end());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Scalar& lead = w[leads_[b]];
        if (lead.is_zero()) continue;
        Scalar factor = lead;
        for (std::size_t k = leads_[b]; k < ambient_; ++k)
            if (!basis_[b][k].is_zero()) w[k] -= factor * basis_[b][k];
    }
    return w;
}

bool SubspaceBuilder::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool SubspaceBuilder::add(std::span<const Scalar> v) {
    Vector w = reduce(v);
    auto it = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == w.end()) return false;
    std::size_t lead = static_cast<std::size_t>(it - w.begin());
    Scalar inv = w[lead].inverse();
    for (std::size_t k = lead; k < ambient_; ++k) w[k] *= inv;
    // Keep every stored vector reduced against the new lead so later
    // reductions can go in a single pass.
    for (auto& b : basis_) {
        if (b[lead].is_zero()) continue;
        Scalar factor = b[lead];
        for (std::size_t k = lead; k < ambient_; ++k)
            if (!w[k].is_zero()) b[k] -= factor * w[k];
    }
    basis_.push_back(std::move(w));
    leads_.push_back(lead);
    return true;
}

}  // namespace superhoch
