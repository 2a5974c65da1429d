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

#include "superhoch/supermodule.hpp"

#include <algorithm>

namespace superhoch {

namespace {

void canonicalize(std::vector<SparseVector>& actions, std::size_t bound, Field field) {
    for (auto& v : actions) {
        for (auto& t : v) {
            if (t.index >= bound) throw Error(ErrorCode::input, "module action index out of range");
            t.coeff = t.coeff.in(field);
        }
        std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
        SparseVector merged;
        for (auto& t : v) {
            if (!merged.empty() && merged.back().index == t.index)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(t);
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
        v = std::move(merged);
    }
}

bool same(const std::vector<SparseVector>& x, const std::vector<SparseVector>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t n = 0; n < x.size(); ++n) {
        if (x[n].size() != y[n].size()) return false;
        for (std::size_t t = 0; t < x[n].size(); ++t)
            if (x[n][t].index != y[n][t].index || x[n][t].coeff != y[n][t].coeff) return false;
    }
    return true;
}

}  // namespace

SuperBimodule::SuperBimodule(Field field, std::size_t algebra_dim, std::vector<Parity> parities,
                             std::vector<SparseVector> left, std::vector<SparseVector> right)
    : field_(field), algebra_dim_(algebra_dim), parities_(std::move(parities)), left_(std::move(left)),
      right_(std::move(right)) {
    const std::size_t m = parities_.size();
    if (left_.size() != algebra_dim_ * m || right_.size() != algebra_dim_ * m)
        throw Error(ErrorCode::input, "module action tables must have dim(A) * dim(P) entries");
    canonicalize(left_, m, field_);
    canonicalize(right_, m, field_);
}

Vector SuperBimodule::act_left(std::span<const Scalar> x, std::span<const Scalar> p) const {
    if (x.size() != algebra_dim_ || p.size() != dim()) throw Error(ErrorCode::dimension, "left action size mismatch");
    Vector out(dim());
    for (std::size_t i = 0; i < algebra_dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t a = 0; a < dim(); ++a) {
            if (p[a].is_zero()) continue;
            Scalar w = x[i] * p[a];
            for (const auto& t : left(i, a)) out[t.index] += w * t.coeff;
        }
    }
    return out;
}

Vector SuperBimodule::act_right(std::span<const Scalar> p, std::span<const Scalar> x) const {
    if (x.size() != algebra_dim_ || p.size() != dim()) throw Error(ErrorCode::dimension, "right action size mismatch");
    Vector out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
        if (p[a].is_zero()) continue;
        for (std::size_t i = 0; i < algebra_dim_; ++i) {
            if (x[i].is_zero()) continue;
            Scalar w = p[a] * x[i];
            for (const auto& t : right(a, i)) out[t.index] += w * t.coeff;
        }
    }
    return out;
}

SuperBimodule SuperBimodule::in(Field field) const {
    return SuperBimodule(field, algebra_dim_, parities_, left_, right_);
}

bool operator==(const SuperBimodule& x, const SuperBimodule& y) {
    return x.field_ == y.field_ && x.algebra_dim_ == y.algebra_dim_ && x.parities_ == y.parities_ &&
           same(x.left_, y.left_) && same(x.right_, y.right_);
}

ValidationReport validate(const SuperAlgebra& a, const SuperBimodule& p) {
    ValidationReport report;
    const std::size_t d = a.dim(), m = p.dim();
    if (p.algebra_dim() != d) {
        report.violations.push_back({"dimension", {}, "module is over an algebra of different dimension"});
        return report;
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t b = 0; b < m; ++b) {
            for (const auto& t : p.left(i, b))
                if (p.parity(t.index) != a.parity(i) + p.parity(b)) {
                    report.violations.push_back({"left-grading", {i, b, t.index}, "left action breaks parity"});
                    return report;
                }
            for (const auto& t : p.right(b, i))
                if (p.parity(t.index) != a.parity(i) + p.parity(b)) {
                    report.violations.push_back({"right-grading", {b, i, t.index}, "right action breaks parity"});
                    return report;
                }
        }
    auto ua = [d](std::size_t i) {
        Vector v(d);
        v[i] = 1;
        return v;
    };
    auto up = [m](std::size_t b) {
        Vector v(m);
        v[b] = 1;
        return v;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector xy = multiply(a, ua(i), ua(j));
            for (std::size_t b = 0; b < m; ++b) {
                // (xy)p = x(yp)
                if (p.act_left(xy, up(b)) != p.act_left(ua(i), p.act_left(ua(j), up(b)))) {
                    report.violations.push_back({"left-associativity", {i, j, b}, "(xy).p != x.(y.p)"});
                    return report;
                }
                // (xp)y = x(py)
                if (p.act_right(p.act_left(ua(i), up(b)), ua(j)) != p.act_left(ua(i), p.act_right(up(b), ua(j)))) {
                    report.violations.push_back({"middle-associativity", {i, b, j}, "(x.p).y != x.(p.y)"});
                    return report;
                }
                // (px)y = p(xy)
                if (p.act_right(p.act_right(up(b), ua(i)), ua(j)) != p.act_right(up(b), xy)) {
                    report.violations.push_back({"right-associativity", {b, i, j}, "(p.x).y != p.(xy)"});
                    return report;
                }
            }
        }
    return report;
}

SuperBimodule self_module(const SuperAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<SparseVector> left(d * d), right(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            left[i * d + j] = a.product(i, j);
            right[j * d + i] = a.product(j, i);
        }
    return SuperBimodule(a.field(), d, a.parities(), std::move(left), std::move(right));
}

SuperBimodule zero_module(const SuperAlgebra& a) { return SuperBimodule(a.field(), a.dim(), {}, {}, {}); }

SuperAlgebra square_zero_algebra(const SuperAlgebra& a, const SuperBimodule& p) {
    ValidationReport r = validate(a, p);
    if (!r.ok()) throw Error(ErrorCode::input, "invalid module: " + r.violations.front().detail);
    const std::size_t d = a.dim(), m = p.dim(), n = d + m;
    std::vector<Parity> parities = a.parities();
    parities.insert(parities.end(), p.parities().begin(), p.parities().end());
    std::vector<std::string> names;
    if (a.has_explicit_names()) {
        names = a.names();
        for (std::size_t b = 0; b < m; ++b) names.push_back("p" + std::to_string(b));
    }
    std::vector<SparseVector> table(n * n);
    auto shifted = [d](const SparseVector& v) {
        SparseVector out = v;
        for (auto& t : out) t.index += d;
        return out;
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) table[i * n + j] = a.product(i, j);
        for (std::size_t b = 0; b < m; ++b) {
            table[i * n + (d + b)] = shifted(p.left(i, b));
            table[(d + b) * n + i] = shifted(p.right(b, i));
        }
    }
    return SuperAlgebra(a.field(), std::move(parities), std::move(names), std::move(table));
}

SuperBimodule hom_module(const SuperAlgebra& a, const SuperBimodule& p) {
    const std::size_t d = a.dim(), m = p.dim(), dm = d * m;
    std::vector<Parity> parities(dm);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t b = 0; b < m; ++b) parities[i * m + b] = p.parity(b) - a.parity(i);
    std::vector<SparseVector> left(d * dm), right(dm * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t b = 0; b < m; ++b) {
                const std::size_t f = i * m + b;  // f: e_i -> p_b
                // (x * f)(e_i) = x . p_b
                SparseVector l;
                for (const auto& t : p.left(x, b)) l.push_back({i * m + t.index, t.coeff});
                left[x * dm + f] = std::move(l);
                // (f * x)(e_k) = f(x e_k) - f(x) e_k
                Vector r(dm);
                for (std::size_t k = 0; k < d; ++k)
                    for (const auto& t : a.product(x, k))
                        if (t.index == i) r[k * m + b] += t.coeff;
                if (x == i)
                    for (std::size_t k = 0; k < d; ++k)
                        for (const auto& t : p.right(b, k)) r[k * m + t.index] -= t.coeff;
                right[f * d + x] = sparse_from_dense(r);
            }
    return SuperBimodule(a.field(), d, std::move(parities), std::move(left), std::move(right));
}

}  // namespace superhoch
