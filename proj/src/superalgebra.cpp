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

#include "superhoch/superalgebra.hpp"

#include <algorithm>
#include <regex>

#include "superhoch/supermodule.hpp"

namespace superhoch {

namespace {

void normalize(SparseVector& v, std::size_t bound, const char* what) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    SparseVector merged;
    for (auto& t : v) {
        if (t.index >= bound) throw Error(ErrorCode::input, std::string(what) + " index out of range");
        if (!merged.empty() && merged.back().index == t.index)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    v = std::move(merged);
}

std::optional<Vector> find_unit(std::size_t d, const std::vector<SparseVector>& table) {
    // Unknown u: sum_i u_i e_i e_j = e_j and sum_i u_i e_j e_i = e_j.
    DenseMatrix m(2 * d * d, d);
    Vector rhs(2 * d * d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            std::size_t r1 = j * d + k, r2 = d * d + j * d + k;
            if (j == k) rhs[r1] = rhs[r2] = 1;
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& t : table[i * d + j]) m(j * d + t.index, i) += t.coeff;
            for (const auto& t : table[j * d + i]) m(d * d + j * d + t.index, i) += t.coeff;
        }
    return solve(m, rhs);
}

std::string index_list(std::initializer_list<std::size_t> xs) {
    std::string s = "(";
    bool first = true;
    for (auto x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

SparseVector sparse_from_dense(std::span<const Scalar> v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({i, v[i]});
    return out;
}

SuperAlgebra::SuperAlgebra(Field field, std::vector<Parity> parities, std::vector<std::string> names,
                           std::vector<SparseVector> table)
    : field_(field), parities_(std::move(parities)), names_(std::move(names)), table_(std::move(table)) {
    const std::size_t d = parities_.size();
    if (d == 0) throw Error(ErrorCode::input, "algebra dimension must be at least 1");
    if (table_.size() != d * d) throw Error(ErrorCode::input, "structure table must have dim^2 entries");
    explicit_names_ = !names_.empty();
    if (names_.empty())
        for (std::size_t i = 0; i < d; ++i) names_.push_back("e" + std::to_string(i));
    if (names_.size() != d) throw Error(ErrorCode::input, "one name per basis element required");
    for (auto& v : table_) {
        for (auto& t : v) t.coeff = t.coeff.in(field_);
        normalize(v, d, "structure constant");
    }
    unit_ = find_unit(d, table_);
}

Scalar SuperAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : product(i, j))
        if (t.index == k) return t.coeff;
    return Scalar(0).in(field_);
}

SuperAlgebra SuperAlgebra::in(Field field) const {
    std::vector<SparseVector> table = table_;
    for (auto& v : table)
        for (auto& t : v) t.coeff = t.coeff.in(field);
    return SuperAlgebra(field, parities_, explicit_names_ ? names_ : std::vector<std::string>{}, std::move(table));
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
    if (a.field_ != b.field_ || a.parities_ != b.parities_ || a.names_ != b.names_) return false;
    for (std::size_t n = 0; n < a.table_.size(); ++n) {
        const auto &x = a.table_[n], &y = b.table_[n];
        if (x.size() != y.size()) return false;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x[t].index != y[t].index || x[t].coeff != y[t].coeff) return false;
    }
    return true;
}

SuperElement SuperElement::basis(std::size_t dim, std::size_t i, Parity p) {
    SuperElement e{Vector(dim), p};
    e.coords.at(i) = 1;
    return e;
}

SuperElement SuperElement::homogeneous(Vector coords, Parity p, const std::vector<Parity>& parities) {
    if (coords.size() != parities.size()) throw Error(ErrorCode::dimension, "element has wrong dimension");
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero() && parities[i] != p)
            throw Error(ErrorCode::input, "element is not homogeneous of parity " + std::to_string(p.value()));
    return {std::move(coords), p};
}

SuperElement SuperElement::detect(Vector coords, const std::vector<Parity>& parities) {
    if (coords.size() != parities.size()) throw Error(ErrorCode::dimension, "element has wrong dimension");
    std::optional<Parity> p;
    bool mixed = false;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (p && *p != parities[i]) mixed = true;
        p = parities[i];
    }
    if (mixed) p.reset();
    // The zero vector is homogeneous of every parity; call it even.
    if (!mixed && !p) p = Parity::even();
    return {std::move(coords), p};
}

Parity SuperElement::require_parity() const {
    if (!parity) throw Error(ErrorCode::input, "a homogeneous element is required");
    return *parity;
}

Vector multiply(const SuperAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y) {
    const std::size_t d = a.dim();
    if (x.size() != d || y.size() != d) throw Error(ErrorCode::dimension, "element has wrong dimension");
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            Scalar w = x[i] * y[j];
            for (const auto& t : a.product(i, j)) out[t.index] += w * t.coeff;
        }
    }
    return out;
}

SuperElement multiply(const SuperAlgebra& a, const SuperElement& x, const SuperElement& y) {
    SuperElement out{multiply(a, x.coords, y.coords), std::nullopt};
    if (x.parity && y.parity) out.parity = *x.parity + *y.parity;
    return out;
}

ValidationReport validate(const SuperAlgebra& a, AssociativityMode mode) {
    ValidationReport report;
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d && report.ok(); ++i)
        for (std::size_t j = 0; j < d && report.ok(); ++j)
            for (const auto& t : a.product(i, j))
                if (a.parity(t.index) != a.parity(i) + a.parity(j)) {
                    report.violations.push_back(
                        {"grading", {i, j, t.index},
                         a.name(i) + "*" + a.name(j) + " has a component on " + a.name(t.index) + " of parity " +
                             std::to_string(a.parity(t.index).value()) + ", expected " +
                             std::to_string((a.parity(i) + a.parity(j)).value())});
                    break;
                }

    bool literal = mode == AssociativityMode::cyclic_literal;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector ei(d), ej(d), ek(d);
                ei[i] = ej[j] = ek[k] = 1;
                Vector lhs = multiply(a, multiply(a, ei, ej), ek);
                Vector rhs = literal ? multiply(a, multiply(a, ej, ek), ei) : multiply(a, ei, multiply(a, ej, ek));
                if (lhs != rhs) {
                    report.violations.push_back(
                        {literal ? "cyclic-associativity" : "associativity", {i, j, k},
                         (literal ? "(ab)c != (bc)a at " : "(ab)c != a(bc) at ") + index_list({i, j, k})});
                    return report;
                }
            }
    return report;
}

SuperAlgebra make_named(const std::string& name, const NamedParams& params, Field field) {
    using P = Parity;
    auto one = Scalar(1).in(field);
    if (name == "ground") return SuperAlgebra(field, {P::even()}, {"e"}, {{{0, one}}});
    if (name == "dual_even" || name == "dual_odd" || name == "clifford1") {
        P second = name == "dual_even" ? P::even() : P::odd();
        std::string label = name == "dual_even" ? "x" : (name == "dual_odd" ? "eps" : "g");
        SparseVector sq;
        if (name == "clifford1") sq = {{0, one}};
        return SuperAlgebra(field, {P::even(), second}, {"e", label},
                            {{{0, one}}, {{1, one}}, {{1, one}}, sq});
    }
    if (name == "matrix") {
        const std::size_t n = params.p + params.q;
        if (n == 0) throw Error(ErrorCode::input, "matrix(p|q) needs p + q > 0");
        std::vector<P> parities;
        std::vector<std::string> names;
        auto block = [&](std::size_t r) { return P(r >= params.p ? 1 : 0); };
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                parities.push_back(block(r) + block(c));
                names.push_back("E" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
            }
        std::vector<SparseVector> table(n * n * n * n);
        // E_ab E_cd = delta_bc E_ad
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t d = 0; d < n; ++d) table[(a * n + b) * n * n + (b * n + d)] = {{a * n + d, one}};
        return SuperAlgebra(field, std::move(parities), std::move(names), std::move(table));
    }
    if (name == "square_zero") {
        if (params.base.empty()) throw Error(ErrorCode::input, "square_zero needs a base algebra");
        SuperAlgebra base = parse_named(params.base, field);
        SuperAlgebra sq = square_zero_algebra(base, self_module(base));
        std::vector<std::string> names = base.names();
        for (const auto& n : base.names()) names.push_back("p_" + n);
        std::vector<SparseVector> table;
        for (std::size_t i = 0; i < sq.dim(); ++i)
            for (std::size_t j = 0; j < sq.dim(); ++j) table.push_back(sq.product(i, j));
        return SuperAlgebra(field, sq.parities(), std::move(names), std::move(table));
    }
    throw Error(ErrorCode::input, "unknown algebra name '" + name + "'");
}

SuperAlgebra parse_named(const std::string& spec, Field field) {
    static const std::regex matrix_re(R"(matrix\((\d+)\|(\d+)\))");
    static const std::regex square_re(R"(square_zero\((.+)\))");
    std::smatch m;
    if (std::regex_match(spec, m, matrix_re))
        return make_named("matrix", {std::stoul(m[1]), std::stoul(m[2]), {}}, field);
    if (std::regex_match(spec, m, square_re)) return make_named("square_zero", {0, 0, m[1]}, field);
    return make_named(spec, {}, field);
}

LinearMap inner_derivation(const SuperAlgebra& a, const SuperElement& element, Side side) {
    const std::size_t d = a.dim();
    Parity pa = element.require_parity();
    SuperElement::homogeneous(element.coords, pa, a.parities());
    LinearMap map{DenseMatrix(d, d), pa};
    for (std::size_t j = 0; j < d; ++j) {
        Vector b(d);
        b[j] = 1;
        Vector ab = multiply(a, element.coords, b), ba = multiply(a, b, element.coords);
        Scalar s = koszul(pa, a.parity(j));
        for (std::size_t k = 0; k < d; ++k)
            map.matrix(k, j) = side == Side::left ? ab[k] - s * ba[k] : ba[k] - s * ab[k];
    }
    return map;
}

bool is_derivation(const SuperAlgebra& a, const LinearMap& dmap, Side side) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector ei(d), ej(d);
            ei[i] = ej[j] = 1;
            Vector lhs = dmap.apply(multiply(a, ei, ej));
            Vector t1 = multiply(a, dmap.apply(ei), ej), t2 = multiply(a, ei, dmap.apply(ej));
            Scalar s1 = side == Side::left ? Scalar(1) : koszul(dmap.parity, a.parity(j));
            Scalar s2 = side == Side::left ? koszul(dmap.parity, a.parity(i)) : Scalar(1);
            for (std::size_t k = 0; k < d; ++k)
                if (lhs[k] != s1 * t1[k] + s2 * t2[k]) return false;
        }
    return true;
}

LinearMap supercommutator(const LinearMap& d1, const LinearMap& d2) {
    DenseMatrix a = d1.matrix * d2.matrix, b = d2.matrix * d1.matrix;
    Scalar s = koszul(d1.parity, d2.parity);
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - s * b(r, c);
    return {std::move(out), d1.parity + d2.parity};
}

std::vector<SparseVector> commutator_bracket(const SuperAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<SparseVector> out(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector v(d);
            for (const auto& t : a.product(i, j)) v[t.index] += t.coeff;
            Scalar s = koszul(a.parity(i), a.parity(j));
            for (const auto& t : a.product(j, i)) v[t.index] -= s * t.coeff;
            out[i * d + j] = sparse_from_dense(v);
        }
    return out;
}

ValidationReport check_lie_superalgebra(const std::vector<Parity>& par, const std::vector<SparseVector>& bracket) {
    const std::size_t d = par.size();
    if (bracket.size() != d * d) throw Error(ErrorCode::input, "bracket table must have dim^2 entries");
    ValidationReport report;
    auto br = [&](std::span<const Scalar> x, std::span<const Scalar> y) {
        Vector out(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (y[j].is_zero()) continue;
                for (const auto& t : bracket[i * d + j]) {
                    if (t.index >= d) throw Error(ErrorCode::input, "bracket index out of range");
                    out[t.index] += x[i] * y[j] * t.coeff;
                }
            }
        }
        return out;
    };
    auto unit = [&](std::size_t i) {
        Vector v(d);
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector lhs = br(unit(i), unit(j)), rhs = br(unit(j), unit(i));
            Scalar s = -koszul(par[i], par[j]);
            for (std::size_t k = 0; k < d; ++k)
                if (lhs[k] != s * rhs[k]) {
                    report.violations.push_back({"antisymmetry", {i, j}, "[a,b] != -(-1)^{ab}[b,a]"});
                    i = j = d;  // stop at the first witness
                    break;
                }
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                // (-1)^{ac}[[a,b],c] + (-1)^{ba}[[b,c],a] + (-1)^{cb}[[c,a],b] = 0
                Vector t1 = br(br(unit(i), unit(j)), unit(k));
                Vector t2 = br(br(unit(j), unit(k)), unit(i));
                Vector t3 = br(br(unit(k), unit(i)), unit(j));
                Scalar s1 = koszul(par[i], par[k]), s2 = koszul(par[j], par[i]), s3 = koszul(par[k], par[j]);
                for (std::size_t m = 0; m < d; ++m)
                    if (!(s1 * t1[m] + s2 * t2[m] + s3 * t3[m]).is_zero()) {
                        report.violations.push_back({"jacobi", {i, j, k}, "super Jacobi sum is nonzero"});
                        return report;
                    }
            }
    return report;
}

}  // namespace superhoch
