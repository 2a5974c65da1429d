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

#include "superhoch/cohomology.hpp"

namespace superhoch {

namespace {

void require_arity(std::size_t arity) {
    if (arity > max_cohomology_arity)
        throw Error(ErrorCode::unsupported,
                    "arity " + std::to_string(arity) + " is above the cap of " + std::to_string(max_cohomology_arity));
}

}  // namespace

CohomologyGroup cohomology(const SuperAlgebra& a, const SuperBimodule& p, std::size_t arity, Parity parity,
                           bool with_representatives) {
    require_arity(arity);
    CohomologyGroup g;
    g.arity = arity;
    g.parity = parity;
    auto basis = cochain_basis(a, p, arity, parity);
    g.dim_c = basis->size();

    DenseMatrix d_in;  // delta from arity - 1
    if (arity > 0) {
        d_in = delta_matrix(a, p, arity - 1, parity);
        g.dim_b = rank(d_in);
    }
    RankKernel out = rank_and_kernel(delta_matrix(a, p, arity, parity));
    g.dim_z = g.dim_c - out.rank;
    g.dim_h = g.dim_z - g.dim_b;

    if (with_representatives && g.dim_h > 0) {
        SubspaceBuilder span(g.dim_c);
        for (std::size_t c = 0; c < d_in.cols(); ++c) span.add(d_in.column(c));
        for (auto& v : out.kernel) {
            if (g.representatives.size() == g.dim_h) break;
            if (span.add(v)) g.representatives.emplace_back(basis, std::move(v), Target::module);
        }
    }
    return g;
}

CohomologyReport cohomology_report(const SuperAlgebra& a, const SuperBimodule& p, std::size_t max_arity,
                                   const std::vector<Parity>& parities, bool with_representatives) {
    require_arity(max_arity);
    CohomologyReport r;
    r.field = a.field();
    r.max_arity = max_arity;
    for (std::size_t n = 0; n <= max_arity; ++n)
        for (Parity q : parities) r.groups.push_back(cohomology(a, p, n, q, with_representatives));
    return r;
}

std::vector<Vector> supercommutant(const SuperAlgebra& a, const SuperBimodule& p, Parity parity) {
    const std::size_t d = a.dim(), m = p.dim();
    std::vector<std::size_t> unknowns;
    for (std::size_t b = 0; b < m; ++b)
        if (p.parity(b) == parity) unknowns.push_back(b);
    // row (x, c): coefficient of p_c in (-1)^{|m||x|} x.m - m.x
    DenseMatrix eq(d * m, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const std::size_t b = unknowns[u];
        for (std::size_t x = 0; x < d; ++x) {
            const Scalar s = koszul(parity, a.parity(x));
            for (const auto& t : p.left(x, b)) eq(x * m + t.index, u) += s * t.coeff;
            for (const auto& t : p.right(b, x)) eq(x * m + t.index, u) -= t.coeff;
        }
    }
    std::vector<Vector> out;
    for (const auto& k : rank_and_kernel(eq).kernel) {
        Vector v(m);
        for (std::size_t u = 0; u < unknowns.size(); ++u) v[unknowns[u]] = k[u];
        out.push_back(std::move(v));
    }
    return out;
}

DerivationQuotient derivation_quotient(const SuperAlgebra& a, const SuperBimodule& p, Parity parity) {
    const std::size_t d = a.dim(), m = p.dim();
    // unknowns: D(e_j)_b with |p_b| = |e_j| + parity
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::vector<std::ptrdiff_t> slot(d * m, -1);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < m; ++b)
            if (p.parity(b) == a.parity(j) + parity) {
                slot[j * m + b] = static_cast<std::ptrdiff_t>(unknowns.size());
                unknowns.emplace_back(j, b);
            }
    // D(xy) - D(x)y - (-1)^{|D||x|} x D(y) = 0 for every pair of basis elements
    DenseMatrix eq(d * d * m, unknowns.size());
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const std::size_t row = (x * d + y) * m;
            for (const auto& t : a.product(x, y))
                for (std::size_t b = 0; b < m; ++b)
                    if (auto s = slot[t.index * m + b]; s >= 0) eq(row + b, static_cast<std::size_t>(s)) += t.coeff;
            for (std::size_t b = 0; b < m; ++b) {
                if (auto s = slot[x * m + b]; s >= 0)
                    for (const auto& t : p.right(b, y)) eq(row + t.index, static_cast<std::size_t>(s)) -= t.coeff;
                if (auto s = slot[y * m + b]; s >= 0) {
                    const Scalar sign_x = koszul(parity, a.parity(x));
                    for (const auto& t : p.left(x, b)) eq(row + t.index, static_cast<std::size_t>(s)) -= sign_x * t.coeff;
                }
            }
        }
    DerivationQuotient q;
    q.derivations = unknowns.size() - rank(eq);

    // inner maps x -> (-1)^{|m||x|} x.m - m.x for m in P_parity, as columns over the unknowns
    std::vector<std::size_t> elems;
    for (std::size_t b = 0; b < m; ++b)
        if (p.parity(b) == parity) elems.push_back(b);
    DenseMatrix inner(unknowns.size(), elems.size());
    for (std::size_t e = 0; e < elems.size(); ++e) {
        const std::size_t b = elems[e];
        for (std::size_t x = 0; x < d; ++x) {
            const Scalar s = koszul(parity, a.parity(x));
            auto row = [&](std::size_t c) {
                auto r = slot[x * m + c];
                if (r < 0) throw Error(ErrorCode::input, "module actions do not respect the grading");
                return static_cast<std::size_t>(r);
            };
            for (const auto& t : p.left(x, b)) inner(row(t.index), e) += s * t.coeff;
            for (const auto& t : p.right(b, x)) inner(row(t.index), e) -= t.coeff;
        }
    }
    q.inner = rank(inner);
    q.quotient = q.derivations - q.inner;
    return q;
}

std::optional<Cochain> is_coboundary(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& f) {
    if (f.arity() == 0) throw Error(ErrorCode::input, "an arity-0 cochain cannot be a coboundary");
    if (f.basis().inputs() != a.parities() || f.basis().outputs() != p.parities())
        throw Error(ErrorCode::dimension, "cochain does not belong to C*(A;P)");
    require_arity(f.arity());
    DenseMatrix m = delta_matrix(a, p, f.arity() - 1, f.parity());
    auto x = solve(m, f.coefficients());
    if (!x) return std::nullopt;
    return Cochain(cochain_basis(a, p, f.arity() - 1, f.parity()), std::move(*x), f.target());
}

SuperAlgebra extension_algebra(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& h) {
    if (h.arity() != 2 || h.parity() != Parity::even())
        throw Error(ErrorCode::input, "extension cocycle must be an even 2-cochain");
    if (h.basis().inputs() != a.parities() || h.basis().outputs() != p.parities())
        throw Error(ErrorCode::dimension, "extension cocycle does not belong to C^2(A;P)");
    const std::size_t d = a.dim(), m = p.dim(), n = d + m;
    std::vector<Parity> parities = a.parities();
    parities.insert(parities.end(), p.parities().begin(), p.parities().end());
    std::vector<std::string> names;
    if (a.has_explicit_names()) {
        names = a.names();
        for (std::size_t b = 0; b < m; ++b) names.push_back("p" + std::to_string(b));
    }
    std::vector<SparseVector> table(n * n);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            SparseVector v = a.product(i, j);
            for (std::size_t b = 0; b < m; ++b)
                if (const Scalar& c = h.coeff(i * d + j, b); !c.is_zero()) v.push_back({d + b, c});
            table[i * n + j] = std::move(v);
        }
        for (std::size_t b = 0; b < m; ++b) {
            for (const auto& t : p.left(i, b)) table[i * n + d + b].push_back({d + t.index, t.coeff});
            for (const auto& t : p.right(b, i)) table[(d + b) * n + i].push_back({d + t.index, t.coeff});
        }
    }
    return SuperAlgebra(a.field(), std::move(parities), std::move(names), std::move(table));
}

std::optional<Cochain> extensions_equivalent(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& h,
                                             const Cochain& h2) {
    for (const Cochain* c : {&h, &h2})
        if (c->arity() != 2 || c->parity() != Parity::even())
            throw Error(ErrorCode::input, "extension cocycles must be even 2-cochains");
    return is_coboundary(a, p, h - h2);
}

ShiftCheck shift_isomorphism_check(const SuperAlgebra& a, const SuperBimodule& p, std::size_t arity) {
    if (arity < 1) throw Error(ErrorCode::input, "dimension shift needs arity at least 1");
    SuperBimodule hom = hom_module(a, p);
    ShiftCheck c;
    c.arity = arity;
    for (int i = 0; i < 2; ++i) {
        c.direct[i] = cohomology(a, p, arity, Parity(i), false).dim_h;
        c.shifted[i] = cohomology(a, hom, arity - 1, Parity(i), false).dim_h;
    }
    return c;
}

}  // namespace superhoch
