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

#include "superhoch/deformation.hpp"

#include "superhoch/cohomology.hpp"
#include "superhoch/products.hpp"

namespace superhoch {

namespace {

void require_terms(const SuperAlgebra& a, const std::vector<Cochain>& terms, std::size_t arity, const char* what) {
    for (const auto& t : terms) {
        if (t.arity() != arity || t.parity() != Parity::even())
            throw Error(ErrorCode::input, std::string(what) + " terms must be even " + std::to_string(arity) + "-cochains");
        if (t.basis().inputs() != a.parities() || t.basis().outputs() != a.parities())
            throw Error(ErrorCode::dimension, std::string(what) + " term does not belong to C*(A;A)");
    }
}

Vector unit(std::size_t d, std::size_t i) {
    Vector v(d);
    v[i] = 1;
    return v;
}

/// mu_j(x, y) with mu_0 the product of A.
Vector apply_term(const SuperAlgebra& a, const Deformation& d, std::size_t j, const Vector& x, const Vector& y) {
    if (j == 0) return multiply(a, x, y);
    const Vector args[2] = {x, y};
    return evaluate(d.terms[j - 1], args);
}

/// sum_{i+j=r, lo<=i,j} mu_i(mu_j(x,y),z) - mu_i(x,mu_j(y,z))
Vector associator_sum(const SuperAlgebra& a, const Deformation& d, std::size_t r, std::size_t lo, const Vector& x,
                      const Vector& y, const Vector& z) {
    Vector out(a.dim());
    for (std::size_t i = lo; i + lo <= r; ++i) {
        const std::size_t j = r - i;
        Vector left = apply_term(a, d, i, apply_term(a, d, j, x, y), z);
        Vector right = apply_term(a, d, i, x, apply_term(a, d, j, y, z));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += left[k] - right[k];
    }
    return out;
}

Cochain even_cochain(const SuperAlgebra& a, std::size_t arity) {
    return Cochain::zero(a.parities(), a.parities(), arity, Parity::even(), Target::algebra);
}

DenseMatrix as_matrix(const Cochain& psi) {
    const std::size_t d = psi.input_dim();
    DenseMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) m(i, j) = psi.coeff(j, i);
    return m;
}

Cochain from_matrix(const SuperAlgebra& a, const DenseMatrix& m) {
    Cochain c = even_cochain(a, 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) c.add(j, i, m(i, j));
    return c;
}

}  // namespace

Deformation Deformation::trivial(const SuperAlgebra& a, std::size_t order) {
    return Deformation{std::vector<Cochain>(order, even_cochain(a, 2))};
}

DeformationCheck check_deformation(const SuperAlgebra& a, const Deformation& d) {
    require_terms(a, d.terms, 2, "deformation");
    const std::size_t n = a.dim();
    DeformationCheck report;
    bool prefix_ok = true;
    for (std::size_t r = 0; r <= d.order(); ++r) {
        OrderCheck oc;
        oc.order = r;
        for (std::size_t x = 0; x < n && oc.passed; ++x)
            for (std::size_t y = 0; y < n && oc.passed; ++y)
                for (std::size_t z = 0; z < n && oc.passed; ++z)
                    if (!is_zero(associator_sum(a, d, r, 0, unit(n, x), unit(n, y), unit(n, z)))) {
                        oc.passed = false;
                        oc.witness = {x, y, z};
                    }
        prefix_ok = prefix_ok && oc.passed;
        if (prefix_ok) report.max_valid_order = static_cast<long>(r);
        report.orders.push_back(std::move(oc));
    }
    if (d.order() >= 1) {
        const bool cocycle = delta(a, self_module(a), d.terms[0]).is_zero();
        report.cocycle_consistent = cocycle == report.orders[1].passed;
    }
    return report;
}

ObstructionResult obstruction(const SuperAlgebra& a, const Deformation& d) {
    DeformationCheck check = check_deformation(a, d);
    if (!check.valid())
        throw Error(ErrorCode::input, "deformation is not valid through order " + std::to_string(d.order()));
    const std::size_t n = a.dim(), r = d.order() + 1;
    ProductContext ctx(a);

    Cochain direct = even_cochain(a, 3);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector v = associator_sum(a, d, r, 1, unit(n, x), unit(n, y), unit(n, z));
                for (std::size_t k = 0; k < n; ++k) direct.add((x * n + y) * n + z, k, v[k]);
            }

    Cochain via = even_cochain(a, 3);
    for (std::size_t i = 1; i < r; ++i) via += comp(ctx, d.terms[i - 1], d.terms[r - i - 1]);

    Cochain cob = ctx.delta(direct);
    return ObstructionResult{r, std::move(direct), std::move(via), std::move(cob)};
}

ExtensionResult extend_deformation(const SuperAlgebra& a, const Deformation& d) {
    ExtensionResult out{obstruction(a, d), std::nullopt};
    auto mu = is_coboundary(a, self_module(a), out.obstruction.direct);
    if (mu) {
        Deformation e = d;
        e.terms.push_back(mu->with_target(Target::algebra));
        out.extended = std::move(e);
    }
    return out;
}

FormalIsomorphism invert(const SuperAlgebra& a, const FormalIsomorphism& psi, std::size_t order) {
    require_terms(a, psi.terms, 1, "isomorphism");
    const std::size_t n = a.dim();
    std::vector<DenseMatrix> ps;
    for (const auto& t : psi.terms) ps.push_back(as_matrix(t));
    std::vector<DenseMatrix> phi{DenseMatrix::identity(n)};
    for (std::size_t r = 1; r <= order; ++r) {
        DenseMatrix acc(n, n);
        for (std::size_t k = 1; k <= r && k <= ps.size(); ++k) {
            DenseMatrix p = ps[k - 1] * phi[r - k];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) acc(i, j) -= p(i, j);
        }
        phi.push_back(std::move(acc));
    }
    FormalIsomorphism inv;
    for (std::size_t r = 1; r <= order; ++r) inv.terms.push_back(from_matrix(a, phi[r]));
    return inv;
}

Deformation apply_isomorphism(const SuperAlgebra& a, const FormalIsomorphism& psi, const Deformation& d) {
    require_terms(a, d.terms, 2, "deformation");
    if (psi.terms.size() > d.order())
        throw Error(ErrorCode::input, "isomorphism has more terms than the deformation's order");
    const std::size_t n = a.dim(), order = d.order();
    FormalIsomorphism phi = invert(a, psi, order);

    // psi_k and phi_k as matrices, index 0 the identity
    std::vector<DenseMatrix> ps{DenseMatrix::identity(n)}, ph{DenseMatrix::identity(n)};
    for (std::size_t k = 1; k <= order; ++k) {
        ps.push_back(k <= psi.terms.size() ? as_matrix(psi.terms[k - 1]) : DenseMatrix(n, n));
        ph.push_back(as_matrix(phi.terms[k - 1]));
    }

    Deformation out;
    for (std::size_t r = 1; r <= order; ++r) {
        Cochain nu = even_cochain(a, 2);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Vector acc(n);
                for (std::size_t k = 0; k <= r; ++k) {
                    Vector px = ph[k].column(x);
                    if (is_zero(px)) continue;
                    for (std::size_t l = 0; k + l <= r; ++l) {
                        Vector py = ph[l].column(y);
                        if (is_zero(py)) continue;
                        for (std::size_t j = 0; k + l + j <= r; ++j) {
                            Vector m = apply_term(a, d, j, px, py);
                            if (is_zero(m)) continue;
                            Vector v = ps[r - k - l - j].apply(m);
                            for (std::size_t c = 0; c < n; ++c) acc[c] += v[c];
                        }
                    }
                }
                for (std::size_t c = 0; c < n; ++c) nu.add(x * n + y, c, acc[c]);
            }
        out.terms.push_back(std::move(nu));
    }
    return out;
}

Infinitesimal infinitesimal_class(const SuperAlgebra& a, const Deformation& d) {
    require_terms(a, d.terms, 2, "deformation");
    Infinitesimal inf;
    for (std::size_t k = 0; k < d.order(); ++k) {
        if (d.terms[k].is_zero()) continue;
        const SuperBimodule self = self_module(a);
        inf.trivial = false;
        inf.index = k + 1;
        inf.term = d.terms[k];
        inf.cocycle = delta(a, self, d.terms[k]).is_zero();
        inf.witness = is_coboundary(a, self, d.terms[k]);
        inf.coboundary = inf.witness.has_value();
        break;
    }
    return inf;
}

}  // namespace superhoch
