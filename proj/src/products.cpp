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

#include "superhoch/products.hpp"

namespace superhoch {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

void require_inputs(const ProductContext& ctx, const Cochain& f) {
    if (f.basis().inputs() != ctx.algebra().parities())
        throw Error(ErrorCode::dimension, "cochain arguments do not match the algebra");
    if (f.basis().outputs() != ctx.coefficients(f.target()).parities())
        throw Error(ErrorCode::dimension, "cochain values do not match its coefficient space");
}

}  // namespace

ProductContext::ProductContext(SuperAlgebra a)
    : a_(std::move(a)), self_(self_module(a_)), p_(self_), pi_(multiplication_cochain(a_)) {}

ProductContext::ProductContext(SuperAlgebra a, SuperBimodule p)
    : a_(std::move(a)), self_(self_module(a_)), p_(std::move(p)), has_module_(true), pi_(multiplication_cochain(a_)) {
    if (p_.algebra_dim() != a_.dim()) throw Error(ErrorCode::dimension, "module is over an algebra of another dimension");
}

std::shared_ptr<const CochainBasis> ProductContext::basis(Target t, std::size_t arity, Parity parity) const {
    return CochainBasis::make(a_.parities(), coefficients(t).parities(), arity, parity);
}

Cochain ProductContext::delta(const Cochain& f) const { return superhoch::delta(a_, coefficients(f.target()), f); }

Cochain cup(const ProductContext& ctx, const Cochain& f, const Cochain& g) {
    require_inputs(ctx, f);
    require_inputs(ctx, g);
    const bool fm = f.target() == Target::module, gm = g.target() == Target::module;
    if (fm && gm) throw Error(ErrorCode::input, "cup of two module-valued cochains is undefined");
    const Target t = (fm || gm) ? Target::module : Target::algebra;
    const SuperAlgebra& a = ctx.algebra();
    const SuperBimodule& p = ctx.module();
    Cochain out(ctx.basis(t, f.arity() + g.arity(), f.parity() + g.parity()), t);
    const std::size_t shift = ipow(a.dim(), g.arity());
    const Parity gp = g.parity();
    for (std::size_t fi = 0; fi < f.coefficients().size(); ++fi) {
        const Scalar& cf = f.coefficients()[fi];
        if (cf.is_zero()) continue;
        const auto& ef = f.basis().entry(fi);
        const Scalar s = koszul(gp, f.basis().tuple_parity(ef.tuple)) * cf;
        for (std::size_t gi = 0; gi < g.coefficients().size(); ++gi) {
            const Scalar& cg = g.coefficients()[gi];
            if (cg.is_zero()) continue;
            const auto& eg = g.basis().entry(gi);
            const SparseVector& prod = fm ? p.right(ef.out, eg.out) : gm ? p.left(ef.out, eg.out)
                                                                          : a.product(ef.out, eg.out);
            const std::size_t tuple = ef.tuple * shift + eg.tuple;
            for (const auto& term : prod) out.add(tuple, term.index, s * cg * term.coeff);
        }
    }
    return out;
}

Cochain comp_i(const ProductContext& ctx, const Cochain& f, const Cochain& g, std::size_t i) {
    require_inputs(ctx, f);
    require_inputs(ctx, g);
    if (g.target() != Target::algebra) throw Error(ErrorCode::input, "the inserted cochain must be algebra-valued");
    const std::size_t m = f.arity(), n = g.arity(), d = ctx.algebra().dim();
    if (i >= m) throw Error(ErrorCode::input, "insertion slot out of range");
    Cochain out(ctx.basis(f.target(), m + n - 1, f.parity() + g.parity()), f.target());

    // g's nonzero entries grouped by output index
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_out(d);
    for (std::size_t gi = 0; gi < g.coefficients().size(); ++gi)
        if (!g.coefficients()[gi].is_zero())
            by_out[g.basis().entry(gi).out].emplace_back(g.basis().entry(gi).tuple, g.coefficients()[gi]);

    const std::size_t after = ipow(d, m - 1 - i);  // arguments x_{i+2} ... x_{m}
    const std::size_t width = ipow(d, n);
    const Parity gp = g.parity();
    for (std::size_t fi = 0; fi < f.coefficients().size(); ++fi) {
        const Scalar& cf = f.coefficients()[fi];
        if (cf.is_zero()) continue;
        const auto& ef = f.basis().entry(fi);
        const std::size_t suffix = ef.tuple % after;
        const std::size_t k = (ef.tuple / after) % d;
        const std::size_t prefix = ef.tuple / after / d;
        if (by_out[k].empty()) continue;
        Parity before;
        {
            std::size_t t = prefix;
            for (std::size_t j = 0; j < i; ++j) {
                before += ctx.algebra().parity(t % d);
                t /= d;
            }
        }
        const Scalar s = koszul(gp, before) * cf;
        for (const auto& [tg, cg] : by_out[k]) {
            const std::size_t tuple = (prefix * width + tg) * after + suffix;
            out.add(tuple, ef.out, s * cg);
        }
    }
    return out;
}

Cochain comp(const ProductContext& ctx, const Cochain& f, const Cochain& g) {
    const std::size_t m = f.arity(), n = g.arity();
    if (m + n == 0) throw Error(ErrorCode::input, "composition of two arity-0 cochains has no arity");
    if (g.target() != Target::algebra) throw Error(ErrorCode::input, "the inserted cochain must be algebra-valued");
    Cochain out(ctx.basis(f.target(), m + n - 1, f.parity() + g.parity()), f.target());
    for (std::size_t i = 0; i < m; ++i) {
        Cochain term = comp_i(ctx, f, g, i);
        if ((n + 1) % 2 == 1 && i % 2 == 1)
            out -= term;
        else
            out += term;
    }
    return out;
}

Cochain bracket(const ProductContext& ctx, const Cochain& f, const Cochain& g) {
    const bool fm = f.target() == Target::module, gm = g.target() == Target::module;
    if (fm && gm) throw Error(ErrorCode::input, "bracket of two module-valued cochains is undefined");
    const long zdeg = (static_cast<long>(f.arity()) - 1) * (static_cast<long>(g.arity()) - 1);
    const Scalar s = sign(zdeg + f.parity() * g.parity());
    if (fm) return comp(ctx, f, g);
    if (gm) return -(s * comp(ctx, g, f));
    return comp(ctx, f, g) - s * comp(ctx, g, f);
}

}  // namespace superhoch
