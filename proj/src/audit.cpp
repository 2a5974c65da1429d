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

#include <functional>
#include <sstream>

#include "superhoch/products.hpp"

namespace superhoch {

namespace {

struct Gen {
    const ProductContext& ctx;
    Rng rng;

    std::size_t arity(std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }
    Target target() { return ctx.has_module() && rng.below(2) ? Target::module : Target::algebra; }
    Cochain make(std::size_t arity, Target t, Parity p) {
        return random_cochain(ctx.basis(t, arity, p), rng, t, ctx.algebra().field());
    }
    Cochain make(std::size_t arity, Target t = Target::algebra) { return make(arity, t, rng.parity()); }
};

std::string describe(std::initializer_list<std::pair<const char*, const Cochain*>> inputs) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : inputs) {
        os << (first ? "" : ", ") << name << "(arity " << c->arity() << ", parity " << c->parity().value()
           << (c->target() == Target::module ? ", module" : "") << ")";
        first = false;
    }
    return os.str();
}

// nontrivial: whether the trial exercised anything (some side or some summand nonzero)
void record(IdentityResult& r, const Cochain& lhs, const Cochain& rhs, const std::string& inputs, bool nontrivial) {
    ++r.trials;
    if (nontrivial) ++r.nontrivial;
    if (!r.passed) return;
    if (auto diff = first_difference(lhs, rhs)) {
        r.passed = false;
        r.counterexample = inputs + ": " + *diff;
    }
}

void record(IdentityResult& r, const Cochain& lhs, const Cochain& rhs, const std::string& inputs) {
    record(r, lhs, rhs, inputs, !lhs.is_zero() || !rhs.is_zero());
}

Scalar sgn(long e) { return sign(e); }
long deg(const Cochain& f) { return static_cast<long>(f.arity()) - 1; }

using Check = std::function<void(Gen&, IdentityResult&)>;

const std::vector<std::pair<std::string, Check>>& checks() {
    static const std::vector<std::pair<std::string, Check>> table = {
        {"delta_squared",
         [](Gen& g, IdentityResult& r) {
             Cochain f = g.make(g.arity(0, 3), g.target());
             Cochain df = g.ctx.delta(f);
             Cochain dd = g.ctx.delta(df);
             record(r, dd, Cochain(dd.shared_basis(), dd.target()), describe({{"f", &f}}), !df.is_zero());
         }},
        {"delta_id_is_pi",
         [](Gen& g, IdentityResult& r) {
             Cochain id = identity_cochain(g.ctx.algebra());
             record(r, g.ctx.delta(id), g.ctx.pi(), "Id");
             Cochain dpi = g.ctx.delta(g.ctx.pi());
             record(r, dpi, Cochain(dpi.shared_basis(), Target::algebra), "pi", !g.ctx.pi().is_zero());
         }},
        {"cup_associativity",
         [](Gen& g, IdentityResult& r) {
             Cochain f = g.make(g.arity(0, 2)), h = g.make(g.arity(0, 2));
             Cochain k = g.make(g.arity(0, 2), g.target());
             const auto& c = g.ctx;
             record(r, cup(c, cup(c, f, h), k), cup(c, f, cup(c, h, k)), describe({{"f", &f}, {"g", &h}, {"h", &k}}));
         }},
        {"cup_derivation",
         [](Gen& g, IdentityResult& r) {
             const auto& c = g.ctx;
             Target tf = g.target();
             Target th = tf == Target::module ? Target::algebra : g.target();
             Cochain f = g.make(g.arity(0, 2), tf), h = g.make(g.arity(0, 2), th);
             Cochain lhs = c.delta(cup(c, f, h));
             Cochain rhs = cup(c, c.delta(f), h) + sgn(static_cast<long>(f.arity())) * cup(c, f, c.delta(h));
             record(r, lhs, rhs, describe({{"f", &f}, {"g", &h}}));
         }},
        {"pre_lie_nested",
         [](Gen& g, IdentityResult& r) {
             // (f o_i g) o_j h = f o_i (g o_{j-i} h) for i <= j <= i + N - 1
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(1, 3), g.target()), h = g.make(g.arity(1, 2)), k = g.make(g.arity(0, 2));
             const std::size_t i = g.rng.below(f.arity());
             const std::size_t j = i + g.rng.below(h.arity());
             Cochain lhs = comp_i(c, comp_i(c, f, h, i), k, j);
             Cochain rhs = comp_i(c, f, comp_i(c, h, k, j - i), i);
             record(r, lhs, rhs,
                    describe({{"f", &f}, {"g", &h}, {"h", &k}}) + ", i=" + std::to_string(i) +
                        ", j=" + std::to_string(j));
         }},
        {"pre_lie_parallel",
         [](Gen& g, IdentityResult& r) {
             // (f o_i g) o_j h = (-1)^{|g||h|} (f o_j h) o_{i+P-1} g for j < i
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(2, 3), g.target()), h = g.make(g.arity(0, 2)), k = g.make(g.arity(0, 2));
             const std::size_t i = 1 + g.rng.below(f.arity() - 1);
             const std::size_t j = g.rng.below(i);
             Cochain lhs = comp_i(c, comp_i(c, f, h, i), k, j);
             Cochain rhs = koszul(h.parity(), k.parity()) * comp_i(c, comp_i(c, f, k, j), h, i + k.arity() - 1);
             record(r, lhs, rhs,
                    describe({{"f", &f}, {"g", &h}, {"h", &k}}) + ", i=" + std::to_string(i) +
                        ", j=" + std::to_string(j));
         }},
        {"comp_associator_symmetry",
         [](Gen& g, IdentityResult& r) {
             // (f o g) o h - f o (g o h) = (-1)^{np + |g||h|} ((f o h) o g - f o (h o g)), n, p the Z-degrees
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(1, 2), g.target()), h = g.make(g.arity(0, 2)), k = g.make(g.arity(0, 2));
             if (h.arity() + k.arity() == 0) k = g.make(1);
             Cochain lhs = comp(c, comp(c, f, h), k) - comp(c, f, comp(c, h, k));
             Cochain rhs = sgn(deg(h) * deg(k) + h.parity() * k.parity()) *
                           (comp(c, comp(c, f, k), h) - comp(c, f, comp(c, k, h)));
             record(r, lhs, rhs, describe({{"f", &f}, {"g", &h}, {"h", &k}}));
         }},
        {"bracket_antisymmetry",
         [](Gen& g, IdentityResult& r) {
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(0, 2)), h = g.make(g.arity(0, 2));
             if (f.arity() + h.arity() == 0) h = g.make(1);
             Cochain lhs = bracket(c, f, h);
             Cochain rhs = -(sgn(deg(f) * deg(h) + f.parity() * h.parity()) * bracket(c, h, f));
             record(r, lhs, rhs, describe({{"f", &f}, {"g", &h}}));
         }},
        {"graded_jacobi",
         [](Gen& g, IdentityResult& r) {
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(1, 2)), h = g.make(g.arity(1, 2)), k = g.make(g.arity(0, 2));
             auto s = [](const Cochain& x, const Cochain& y) { return sgn(deg(x) * deg(y) + x.parity() * y.parity()); };
             Cochain t1 = s(f, k) * bracket(c, bracket(c, f, h), k);
             Cochain t2 = s(h, f) * bracket(c, bracket(c, h, k), f);
             Cochain t3 = s(k, h) * bracket(c, bracket(c, k, f), h);
             Cochain sum = t1 + t2 + t3;
             record(r, sum, Cochain(sum.shared_basis(), sum.target()), describe({{"f", &f}, {"g", &h}, {"h", &k}}),
                    !t1.is_zero() || !t2.is_zero() || !t3.is_zero());
         }},
        {"delta_as_composition",
         [](Gen& g, IdentityResult& r) {
             // df = -f o pi + (-1)^{M-1} pi o f
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(0, 3));
             Cochain rhs = sgn(deg(f)) * comp(c, c.pi(), f) - comp(c, f, c.pi());
             record(r, c.delta(f), rhs, describe({{"f", &f}}));
         }},
        {"delta_as_bracket",
         [](Gen& g, IdentityResult& r) {
             // df = [f, -pi] = (-1)^{M-1} [pi, f]
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(0, 3));
             Cochain df = c.delta(f);
             record(r, df, bracket(c, f, -c.pi()), describe({{"f", &f}}) + " against [f,-pi]");
             record(r, df, sgn(deg(f)) * bracket(c, c.pi(), f), describe({{"f", &f}}) + " against [pi,f]");
         }},
        {"cup_as_composition",
         [](Gen& g, IdentityResult& r) {
             // f u g = (pi o_0 f) o_M g
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(0, 2)), h = g.make(g.arity(0, 2));
             record(r, cup(c, f, h), comp_i(c, comp_i(c, c.pi(), f, 0), h, f.arity()), describe({{"f", &f}, {"g", &h}}));
         }},
        {"cup_commutator_homotopy",
         [](Gen& g, IdentityResult& r) {
             // f o dg - d(f o g) + (-1)^{N-1} df o g = (-1)^{N-1} ((-1)^{|f||g|} g u f - (-1)^{MN} f u g)
             const auto& c = g.ctx;
             Cochain f = g.make(g.arity(0, 2)), h = g.make(g.arity(0, 2));
             if (f.arity() + h.arity() == 0) h = g.make(1);
             const long m = static_cast<long>(f.arity()), n = static_cast<long>(h.arity());
             Cochain lhs = comp(c, f, c.delta(h)) - c.delta(comp(c, f, h)) + sgn(n - 1) * comp(c, c.delta(f), h);
             Cochain rhs = sgn(n - 1) * (koszul(f.parity(), h.parity()) * cup(c, h, f) - sgn(m * n) * cup(c, f, h));
             record(r, lhs, rhs, describe({{"f", &f}, {"g", &h}}));
         }},
        {"even_square_associator",
         [](Gen& g, IdentityResult& r) {
             // u o (v o v) = (u o v) o v for even 2-cochains
             const auto& c = g.ctx;
             Cochain u = g.make(2, Target::algebra, Parity::even()), v = g.make(2, Target::algebra, Parity::even());
             record(r, comp(c, u, comp(c, v, v)), comp(c, comp(c, u, v), v), describe({{"u", &u}, {"v", &v}}));
         }},
        {"even_associator_symmetry",
         [](Gen& g, IdentityResult& r) {
             // (u o v) o w - u o (v o w) = -(u o w) o v + u o (w o v) for even 2-cochains
             const auto& c = g.ctx;
             Cochain u = g.make(2, Target::algebra, Parity::even()), v = g.make(2, Target::algebra, Parity::even());
             Cochain w = g.make(2, Target::algebra, Parity::even());
             Cochain lhs = comp(c, comp(c, u, v), w) - comp(c, u, comp(c, v, w));
             Cochain rhs = comp(c, u, comp(c, w, v)) - comp(c, comp(c, u, w), v);
             record(r, lhs, rhs, describe({{"u", &u}, {"v", &v}, {"w", &w}}));
         }},
    };
    return table;
}

}  // namespace

bool AuditReport::ok() const {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

const IdentityResult* AuditReport::find(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

const std::vector<std::string>& audit_identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, check] : checks()) v.push_back(name);
        return v;
    }();
    return names;
}

IdentityResult audit_identity(const ProductContext& ctx, const std::string& name, std::uint64_t seed,
                              std::size_t trials) {
    for (std::size_t k = 0; k < checks().size(); ++k) {
        const auto& [id, check] = checks()[k];
        if (id != name) continue;
        // each identity draws from its own stream so reports do not depend on the selection
        Gen g{ctx, Rng(seed * 0x9E3779B97F4A7C15ULL + k)};
        IdentityResult r;
        r.name = name;
        const std::size_t runs = name == "delta_id_is_pi" ? 1 : trials;
        for (std::size_t t = 0; t < runs; ++t) check(g, r);
        return r;
    }
    throw Error(ErrorCode::input, "unknown identity: " + name);
}

AuditReport audit_identities(const ProductContext& ctx, std::uint64_t seed, std::size_t trials) {
    AuditReport report;
    report.seed = seed;
    for (const auto& name : audit_identity_names()) report.results.push_back(audit_identity(ctx, name, seed, trials));
    return report;
}

}  // namespace superhoch
