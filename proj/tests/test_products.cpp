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

#include "doctest.h"

#include "oracles.hpp"
#include "superhoch/products.hpp"

using namespace superhoch;

namespace {

Cochain elementary(const SuperAlgebra& a, std::size_t arity, Parity par, std::vector<std::size_t> idx,
                   std::size_t out, long v = 1) {
    Cochain f(cochain_basis(a, self_module(a), arity, par), Target::algebra);
    f.set(idx, out, Scalar(v));
    return f;
}

}  // namespace

TEST_CASE("Id cup Id is the product") {
    for (const char* name : {"ground", "dual_odd", "clifford1", "matrix(1|1)"}) {
        ProductContext c(parse_named(name));
        Cochain id = identity_cochain(c.algebra());
        CHECK(cup(c, id, id) == c.pi());
    }
}

TEST_CASE("cup on the exterior algebra picks up a sign") {
    ProductContext c(parse_named("dual_odd"));
    // f = g: eps -> e, an odd 1-cochain
    Cochain f = elementary(c.algebra(), 1, Parity::odd(), {1}, 0);
    Cochain fg = cup(c, f, f);
    CHECK(fg.at(std::vector<std::size_t>{1, 1}, 0) == Scalar(-1));
    CHECK(fg.parity() == Parity::even());
    CHECK(fg.at(std::vector<std::size_t>{0, 1}, 1).is_zero());
}

TEST_CASE("insertions of the product") {
    for (const char* name : {"dual_odd", "matrix(1|1)"}) {
        ProductContext c(parse_named(name));
        const auto& a = c.algebra();
        const std::size_t d = a.dim();
        Cochain p0 = comp_i(c, c.pi(), c.pi(), 0), p1 = comp_i(c, c.pi(), c.pi(), 1);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    Vector ei(d), ej(d), ek(d);
                    ei[i] = 1;
                    ej[j] = 1;
                    ek[k] = 1;
                    std::vector<std::size_t> t{i, j, k};
                    Vector left = multiply(a, multiply(a, ei, ej), ek);
                    Vector right = multiply(a, ei, multiply(a, ej, ek));
                    for (std::size_t o = 0; o < d; ++o) {
                        CHECK(p0.at(t, o) == left[o]);
                        CHECK(p1.at(t, o) == right[o]);
                    }
                }
        CHECK(comp(c, c.pi(), c.pi()).is_zero());
    }
}

TEST_CASE("bracket of Id with the product") {
    for (const char* name : {"ground", "dual_odd", "clifford1", "matrix(1|1)"}) {
        ProductContext c(parse_named(name));
        Cochain id = identity_cochain(c.algebra());
        CHECK(bracket(c, id, c.pi()) == -c.pi());
        CHECK(bracket(c, c.pi(), id) == c.pi());
    }
}

TEST_CASE("products agree with the slow formulas") {
    Rng rng(21);
    for (const char* name : {"dual_odd", "clifford1", "matrix(1|1)"}) {
        CAPTURE(name);
        ProductContext c(parse_named(name));
        auto oa = oracle::from(c.algebra());
        for (int trial = 0; trial < 12; ++trial) {
            std::size_t m = rng.below(3), n = rng.below(3);
            Cochain f = random_cochain(c.basis(Target::algebra, m, rng.parity()), rng, Target::algebra);
            Cochain g = random_cochain(c.basis(Target::algebra, n, rng.parity()), rng, Target::algebra);
            CHECK(oracle::same(oracle::cup(oa, oracle::from(f), oracle::from(g)), cup(c, f, g)));
            for (std::size_t i = 0; i < m; ++i)
                CHECK(oracle::same(oracle::comp_i(oa, oracle::from(f), oracle::from(g), i), comp_i(c, f, g, i)));
        }
    }
}

TEST_CASE("composition edge cases") {
    ProductContext c(parse_named("dual_odd"));
    Cochain z0(c.basis(Target::algebra, 0, Parity::even()), Target::algebra);
    z0.add(0, 0, Scalar(1));
    Cochain f = identity_cochain(c.algebra());
    CHECK(comp(c, z0, f).is_zero());
    CHECK(comp(c, z0, f).arity() == 0);
    CHECK_THROWS_AS(comp(c, z0, z0), Error);
    CHECK_THROWS_AS(comp_i(c, f, f, 1), Error);
    // inserting an arity-0 cochain lowers arity
    Cochain g = comp_i(c, c.pi(), z0, 0);
    CHECK(g.arity() == 1);
    CHECK(g == identity_cochain(c.algebra()));
}

TEST_CASE("module-valued cochains in products") {
    SuperAlgebra a = parse_named("dual_odd");
    SuperBimodule h = hom_module(a, self_module(a));
    ProductContext c(a, h);
    Rng rng(4);
    Cochain f = random_cochain(c.basis(Target::module, 1, Parity::odd()), rng, Target::module);
    Cochain g = random_cochain(c.basis(Target::algebra, 2, Parity::even()), rng, Target::algebra);
    CHECK(comp(c, f, g).target() == Target::module);
    CHECK(bracket(c, f, g) == comp(c, f, g));
    CHECK_THROWS_AS(bracket(c, f, f), Error);
    CHECK_THROWS_AS(cup(c, f, f), Error);
    CHECK(cup(c, g, f).target() == Target::module);
}

TEST_CASE("the audit passes on every fixture") {
    for (const char* name : {"ground", "dual_even", "dual_odd", "clifford1", "matrix(1|1)"}) {
        CAPTURE(name);
        AuditReport r = audit_identities(ProductContext(parse_named(name)), 2, 12);
        CHECK(r.ok());
        CHECK(r.results.size() == audit_identity_names().size());
    }
    SuperAlgebra a = parse_named("clifford1");
    AuditReport m = audit_identities(ProductContext(a, hom_module(a, self_module(a))), 5, 8);
    for (const auto& res : m.results) {
        CAPTURE(res.name);
        CHECK(res.passed);
    }
    CHECK_THROWS_AS(audit_identity(ProductContext(a), "nope", 0, 1), Error);
}

TEST_CASE("a wrong sign is caught") {
    // the derivation rule with (-1)^{M+1} in place of (-1)^M fails on odd data
    ProductContext c(parse_named("clifford1"));
    Rng rng(8);
    bool caught = false;
    for (int trial = 0; trial < 20 && !caught; ++trial) {
        Cochain f = random_cochain(c.basis(Target::algebra, 1, rng.parity()), rng, Target::algebra);
        Cochain g = random_cochain(c.basis(Target::algebra, 1, rng.parity()), rng, Target::algebra);
        Cochain right = cup(c, c.delta(f), g) - cup(c, f, c.delta(g));
        Cochain wrong = cup(c, c.delta(f), g) + cup(c, f, c.delta(g));
        CHECK(c.delta(cup(c, f, g)) == right);
        caught = !(c.delta(cup(c, f, g)) == wrong);
    }
    CHECK(caught);
}
