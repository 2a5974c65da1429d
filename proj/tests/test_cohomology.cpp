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
#include "superhoch/cohomology.hpp"

using namespace superhoch;

namespace {

std::size_t h(const char* name, std::size_t n, int par) {
    SuperAlgebra a = parse_named(name);
    return cohomology(a, self_module(a), n, Parity(par), false).dim_h;
}

}  // namespace

TEST_CASE("exterior algebra on one odd generator") {
    CHECK(h("dual_odd", 0, 0) == 1);
    CHECK(h("dual_odd", 0, 1) == 1);
    CHECK(h("dual_odd", 1, 0) == 1);
    CHECK(h("dual_odd", 1, 1) == 1);
}

TEST_CASE("ground field") {
    CHECK(h("ground", 0, 0) == 1);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(h("ground", n, 0) == 0);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(h("ground", n, 1) == 0);
}

TEST_CASE("matrix superalgebra has the cohomology of the ground field") {
    CHECK(h("matrix(1|1)", 0, 0) == 1);
    CHECK(h("matrix(1|1)", 0, 1) == 0);
    for (std::size_t n = 1; n <= 2; ++n)
        for (int p = 0; p < 2; ++p) CHECK(h("matrix(1|1)", n, p) == 0);
}

TEST_CASE("dual numbers") {
    CHECK(h("dual_even", 0, 0) == 2);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(h("dual_even", n, 0) == 1);
}

TEST_CASE("dimensions agree with independent ranks") {
    for (const char* name : {"ground", "dual_even", "dual_odd", "clifford1", "matrix(1|1)", "square_zero(dual_odd)"}) {
        CAPTURE(name);
        SuperAlgebra a = parse_named(name);
        SuperBimodule p = self_module(a);
        auto oa = oracle::from(a);
        auto op = oracle::from(p);
        std::size_t top = a.dim() > 2 ? 2 : 3;
        for (std::size_t n = 0; n <= top; ++n)
            for (int par = 0; par < 2; ++par) {
                CohomologyGroup g = cohomology(a, p, n, Parity(par), false);
                CHECK(g.dim_c == g.dim_z + (g.dim_c - g.dim_z));
                CHECK(g.dim_h == g.dim_z - g.dim_b);
                CHECK(g.dim_h == oracle::cohomology_dim(oa, op, n, par));
            }
    }
}

TEST_CASE("representatives are independent cocycles modulo coboundaries") {
    for (const char* name : {"dual_even", "dual_odd", "clifford1", "square_zero(dual_odd)"}) {
        CAPTURE(name);
        SuperAlgebra a = parse_named(name);
        SuperBimodule p = self_module(a);
        auto oa = oracle::from(a);
        auto op = oracle::from(p);
        for (std::size_t n = 0; n <= 2; ++n)
            for (int par = 0; par < 2; ++par) {
                CohomologyGroup g = cohomology(a, p, n, Parity(par));
                REQUIRE(g.representatives.size() == g.dim_h);
                std::vector<oracle::Table> rows;
                if (n > 0) rows = oracle::delta_columns(oa, op, n - 1, par);
                for (const auto& r : g.representatives) {
                    CHECK(delta(a, p, r).is_zero());
                    auto v = oracle::from(r).v;
                    CHECK_FALSE(oracle::in_span(rows, v));
                    rows.push_back(v);
                }
            }
    }
}

TEST_CASE("supercommutant and derivations") {
    SuperAlgebra c = parse_named("clifford1");
    CHECK(supercommutant(c, self_module(c), Parity::even()).size() == 1);
    CHECK(supercommutant(c, self_module(c), Parity::odd()).empty());
    for (const char* name : {"dual_odd", "clifford1", "matrix(1|1)", "dual_even"}) {
        SuperAlgebra a = parse_named(name);
        for (int par = 0; par < 2; ++par) {
            DerivationQuotient q = derivation_quotient(a, self_module(a), Parity(par));
            CHECK(q.quotient == q.derivations - q.inner);
            CHECK(q.quotient == h(name, 1, par));
            CHECK(supercommutant(a, self_module(a), Parity(par)).size() == h(name, 0, par));
        }
    }
}

TEST_CASE("coboundary detection") {
    Rng rng(17);
    SuperAlgebra a = parse_named("matrix(1|1)");
    SuperBimodule p = self_module(a);
    for (int trial = 0; trial < 5; ++trial) {
        Cochain g = random_cochain(cochain_basis(a, p, 1, rng.parity()), rng, Target::module);
        Cochain f = delta(a, p, g);
        auto w = is_coboundary(a, p, f);
        REQUIRE(w);
        CHECK(delta(a, p, *w) == f);
    }
    // the ground field has no 2-coboundaries besides 0, but delta^1 = 1 hits C^2
    SuperAlgebra k = parse_named("ground");
    Cochain one(cochain_basis(k, self_module(k), 2, Parity::even()));
    one.add(0, 0, Scalar(1));
    CHECK(is_coboundary(k, self_module(k), one).has_value());
    // Lambda: the odd 1-cocycle eps -> e is not a coboundary
    SuperAlgebra l = parse_named("dual_odd");
    Cochain f(cochain_basis(l, self_module(l), 1, Parity::odd()));
    f.add(1, 0, Scalar(1));
    CHECK(delta(l, self_module(l), f).is_zero());
    CHECK_FALSE(is_coboundary(l, self_module(l), f).has_value());
    Cochain c0(cochain_basis(l, self_module(l), 0, Parity::even()));
    CHECK_THROWS_AS(is_coboundary(l, self_module(l), c0), Error);
}

TEST_CASE("extensions") {
    SuperAlgebra a = parse_named("dual_even");
    SuperBimodule p = self_module(a);
    Cochain h0(cochain_basis(a, p, 2, Parity::even()));
    SuperAlgebra e0 = extension_algebra(a, p, h0);
    CHECK(e0 == square_zero_algebra(a, p));
    // h(x, x) = e is a cocycle that is not a coboundary
    Cochain h1 = h0;
    h1.add(3, 0, Scalar(1));
    CHECK(validate(extension_algebra(a, p, h1)).ok());
    CHECK_FALSE(extensions_equivalent(a, p, h0, h1).has_value());
    // h(e, e) = e is not a cocycle
    Cochain bad = h0;
    bad.add(0, 0, Scalar(1));
    CHECK_FALSE(validate(extension_algebra(a, p, bad)).ok());
    // adding a coboundary gives an equivalent extension
    Cochain g(cochain_basis(a, p, 1, Parity::even()));
    g.add(1, 1, Scalar(3));
    Cochain h2 = h1 + delta(a, p, g);
    auto w = extensions_equivalent(a, p, h2, h1);
    REQUIRE(w);
    CHECK(delta(a, p, *w) == h2 - h1);
    Cochain odd(cochain_basis(a, p, 2, Parity::odd()));
    CHECK_THROWS_AS(extension_algebra(a, p, odd), Error);
}

TEST_CASE("shifting the coefficients") {
    for (const char* name : {"ground", "dual_odd", "clifford1"}) {
        SuperAlgebra a = parse_named(name);
        for (std::size_t n = 2; n <= 3; ++n) {
            ShiftCheck s = shift_isomorphism_check(a, self_module(a), n);
            CAPTURE(name);
            CAPTURE(n);
            CHECK(s.ok());
        }
    }
}

TEST_CASE("report across parities") {
    SuperAlgebra a = parse_named("dual_odd");
    CohomologyReport r = cohomology_report(a, self_module(a), 2, {Parity::even(), Parity::odd()});
    REQUIRE(r.groups.size() == 6);
    CHECK(r.groups[1].arity == 0);
    CHECK(r.groups[1].parity == Parity::odd());
    CHECK_THROWS_AS(cohomology(a, self_module(a), max_cohomology_arity + 1, Parity::even()), Error);
}
