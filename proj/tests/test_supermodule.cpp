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

#include "superhoch/supermodule.hpp"

using namespace superhoch;

namespace {

Vector unit(std::size_t d, std::size_t i) {
    Vector v(d);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("self and zero modules") {
    for (const char* name : {"ground", "dual_odd", "clifford1", "matrix(1|1)"}) {
        SuperAlgebra a = parse_named(name);
        CHECK(validate(a, self_module(a)).ok());
        CHECK(validate(a, zero_module(a)).ok());
        CHECK(zero_module(a).dim() == 0);
    }
}

TEST_CASE("square-zero extension by self") {
    SuperAlgebra a = parse_named("dual_odd");
    SuperAlgebra s = square_zero_algebra(a, self_module(a));
    CHECK(s.dim() == 4);
    CHECK(validate(s).ok());
    // P . P = 0
    for (std::size_t i = 2; i < 4; ++i)
        for (std::size_t j = 2; j < 4; ++j) CHECK(s.product(i, j).empty());
    SuperAlgebra named = parse_named("square_zero(dual_odd)");
    CHECK(named.parities() == s.parities());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) CHECK(named.structure_constant(i, j, k) == s.structure_constant(i, j, k));
}

TEST_CASE("hom module actions") {
    for (const char* name : {"dual_odd", "clifford1", "matrix(1|1)"}) {
        CAPTURE(name);
        SuperAlgebra a = parse_named(name);
        SuperBimodule p = self_module(a);
        SuperBimodule h = hom_module(a, p);
        const std::size_t d = a.dim(), m = p.dim();
        REQUIRE(h.dim() == d * m);
        CHECK(validate(a, h).ok());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t b = 0; b < m; ++b) CHECK(h.parity(i * m + b) == p.parity(b) - a.parity(i));
        // (f * y)(x) = f(yx) - f(y) x on an elementary map f = [e_i -> p_b]
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t y = 0; y < d; ++y) {
                    Vector fy = h.act_right(unit(d * m, i * m + b), unit(d, y));
                    for (std::size_t x = 0; x < d; ++x) {
                        Vector yx = multiply(a, unit(d, y), unit(d, x));
                        Vector expect(m);
                        for (std::size_t b2 = 0; b2 < m; ++b2) expect[b2] = 0;
                        expect[b] += yx[i];
                        if (y == i) {
                            Vector px = p.act_right(unit(m, b), unit(d, x));
                            for (std::size_t b2 = 0; b2 < m; ++b2) expect[b2] -= px[b2];
                        }
                        Vector got(m);
                        for (std::size_t b2 = 0; b2 < m; ++b2) got[b2] = fy[x * m + b2];
                        CHECK(got == expect);
                    }
                }
    }
}

TEST_CASE("module validation catches a bad action") {
    SuperAlgebra a = parse_named("dual_even");
    // x acts as the identity on the left, which breaks (xx)p = x(xp)
    std::vector<SparseVector> left(2), right(2);
    left[0] = {{0, Scalar(1)}};
    left[1] = {{0, Scalar(1)}};
    right[0] = {{0, Scalar(1)}};
    SuperBimodule p(a.field(), 2, {Parity::even()}, left, right);
    ValidationReport r = validate(a, p);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().axiom == "left-associativity");

    SuperBimodule wrong(a.field(), 3, {Parity::even()}, std::vector<SparseVector>(3),
                        std::vector<SparseVector>(3));
    CHECK(validate(a, wrong).violations.front().axiom == "dimension");
}
