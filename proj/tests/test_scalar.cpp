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

#include "superhoch/scalar.hpp"

using namespace superhoch;

TEST_CASE("rational scalars stay canonical") {
    Scalar a = Scalar::rational(2, 4);
    CHECK(a == Scalar::rational(1, 2));
    CHECK(a.to_string() == "1/2");
    CHECK((a + a).is_one());
    CHECK((a - a).is_zero());
    CHECK((Scalar(3) / Scalar(6)) == a);
    CHECK(Scalar::rational(-3, 1).to_string() == "-3");
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("modular scalars") {
    Field f = Field::modular(7);
    Scalar a = Scalar::modular(3, 7);
    CHECK((a * Scalar::modular(5, 7)).residue() == 1);
    CHECK(a.inverse() == Scalar::modular(5, 7));
    CHECK((-a).residue() == 4);
    // integer constants are mapped in
    CHECK((a + Scalar(-1)).residue() == 2);
    CHECK(Scalar::rational(1, 2).in(f).residue() == 4);
    CHECK_THROWS_AS(Scalar::rational(1, 7).in(f), Error);
    CHECK(Scalar::parse("-1/2", f).residue() == 3);
}

TEST_CASE("field tags") {
    CHECK(Field::parse("Q").is_rational());
    CHECK(Field::parse("Fp:5").prime == 5);
    CHECK(Field::modular(5).tag() == "Fp:5");
    CHECK_THROWS_AS(Field::modular(6), Error);
    CHECK_THROWS_AS(Field::parse("R"), Error);
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK(sign(-3) == Scalar(-1));
    CHECK(sign(4) == Scalar(1));
}

TEST_CASE("scalar parsing") {
    CHECK(Scalar::parse("3/9", Field::rationals()) == Scalar::rational(1, 3));
    CHECK_THROWS_AS(Scalar::parse("1/0", Field::rationals()), Error);
    CHECK_THROWS_AS(Scalar::parse("x", Field::rationals()), Error);
}
