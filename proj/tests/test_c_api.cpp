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

#include <string>

#include "superhoch/superhoch.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { shc_free_string(p); }
    std::string s() const { return p ? p : ""; }
};

}  // namespace

TEST_CASE("named algebra through the C interface") {
    shc_algebra* a = nullptr;
    REQUIRE(shc_algebra_named("dual_odd", &a) == SHC_OK);
    CHECK(shc_algebra_dim(a) == 2);
    Str rep;
    CHECK(shc_algebra_validate(a, &rep.p) == SHC_OK);
    Str json;
    REQUIRE(shc_algebra_serialize(a, &json.p) == SHC_OK);
    shc_algebra* b = nullptr;
    REQUIRE(shc_algebra_parse(json.p, &b) == SHC_OK);
    Str again;
    shc_algebra_serialize(b, &again.p);
    CHECK(json.s() == again.s());
    Str coh;
    REQUIRE(shc_cohomology(a, nullptr, 1, -1, 1, 0, &coh.p) == SHC_OK);
    CHECK(coh.s().find("dim_H") != std::string::npos);
    Str audit;
    CHECK(shc_audit(a, nullptr, 3, 5, &audit.p) == SHC_OK);
    shc_algebra_free(a);
    shc_algebra_free(b);
}

TEST_CASE("errors and status codes") {
    shc_algebra* a = nullptr;
    CHECK(shc_algebra_parse("{", &a) == SHC_PARSE_ERROR);
    CHECK(a == nullptr);
    CHECK(std::string(shc_last_error()).size() > 0);
    CHECK(shc_algebra_named("nope", &a) == SHC_INPUT_ERROR);
    CHECK(shc_algebra_named(nullptr, &a) == SHC_INPUT_ERROR);
    REQUIRE(shc_algebra_named("clifford1", &a) == SHC_OK);
    CHECK(shc_algebra_set_field(a, "Fp:4") == SHC_INPUT_ERROR);
    CHECK(shc_algebra_set_field(a, "Fp:5") == SHC_OK);
    Str tag;
    shc_algebra_field(a, &tag.p);
    CHECK(tag.s() == "Fp:5");
    Str coh;
    CHECK(shc_cohomology(a, nullptr, 1, 2, 1, 0, &coh.p) == SHC_INPUT_ERROR);
    CHECK(shc_algebra_dim(nullptr) == 0);
    shc_algebra_free(a);

    const char* bad = R"({"field":"Q","dim":2,"parity":[0,1],"table":[[[[0,"1"]],[[1,"1"]]],[[[1,"1"]],[[1,"1"]]]]})";
    REQUIRE(shc_algebra_parse(bad, &a) == SHC_OK);
    Str rep;
    CHECK(shc_algebra_validate(a, &rep.p) == SHC_FAILED);
    CHECK(rep.s().find("grading") != std::string::npos);
    shc_algebra_free(a);
}

TEST_CASE("cochains and products") {
    shc_algebra* a = nullptr;
    REQUIRE(shc_algebra_named("dual_odd", &a) == SHC_OK);
    shc_cochain* f = nullptr;
    REQUIRE(shc_cochain_parse(a, nullptr, R"({"arity":1,"parity":1,"entries":[{"idx":[1],"out":0,"val":"1"}]})",
                              &f) == SHC_OK);
    shc_cochain* fg = nullptr;
    REQUIRE(shc_cup(a, nullptr, f, f, &fg) == SHC_OK);
    Str s;
    shc_cochain_serialize(a, fg, &s.p);
    CHECK(s.s().find("\"-1\"") != std::string::npos);
    shc_cochain* df = nullptr;
    REQUIRE(shc_delta(a, nullptr, f, &df) == SHC_OK);
    shc_cochain* c = nullptr;
    CHECK(shc_circ(a, nullptr, f, f, 3, &c) == SHC_INPUT_ERROR);
    CHECK(shc_circ(a, nullptr, f, f, -1, &c) == SHC_OK);
    shc_cochain* br = nullptr;
    CHECK(shc_bracket(a, nullptr, f, f, &br) == SHC_OK);
    for (auto* x : {f, fg, df, c, br}) shc_cochain_free(x);
    shc_algebra_free(a);
}

TEST_CASE("deformations and extensions") {
    shc_algebra* a = nullptr;
    REQUIRE(shc_algebra_named("dual_even", &a) == SHC_OK);
    shc_deformation* d = nullptr;
    const char* text = R"({"order":1,"terms":[{"arity":2,"parity":0,"entries":[{"idx":[1,1],"out":0,"val":"1"}]}]})";
    REQUIRE(shc_deformation_parse(a, text, &d) == SHC_OK);
    Str rep;
    CHECK(shc_deform_check(a, d, &rep.p) == SHC_OK);
    Str ob;
    CHECK(shc_deform_obstruct(a, d, &ob.p) == SHC_OK);
    shc_deformation* next = nullptr;
    Str er;
    REQUIRE(shc_deform_extend(a, d, &next, &er.p) == SHC_OK);
    REQUIRE(next != nullptr);
    Str js;
    shc_deformation_serialize(a, next, &js.p);
    CHECK(js.s().find("\"order\": 2") != std::string::npos);

    shc_cochain* h = nullptr;
    REQUIRE(shc_cochain_parse_module(a, nullptr,
                                     R"({"arity":2,"parity":0,"entries":[{"idx":[1,1],"out":0,"val":"1"}]})",
                                     &h) == SHC_OK);
    shc_cochain* z = nullptr;
    REQUIRE(shc_cochain_parse_module(a, nullptr, R"({"arity":2,"parity":0,"entries":[]})", &z) == SHC_OK);
    shc_algebra* e = nullptr;
    REQUIRE(shc_extension_build(a, nullptr, h, &e) == SHC_OK);
    CHECK(shc_algebra_dim(e) == 4);
    Str ve;
    CHECK(shc_algebra_validate(e, &ve.p) == SHC_OK);
    shc_cochain* w = nullptr;
    CHECK(shc_extension_equiv(a, nullptr, h, z, &w) == SHC_FAILED);
    CHECK(w == nullptr);
    CHECK(shc_extension_equiv(a, nullptr, h, h, &w) == SHC_OK);
    shc_cochain_free(w);
    shc_cochain_free(h);
    shc_cochain_free(z);
    shc_algebra_free(e);
    shc_deformation_free(d);
    shc_deformation_free(next);
    shc_algebra_free(a);
}
