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

#include "superhoch/superhoch.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "superhoch/io.hpp"

using namespace superhoch;

struct shc_algebra {
    SuperAlgebra value;
};
struct shc_module {
    SuperBimodule value;
};
struct shc_cochain {
    Cochain value;
};
struct shc_deformation {
    Deformation value;
};

namespace {

thread_local std::string last_error;

shc_status fail(shc_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <class F>
shc_status guard(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const Error& e) {
        return fail(e.code() == ErrorCode::parse ? SHC_PARSE_ERROR : SHC_INPUT_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SHC_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SHC_INTERNAL, e.what());
    }
}

char* copy(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) throw Error(ErrorCode::input, std::string("null ") + what);
}

SuperBimodule module_or_self(const shc_algebra* a, const shc_module* p) {
    return p ? p->value : self_module(a->value);
}

ProductContext context(const shc_algebra* a, const shc_module* p) {
    return p ? ProductContext(a->value, p->value) : ProductContext(a->value);
}

shc_cochain* wrap(Cochain c) { return new shc_cochain{std::move(c)}; }

}  // namespace

extern "C" {

const char* shc_version(void) { return "0.1.0"; }

const char* shc_last_error(void) { return last_error.c_str(); }

void shc_free_string(char* s) { std::free(s); }

shc_status shc_algebra_parse(const char* json, shc_algebra** out) {
    return guard([&] {
        require(json, "text");
        require(out, "output");
        *out = new shc_algebra{parse_algebra(json)};
        return SHC_OK;
    });
}

shc_status shc_algebra_named(const char* spec, shc_algebra** out) {
    return guard([&] {
        require(spec, "name");
        require(out, "output");
        *out = new shc_algebra{parse_named(spec)};
        return SHC_OK;
    });
}

shc_status shc_algebra_set_field(shc_algebra* a, const char* tag) {
    return guard([&] {
        require(a, "algebra");
        require(tag, "field tag");
        a->value = a->value.in(Field::parse(tag));
        return SHC_OK;
    });
}

shc_status shc_algebra_field(const shc_algebra* a, char** tag) {
    return guard([&] {
        require(a, "algebra");
        require(tag, "output");
        *tag = copy(a->value.field().tag());
        return SHC_OK;
    });
}

shc_status shc_algebra_serialize(const shc_algebra* a, char** json) {
    return guard([&] {
        require(a, "algebra");
        require(json, "output");
        *json = copy(serialize(a->value));
        return SHC_OK;
    });
}

shc_status shc_algebra_validate(const shc_algebra* a, char** report) {
    return guard([&] {
        require(a, "algebra");
        ValidationReport r = validate(a->value);
        if (report) *report = copy(report_json(r, a->value.field()));
        return r.ok() ? SHC_OK : SHC_FAILED;
    });
}

unsigned shc_algebra_dim(const shc_algebra* a) { return a ? static_cast<unsigned>(a->value.dim()) : 0; }

void shc_algebra_free(shc_algebra* a) { delete a; }

shc_status shc_module_parse(const shc_algebra* a, const char* json, shc_module** out) {
    return guard([&] {
        require(a, "algebra");
        require(json, "text");
        require(out, "output");
        *out = new shc_module{parse_module(json, a->value)};
        return SHC_OK;
    });
}

shc_status shc_module_self(const shc_algebra* a, shc_module** out) {
    return guard([&] {
        require(a, "algebra");
        require(out, "output");
        *out = new shc_module{self_module(a->value)};
        return SHC_OK;
    });
}

shc_status shc_module_serialize(const shc_module* p, char** json) {
    return guard([&] {
        require(p, "module");
        require(json, "output");
        *json = copy(serialize(p->value));
        return SHC_OK;
    });
}

shc_status shc_module_validate(const shc_algebra* a, const shc_module* p, char** report) {
    return guard([&] {
        require(a, "algebra");
        require(p, "module");
        ValidationReport r = validate(a->value, p->value);
        if (report) *report = copy(report_json(r, a->value.field()));
        return r.ok() ? SHC_OK : SHC_FAILED;
    });
}

void shc_module_free(shc_module* p) { delete p; }

shc_status shc_cochain_parse(const shc_algebra* a, const shc_module* p, const char* json, shc_cochain** out) {
    return guard([&] {
        require(a, "algebra");
        require(json, "text");
        require(out, "output");
        *out = wrap(parse_cochain(json, a->value, module_or_self(a, p)));
        return SHC_OK;
    });
}

shc_status shc_cochain_serialize(const shc_algebra* a, const shc_cochain* f, char** json) {
    return guard([&] {
        require(a, "algebra");
        require(f, "cochain");
        require(json, "output");
        *json = copy(serialize(f->value, a->value.field()));
        return SHC_OK;
    });
}

shc_status shc_cochain_parse_module(const shc_algebra* a, const shc_module* p, const char* json, shc_cochain** out) {
    return guard([&] {
        require(a, "algebra");
        require(json, "text");
        require(out, "output");
        *out = wrap(parse_cochain(json, a->value, module_or_self(a, p), Target::module));
        return SHC_OK;
    });
}

void shc_cochain_free(shc_cochain* f) { delete f; }

shc_status shc_delta(const shc_algebra* a, const shc_module* p, const shc_cochain* f, shc_cochain** out) {
    return guard([&] {
        require(a, "algebra");
        require(f, "cochain");
        require(out, "output");
        *out = wrap(context(a, p).delta(f->value));
        return SHC_OK;
    });
}

shc_status shc_cup(const shc_algebra* a, const shc_module* p, const shc_cochain* f, const shc_cochain* g,
                   shc_cochain** out) {
    return guard([&] {
        require(a, "algebra");
        require(f, "cochain");
        require(g, "cochain");
        require(out, "output");
        *out = wrap(cup(context(a, p), f->value, g->value));
        return SHC_OK;
    });
}

shc_status shc_circ(const shc_algebra* a, const shc_module* p, const shc_cochain* f, const shc_cochain* g, int slot,
                    shc_cochain** out) {
    return guard([&] {
        require(a, "algebra");
        require(f, "cochain");
        require(g, "cochain");
        require(out, "output");
        ProductContext ctx = context(a, p);
        *out = wrap(slot < 0 ? comp(ctx, f->value, g->value)
                             : comp_i(ctx, f->value, g->value, static_cast<std::size_t>(slot)));
        return SHC_OK;
    });
}

shc_status shc_bracket(const shc_algebra* a, const shc_module* p, const shc_cochain* f, const shc_cochain* g,
                       shc_cochain** out) {
    return guard([&] {
        require(a, "algebra");
        require(f, "cochain");
        require(g, "cochain");
        require(out, "output");
        *out = wrap(bracket(context(a, p), f->value, g->value));
        return SHC_OK;
    });
}

shc_status shc_cohomology(const shc_algebra* a, const shc_module* p, unsigned max_arity, int parity, int as_json,
                          int representatives, char** report) {
    return guard([&] {
        require(a, "algebra");
        require(report, "output");
        std::vector<Parity> ps;
        if (parity < 0) ps = {Parity::even(), Parity::odd()};
        else if (parity <= 1) ps = {Parity(parity)};
        else throw Error(ErrorCode::input, "parity must be 0, 1 or both");
        CohomologyReport r = cohomology_report(a->value, module_or_self(a, p), max_arity, ps, representatives != 0);
        const std::string label = p ? "file" : "self";
        *report = copy(as_json ? report_json(r, label) : report_text(r, label));
        return SHC_OK;
    });
}

shc_status shc_audit(const shc_algebra* a, const shc_module* p, uint64_t seed, unsigned trials, char** report) {
    return guard([&] {
        require(a, "algebra");
        require(report, "output");
        AuditReport r = audit_identities(context(a, p), seed, trials);
        *report = copy(report_json(r, a->value.field()));
        return r.ok() ? SHC_OK : SHC_FAILED;
    });
}

shc_status shc_deformation_parse(const shc_algebra* a, const char* json, shc_deformation** out) {
    return guard([&] {
        require(a, "algebra");
        require(json, "text");
        require(out, "output");
        *out = new shc_deformation{parse_deformation(json, a->value)};
        return SHC_OK;
    });
}

shc_status shc_deformation_serialize(const shc_algebra* a, const shc_deformation* d, char** json) {
    return guard([&] {
        require(a, "algebra");
        require(d, "deformation");
        require(json, "output");
        *json = copy(serialize(d->value, a->value.field()));
        return SHC_OK;
    });
}

void shc_deformation_free(shc_deformation* d) { delete d; }

shc_status shc_deform_check(const shc_algebra* a, const shc_deformation* d, char** report) {
    return guard([&] {
        require(a, "algebra");
        require(d, "deformation");
        DeformationCheck r = check_deformation(a->value, d->value);
        if (report) *report = copy(report_json(r, a->value.field()));
        return r.valid() ? SHC_OK : SHC_FAILED;
    });
}

shc_status shc_deform_obstruct(const shc_algebra* a, const shc_deformation* d, char** report) {
    return guard([&] {
        require(a, "algebra");
        require(d, "deformation");
        require(report, "output");
        ObstructionResult r = obstruction(a->value, d->value);
        *report = copy(report_json(r, a->value.field()));
        return SHC_OK;
    });
}

shc_status shc_deform_extend(const shc_algebra* a, const shc_deformation* d, shc_deformation** out, char** report) {
    return guard([&] {
        require(a, "algebra");
        require(d, "deformation");
        require(out, "output");
        *out = nullptr;
        ExtensionResult r = extend_deformation(a->value, d->value);
        if (report) *report = copy(report_json(r.obstruction, a->value.field()));
        if (!r.extended) return SHC_FAILED;
        *out = new shc_deformation{std::move(*r.extended)};
        return SHC_OK;
    });
}

shc_status shc_extension_build(const shc_algebra* a, const shc_module* p, const shc_cochain* h, shc_algebra** out) {
    return guard([&] {
        require(a, "algebra");
        require(h, "cochain");
        require(out, "output");
        *out = new shc_algebra{extension_algebra(a->value, module_or_self(a, p), h->value)};
        return SHC_OK;
    });
}

shc_status shc_extension_equiv(const shc_algebra* a, const shc_module* p, const shc_cochain* h, const shc_cochain* h2,
                               shc_cochain** witness) {
    return guard([&] {
        require(a, "algebra");
        require(h, "cochain");
        require(h2, "cochain");
        require(witness, "output");
        *witness = nullptr;
        auto f = extensions_equivalent(a->value, module_or_self(a, p), h->value, h2->value);
        if (!f) return SHC_FAILED;
        *witness = wrap(std::move(*f));
        return SHC_OK;
    });
}

}  // extern "C"
