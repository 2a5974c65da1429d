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

// superhoch command-line front end. Talks to the library only through superhoch.h.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "superhoch/superhoch.h"

namespace {

// exit codes: 0 ok, 1 negative answer, 2 bad input, 3 internal failure
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Abort {
    int code;
};

int exit_code(shc_status s) {
    switch (s) {
        case SHC_OK: return 0;
        case SHC_FAILED: return kExitFailed;
        case SHC_PARSE_ERROR:
        case SHC_INPUT_ERROR: return kExitInput;
        default: return kExitInternal;
    }
}

// Stops on hard errors; SHC_FAILED is returned to the caller.
shc_status check(shc_status s, const std::string& context) {
    if (s == SHC_OK || s == SHC_FAILED) return s;
    std::cerr << "superhoch: " << context << ": " << shc_last_error() << "\n";
    throw Abort{exit_code(s)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "superhoch: cannot read " << path << "\n";
        throw Abort{kExitInput};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Algebra = std::unique_ptr<shc_algebra, Deleter<shc_algebra, shc_algebra_free>>;
using Module = std::unique_ptr<shc_module, Deleter<shc_module, shc_module_free>>;
using CochainH = std::unique_ptr<shc_cochain, Deleter<shc_cochain, shc_cochain_free>>;
using DeformationH = std::unique_ptr<shc_deformation, Deleter<shc_deformation, shc_deformation_free>>;

void emit(char* text) {
    if (!text) return;
    std::cout << text;
    shc_free_string(text);
}

struct Session {
    std::string field;  // empty: the file's own field

    Algebra algebra(const std::string& path) const {
        shc_algebra* a = nullptr;
        check(shc_algebra_parse(read_file(path).c_str(), &a), path);
        Algebra out(a);
        if (!field.empty()) check(shc_algebra_set_field(a, field.c_str()), "--field " + field);
        return out;
    }
    Module module(const shc_algebra* a, const std::string& spec) const {
        if (spec.empty() || spec == "self") return nullptr;
        shc_module* p = nullptr;
        check(shc_module_parse(a, read_file(spec).c_str(), &p), spec);
        return Module(p);
    }
    CochainH cochain(const shc_algebra* a, const shc_module* p, const std::string& path, bool module_valued = false) const {
        shc_cochain* c = nullptr;
        const std::string text = read_file(path);
        check(module_valued ? shc_cochain_parse_module(a, p, text.c_str(), &c) : shc_cochain_parse(a, p, text.c_str(), &c),
              path);
        return CochainH(c);
    }
    DeformationH deformation(const shc_algebra* a, const std::string& path) const {
        shc_deformation* d = nullptr;
        check(shc_deformation_parse(a, read_file(path).c_str(), &d), path);
        return DeformationH(d);
    }
};

void print_cochain(const shc_algebra* a, const shc_cochain* c) {
    char* text = nullptr;
    check(shc_cochain_serialize(a, c, &text), "serialize");
    emit(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superhoch: cohomology and deformations of finite-dimensional associative superalgebras"};
    app.require_subcommand(1);
    Session session;
    if (const char* env = std::getenv("SUPERHOCH_FIELD")) session.field = env;
    app.add_option("--field", session.field, "Field override: Q or Fp:<p> (default from SUPERHOCH_FIELD)");

    std::string algebra_path, module_spec = "self", f_path, g_path, kind, h_path, h2_path, name;
    int status = 0;

    auto* validate = app.add_subcommand("validate", "Check the algebra (and optional module) axioms");
    validate->add_option("algebra", algebra_path)->required();
    std::string validate_module;
    validate->add_option("--module", validate_module, "Module file to check as well");

    auto* cohom = app.add_subcommand("cohomology", "Dimensions of C, Z, B, H per arity and parity");
    unsigned max_arity = 3;
    std::string parity = "both";
    bool as_json = false, reps = false;
    cohom->add_option("algebra", algebra_path)->required();
    cohom->add_option("--module", module_spec, "self or a module file")->capture_default_str();
    cohom->add_option("--max-arity", max_arity)->capture_default_str();
    cohom->add_option("--parity", parity)->check(CLI::IsMember({"0", "1", "both"}))->capture_default_str();
    cohom->add_flag("--json", as_json, "JSON report instead of a table");
    cohom->add_flag("--representatives", reps, "Include cocycle representatives (JSON only)");

    auto* delta = app.add_subcommand("delta", "Coboundary of a cochain");
    delta->add_option("algebra", algebra_path)->required();
    delta->add_option("f", f_path)->required();
    delta->add_option("--module", module_spec)->capture_default_str();

    int slot = -1;
    auto* cup = app.add_subcommand("cup", "Cup product f u g");
    auto* circ = app.add_subcommand("circ", "Composition f o g, or f o_i g with --i");
    auto* bracket = app.add_subcommand("bracket", "Bracket [f, g]");
    for (auto* sub : {cup, circ, bracket}) {
        sub->add_option("algebra", algebra_path)->required();
        sub->add_option("f", f_path)->required();
        sub->add_option("g", g_path)->required();
        sub->add_option("--module", module_spec)->capture_default_str();
    }
    circ->add_option("--i", slot, "Insertion slot (0-based)");

    auto* audit = app.add_subcommand("audit", "Check the product identities on random cochains");
    std::uint64_t seed = 0;
    unsigned trials = 100;
    audit->add_option("algebra", algebra_path)->required();
    audit->add_option("--seed", seed)->capture_default_str();
    audit->add_option("--trials", trials)->capture_default_str();
    audit->add_option("--module", module_spec)->capture_default_str();

    auto* deform = app.add_subcommand("deform", "Formal deformations: check, obstruct, extend");
    deform->add_option("action", kind)->required()->check(CLI::IsMember({"check", "obstruct", "extend"}));
    deform->add_option("algebra", algebra_path)->required();
    deform->add_option("deformation", f_path)->required();

    auto* extension = app.add_subcommand("extension", "Extensions of A by P: build E_h or test equivalence");
    extension->add_option("action", kind)->required()->check(CLI::IsMember({"build", "equiv"}));
    extension->add_option("algebra", algebra_path)->required();
    extension->add_option("module", module_spec, "self or a module file")->required();
    extension->add_option("cocycle", h_path, "Even 2-cochain h")->required();
    extension->add_option("cocycle2", h2_path, "Second cochain for equiv");

    auto* make = app.add_subcommand("make", "Write a named algebra: ground, dual_even, dual_odd, clifford1, "
                                            "matrix(p|q), square_zero(<name>)");
    make->add_option("name", name)->required();

    auto* format = app.add_subcommand("format", "Parse a file and write it back in canonical form");
    format->add_option("kind", kind)->required()->check(CLI::IsMember({"algebra", "module", "cochain", "deformation"}));
    format->add_option("algebra", algebra_path)->required();
    format->add_option("file", f_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*make) {
            shc_algebra* a = nullptr;
            check(shc_algebra_named(name.c_str(), &a), name);
            Algebra owned(a);
            if (!session.field.empty()) check(shc_algebra_set_field(a, session.field.c_str()), "--field");
            char* text = nullptr;
            check(shc_algebra_serialize(a, &text), "serialize");
            emit(text);
            return 0;
        }

        Algebra a = session.algebra(algebra_path);

        if (*validate) {
            char* report = nullptr;
            status = exit_code(check(shc_algebra_validate(a.get(), &report), "validate"));
            emit(report);
            if (status == 0 && !validate_module.empty()) {
                Module p = session.module(a.get(), validate_module);
                status = exit_code(check(shc_module_validate(a.get(), p.get(), &report), "validate module"));
                emit(report);
            }
            return status;
        }
        if (*cohom) {
            Module p = session.module(a.get(), module_spec);
            const int par = parity == "both" ? -1 : std::stoi(parity);
            char* report = nullptr;
            check(shc_cohomology(a.get(), p.get(), max_arity, par, as_json ? 1 : 0, reps ? 1 : 0, &report), "cohomology");
            emit(report);
            return 0;
        }
        if (*delta) {
            Module p = session.module(a.get(), module_spec);
            CochainH f = session.cochain(a.get(), p.get(), f_path);
            shc_cochain* out = nullptr;
            check(shc_delta(a.get(), p.get(), f.get(), &out), "delta");
            CochainH owned(out);
            print_cochain(a.get(), out);
            return 0;
        }
        if (*cup || *circ || *bracket) {
            Module p = session.module(a.get(), module_spec);
            CochainH f = session.cochain(a.get(), p.get(), f_path);
            CochainH g = session.cochain(a.get(), p.get(), g_path);
            shc_cochain* out = nullptr;
            if (*cup) check(shc_cup(a.get(), p.get(), f.get(), g.get(), &out), "cup");
            if (*circ) check(shc_circ(a.get(), p.get(), f.get(), g.get(), slot, &out), "circ");
            if (*bracket) check(shc_bracket(a.get(), p.get(), f.get(), g.get(), &out), "bracket");
            CochainH owned(out);
            print_cochain(a.get(), out);
            return 0;
        }
        if (*audit) {
            Module p = session.module(a.get(), module_spec);
            char* report = nullptr;
            status = exit_code(check(shc_audit(a.get(), p.get(), seed, trials, &report), "audit"));
            emit(report);
            return status;
        }
        if (*deform) {
            DeformationH d = session.deformation(a.get(), f_path);
            char* report = nullptr;
            if (kind == "check") {
                status = exit_code(check(shc_deform_check(a.get(), d.get(), &report), "deform check"));
                emit(report);
            } else if (kind == "obstruct") {
                check(shc_deform_obstruct(a.get(), d.get(), &report), "deform obstruct");
                emit(report);
            } else {
                shc_deformation* ext = nullptr;
                status = exit_code(check(shc_deform_extend(a.get(), d.get(), &ext, &report), "deform extend"));
                DeformationH owned(ext);
                if (ext) {
                    shc_free_string(report);
                    char* text = nullptr;
                    check(shc_deformation_serialize(a.get(), ext, &text), "serialize");
                    emit(text);
                } else {
                    emit(report);  // the obstruction, a cocycle that is not a coboundary
                }
            }
            return status;
        }
        if (*extension) {
            Module p = session.module(a.get(), module_spec);
            CochainH h = session.cochain(a.get(), p.get(), h_path, true);
            if (kind == "build") {
                shc_algebra* e = nullptr;
                check(shc_extension_build(a.get(), p.get(), h.get(), &e), "extension build");
                Algebra owned(e);
                char* text = nullptr;
                check(shc_algebra_serialize(e, &text), "serialize");
                emit(text);
                return 0;
            }
            if (h2_path.empty()) {
                std::cerr << "superhoch: extension equiv needs two cochains\n";
                return kExitInput;
            }
            CochainH h2 = session.cochain(a.get(), p.get(), h2_path, true);
            shc_cochain* w = nullptr;
            status = exit_code(check(shc_extension_equiv(a.get(), p.get(), h.get(), h2.get(), &w), "extension equiv"));
            CochainH owned(w);
            if (w)
                print_cochain(a.get(), w);
            else
                std::cout << "not equivalent\n";
            return status;
        }
        if (*format) {
            char* text = nullptr;
            if (kind == "algebra") {
                check(shc_algebra_serialize(a.get(), &text), "serialize");
            } else {
                if (f_path.empty()) {
                    std::cerr << "superhoch: format " << kind << " needs a file\n";
                    return kExitInput;
                }
                if (kind == "module") {
                    Module p = session.module(a.get(), f_path);
                    check(shc_module_serialize(p.get(), &text), "serialize");
                } else if (kind == "cochain") {
                    CochainH f = session.cochain(a.get(), nullptr, f_path);
                    check(shc_cochain_serialize(a.get(), f.get(), &text), "serialize");
                } else {
                    DeformationH d = session.deformation(a.get(), f_path);
                    check(shc_deformation_serialize(a.get(), d.get(), &text), "serialize");
                }
            }
            emit(text);
            return 0;
        }
    } catch (const Abort& e) {
        return e.code;
    }
    return 0;
}
