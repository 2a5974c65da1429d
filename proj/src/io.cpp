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

#include "superhoch/io.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace superhoch {

using json = nlohmann::ordered_json;

namespace {

json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json field_json(Field f) {
    if (f.is_rational()) return "Q";
    json j;
    j["Fp"] = f.prime;
    return j;
}

Field field_from(const json& j) {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_unsigned())
        return Field::modular(j["Fp"].get<std::uint32_t>());
    throw Error(ErrorCode::parse, "field must be \"Q\" or {\"Fp\": p}");
}

const json& member(const json& j, const char* key) {
    if (!j.is_object()) throw Error(ErrorCode::parse, "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw Error(ErrorCode::parse, std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t count(const json& j, const char* what) {
    if (!j.is_number_unsigned()) throw Error(ErrorCode::parse, std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

const json& array(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorCode::parse, std::string(what) + " must be an array");
    return j;
}

Scalar scalar_from(const json& j, Field f) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_number_integer()) return Scalar(j.get<long>()).in(f);
    throw Error(ErrorCode::parse, "scalar must be a string \"p/q\" or an integer");
}

std::vector<Parity> parities_from(const json& j, std::size_t dim) {
    array(j, "parity");
    if (j.size() != dim) throw Error(ErrorCode::input, "parity array length differs from dim");
    std::vector<Parity> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() || v.get<unsigned>() > 1) throw Error(ErrorCode::parse, "parities must be 0 or 1");
        out.emplace_back(v.get<int>());
    }
    return out;
}

json parities_json(const std::vector<Parity>& ps) {
    json j = json::array();
    for (auto p : ps) j.push_back(p.value());
    return j;
}

SparseVector sparse_from(const json& j, Field f, std::size_t bound) {
    SparseVector v;
    for (const auto& t : array(j, "term list")) {
        if (!t.is_array() || t.size() != 2) throw Error(ErrorCode::parse, "a term is [index, \"scalar\"]");
        std::size_t k = count(t[0], "term index");
        if (k >= bound) throw Error(ErrorCode::input, "term index " + std::to_string(k) + " out of range");
        v.push_back({k, scalar_from(t[1], f)});
    }
    return v;
}

json sparse_json(const SparseVector& v) {
    json j = json::array();
    for (const auto& t : v) j.push_back(json::array({t.index, t.coeff.to_string()}));
    return j;
}

std::vector<SparseVector> table_from(const json& j, std::size_t rows, std::size_t cols, Field f, std::size_t bound,
                                     const char* what) {
    array(j, what);
    if (j.size() != rows) throw Error(ErrorCode::input, std::string(what) + " has the wrong number of rows");
    std::vector<SparseVector> out;
    for (const auto& row : j) {
        array(row, what);
        if (row.size() != cols) throw Error(ErrorCode::input, std::string(what) + " has a row of the wrong length");
        for (const auto& cell : row) out.push_back(sparse_from(cell, f, bound));
    }
    return out;
}

json cochain_json(const Cochain& f, Field field, bool with_field) {
    json j;
    if (with_field && !field.is_rational()) j["field"] = field_json(field);
    if (f.target() == Target::module) j["target"] = "module";
    j["arity"] = f.arity();
    j["parity"] = f.parity().value();
    json entries = json::array();
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
        const Scalar& c = f.coefficients()[k];
        if (c.is_zero()) continue;
        const auto& e = f.basis().entry(k);
        json entry;
        entry["idx"] = f.basis().decode(e.tuple);
        entry["out"] = e.out;
        entry["val"] = c.to_string();
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

Cochain cochain_from(const json& j, const SuperAlgebra& a, const SuperBimodule& p, Target t = Target::algebra) {
    if (j.is_object() && j.contains("target")) {
        const json& tj = j["target"];
        if (tj == "module")
            t = Target::module;
        else if (tj != "algebra")
            throw Error(ErrorCode::parse, "target must be \"algebra\" or \"module\"");
    }
    if (j.is_object() && j.contains("field")) field_from(j["field"]);  // checked for form; values follow A's field
    const std::size_t arity = count(member(j, "arity"), "arity");
    const std::size_t pv = count(member(j, "parity"), "parity");
    if (pv > 1) throw Error(ErrorCode::parse, "parity must be 0 or 1");
    if (arity > 8) throw Error(ErrorCode::unsupported, "cochain arity above 8");
    const auto& outs = t == Target::module ? p.parities() : a.parities();
    Cochain f(CochainBasis::make(a.parities(), outs, arity, Parity(static_cast<int>(pv))), t);
    for (const auto& e : array(member(j, "entries"), "entries")) {
        const json& idx = array(member(e, "idx"), "idx");
        std::vector<std::size_t> ix;
        for (const auto& v : idx) ix.push_back(count(v, "idx entry"));
        if (ix.size() != arity) throw Error(ErrorCode::input, "entry multi-index length differs from arity");
        for (auto i : ix)
            if (i >= a.dim()) throw Error(ErrorCode::input, "entry index out of range");
        const std::size_t out = count(member(e, "out"), "out");
        if (out >= outs.size()) throw Error(ErrorCode::input, "entry output index out of range");
        Scalar v = scalar_from(member(e, "val"), a.field());
        f.add(f.basis().encode(ix), out, v);
    }
    return f;
}

std::string witness_text(const std::vector<std::size_t>& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s;
}

}  // namespace

SuperAlgebra parse_algebra(std::string_view text) {
    json j = parse_text(text);
    try {
        Field f = field_from(member(j, "field"));
        const std::size_t d = count(member(j, "dim"), "dim");
        std::vector<Parity> ps = parities_from(member(j, "parity"), d);
        std::vector<std::string> names;
        if (j.contains("names")) {
            for (const auto& n : array(j["names"], "names")) {
                if (!n.is_string()) throw Error(ErrorCode::parse, "names must be strings");
                names.push_back(n.get<std::string>());
            }
            if (names.size() != d) throw Error(ErrorCode::input, "names array length differs from dim");
        }
        auto table = table_from(member(j, "table"), d, d, f, d, "table");
        return SuperAlgebra(f, std::move(ps), std::move(names), std::move(table));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, std::string("bad algebra file: ") + e.what());
    }
}

std::string serialize(const SuperAlgebra& a) {
    json j;
    j["field"] = field_json(a.field());
    j["dim"] = a.dim();
    j["parity"] = parities_json(a.parities());
    if (a.has_explicit_names()) j["names"] = a.names();
    json table = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(sparse_json(a.product(i, k)));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return dump(j);
}

SuperBimodule parse_module(std::string_view text, const SuperAlgebra& a) {
    json j = parse_text(text);
    try {
        field_from(member(j, "field"));  // values are read into A's field
        const std::size_t ad = count(member(j, "algebra_dim"), "algebra_dim");
        if (ad != a.dim()) throw Error(ErrorCode::input, "module is over an algebra of another dimension");
        const std::size_t m = count(member(j, "dim"), "dim");
        std::vector<Parity> ps = parities_from(member(j, "parity"), m);
        auto left = table_from(member(j, "left"), ad, m, a.field(), m, "left");
        auto right = table_from(member(j, "right"), m, ad, a.field(), m, "right");
        return SuperBimodule(a.field(), ad, std::move(ps), std::move(left), std::move(right));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, std::string("bad module file: ") + e.what());
    }
}

std::string serialize(const SuperBimodule& p) {
    json j;
    j["field"] = field_json(p.field());
    j["algebra_dim"] = p.algebra_dim();
    j["dim"] = p.dim();
    j["parity"] = parities_json(p.parities());
    json left = json::array(), right = json::array();
    for (std::size_t i = 0; i < p.algebra_dim(); ++i) {
        json row = json::array();
        for (std::size_t b = 0; b < p.dim(); ++b) row.push_back(sparse_json(p.left(i, b)));
        left.push_back(std::move(row));
    }
    for (std::size_t b = 0; b < p.dim(); ++b) {
        json row = json::array();
        for (std::size_t i = 0; i < p.algebra_dim(); ++i) row.push_back(sparse_json(p.right(b, i)));
        right.push_back(std::move(row));
    }
    j["left"] = std::move(left);
    j["right"] = std::move(right);
    return dump(j);
}

Cochain parse_cochain(std::string_view text, const SuperAlgebra& a, const SuperBimodule& p, Target default_target) {
    json j = parse_text(text);
    try {
        return cochain_from(j, a, p, default_target);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, std::string("bad cochain file: ") + e.what());
    }
}

std::string serialize(const Cochain& f, Field field) { return dump(cochain_json(f, field, true)); }

Deformation parse_deformation(std::string_view text, const SuperAlgebra& a) {
    json j = parse_text(text);
    try {
        if (j.contains("field")) field_from(j["field"]);
        const std::size_t order = count(member(j, "order"), "order");
        const json& terms = array(member(j, "terms"), "terms");
        if (terms.size() != order) throw Error(ErrorCode::input, "order differs from the number of terms");
        SuperBimodule self = self_module(a);
        Deformation d;
        for (const auto& t : terms) {
            Cochain c = cochain_from(t, a, self);
            if (c.arity() != 2 || c.parity() != Parity::even() || c.target() != Target::algebra)
                throw Error(ErrorCode::input, "deformation terms must be even algebra-valued 2-cochains");
            d.terms.push_back(std::move(c));
        }
        return d;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, std::string("bad deformation file: ") + e.what());
    }
}

std::string serialize(const Deformation& d, Field field) {
    json j;
    if (!field.is_rational()) j["field"] = field_json(field);
    j["order"] = d.order();
    json terms = json::array();
    for (const auto& t : d.terms) terms.push_back(cochain_json(t, field, false));
    j["terms"] = std::move(terms);
    return dump(j);
}

std::string report_json(const CohomologyReport& r, const std::string& module_label) {
    json j;
    j["field"] = field_json(r.field);
    j["module"] = module_label;
    j["max_arity"] = r.max_arity;
    json groups = json::array();
    for (const auto& g : r.groups) {
        json e;
        e["arity"] = g.arity;
        e["parity"] = g.parity.value();
        e["dim_C"] = g.dim_c;
        e["dim_Z"] = g.dim_z;
        e["dim_B"] = g.dim_b;
        e["dim_H"] = g.dim_h;
        if (!g.representatives.empty()) {
            json reps = json::array();
            for (const auto& c : g.representatives) reps.push_back(cochain_json(c, r.field, false));
            e["representatives"] = std::move(reps);
        }
        groups.push_back(std::move(e));
    }
    j["groups"] = std::move(groups);
    return dump(j);
}

std::string report_text(const CohomologyReport& r, const std::string& module_label) {
    std::ostringstream os;
    os << "field " << r.field.tag() << ", module " << module_label << "\n";
    os << std::setw(3) << "n" << std::setw(7) << "parity" << std::setw(8) << "dim C" << std::setw(8) << "dim Z"
       << std::setw(8) << "dim B" << std::setw(8) << "dim H" << "\n";
    for (const auto& g : r.groups)
        os << std::setw(3) << g.arity << std::setw(7) << g.parity.value() << std::setw(8) << g.dim_c << std::setw(8)
           << g.dim_z << std::setw(8) << g.dim_b << std::setw(8) << g.dim_h << "\n";
    return os.str();
}

std::string report_json(const AuditReport& r, Field field) {
    json j;
    j["field"] = field_json(field);
    j["seed"] = r.seed;
    j["passed"] = r.ok();
    json ids = json::array();
    for (const auto& x : r.results) {
        json e;
        e["identity"] = x.name;
        e["passed"] = x.passed;
        e["trials"] = x.trials;
        e["nontrivial"] = x.nontrivial;
        if (!x.passed) e["counterexample"] = x.counterexample;
        ids.push_back(std::move(e));
    }
    j["identities"] = std::move(ids);
    return dump(j);
}

std::string report_json(const ValidationReport& r, Field field) {
    json j;
    j["field"] = field_json(field);
    j["valid"] = r.ok();
    json vs = json::array();
    for (const auto& v : r.violations) {
        json e;
        e["axiom"] = v.axiom;
        e["witness"] = v.witness;
        e["detail"] = v.detail;
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    return dump(j);
}

std::string report_json(const DeformationCheck& r, Field field) {
    json j;
    j["field"] = field_json(field);
    j["order"] = r.orders.empty() ? 0 : r.orders.size() - 1;
    j["max_valid_order"] = r.max_valid_order;
    j["valid"] = r.valid();
    j["cocycle_consistent"] = r.cocycle_consistent;
    json os = json::array();
    for (const auto& o : r.orders) {
        json e;
        e["r"] = o.order;
        e["passed"] = o.passed;
        if (!o.passed) e["witness"] = witness_text(o.witness);
        os.push_back(std::move(e));
    }
    j["orders"] = std::move(os);
    return dump(j);
}

std::string report_json(const ObstructionResult& r, Field field) {
    json j;
    j["field"] = field_json(field);
    j["order"] = r.order;
    j["formulas_agree"] = r.formulas_agree();
    j["is_cocycle"] = r.is_cocycle();
    j["zero"] = r.direct.is_zero();
    j["obstruction"] = cochain_json(r.direct, field, false);
    return dump(j);
}

}  // namespace superhoch
