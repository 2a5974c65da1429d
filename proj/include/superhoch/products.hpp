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

#ifndef SUPERHOCH_PRODUCTS_HPP
#define SUPERHOCH_PRODUCTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superhoch/cochain.hpp"

namespace superhoch {

/// Base algebra, coefficient module (the algebra itself when none is given) and pi.
class ProductContext {
public:
    explicit ProductContext(SuperAlgebra a);
    ProductContext(SuperAlgebra a, SuperBimodule p);

    const SuperAlgebra& algebra() const noexcept { return a_; }
    const SuperBimodule& module() const noexcept { return p_; }
    const SuperBimodule& self() const noexcept { return self_; }
    bool has_module() const noexcept { return has_module_; }
    const Cochain& pi() const noexcept { return pi_; }

    /// The coefficient module a cochain of the given target lives over.
    const SuperBimodule& coefficients(Target t) const { return t == Target::algebra ? self_ : p_; }
    std::shared_ptr<const CochainBasis> basis(Target t, std::size_t arity, Parity parity) const;
    Cochain delta(const Cochain& f) const;

private:
    SuperAlgebra a_;
    SuperBimodule self_;
    SuperBimodule p_;
    bool has_module_ = false;
    Cochain pi_;
};

/// (f u g)(a, b) = (-1)^{|g|(|a_1| + ... + |a_M|)} f(a) g(b); at most one factor module-valued.
Cochain cup(const ProductContext& ctx, const Cochain& f, const Cochain& g);

/// Inserts g into argument i (0-based) of f with sign (-1)^{|g|(|x_1| + ... + |x_i|)}.
Cochain comp_i(const ProductContext& ctx, const Cochain& f, const Cochain& g, std::size_t i);

/// f o g = sum_i (-1)^{(N-1) i} f o_i g; zero when f has arity 0.
Cochain comp(const ProductContext& ctx, const Cochain& f, const Cochain& g);

/// [f, g] = f o g - (-1)^{(M-1)(N-1) + |f||g|} g o f, with the one-sided module cases.
Cochain bracket(const ProductContext& ctx, const Cochain& f, const Cochain& g);

struct IdentityResult {
    std::string name;
    bool passed = true;
    std::size_t trials = 0;
    std::size_t nontrivial = 0;  // trials where some side of the identity was nonzero
    std::string counterexample;
};

struct AuditReport {
    std::uint64_t seed = 0;
    std::vector<IdentityResult> results;
    bool ok() const;
    const IdentityResult* find(const std::string& name) const;
};

/// Names accepted by audit_identity, in report order.
const std::vector<std::string>& audit_identity_names();

IdentityResult audit_identity(const ProductContext& ctx, const std::string& name, std::uint64_t seed,
                              std::size_t trials);
AuditReport audit_identities(const ProductContext& ctx, std::uint64_t seed, std::size_t trials);

}  // namespace superhoch

#endif  // SUPERHOCH_PRODUCTS_HPP
