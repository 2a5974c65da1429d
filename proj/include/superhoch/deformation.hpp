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

#ifndef SUPERHOCH_DEFORMATION_HPP
#define SUPERHOCH_DEFORMATION_HPP

#include <optional>
#include <vector>

#include "superhoch/cochain.hpp"

namespace superhoch {

/*
 * Truncated formal deformation mu_t = mu_0 + mu_1 t + ... + mu_N t^N of an
 * algebra A; mu_0 is the product of A and is not stored. Every term is an
 * even 2-cochain in C^2(A;A).
 */
struct Deformation {
    std::vector<Cochain> terms;  // mu_1 ... mu_N
    std::size_t order() const noexcept { return terms.size(); }

    static Deformation trivial(const SuperAlgebra& a, std::size_t order);
};

struct OrderCheck {
    std::size_t order = 0;
    bool passed = true;
    std::vector<std::size_t> witness;  // first failing basis triple
};

struct DeformationCheck {
    std::vector<OrderCheck> orders;  // r = 0 ... N
    long max_valid_order = -1;       // -1 when A itself is not associative
    /// Whether "order 1 passes" and "delta mu_1 = 0" agree (vacuous when N = 0).
    bool cocycle_consistent = true;
    bool valid() const { return max_valid_order >= static_cast<long>(orders.size()) - 1; }
};

DeformationCheck check_deformation(const SuperAlgebra& a, const Deformation& d);

struct ObstructionResult {
    std::size_t order = 0;  // N + 1
    Cochain direct;         // double sum over basis triples
    Cochain via_composition;  // sum of mu_i o mu_j
    Cochain coboundary;     // delta of the obstruction
    bool formulas_agree() const { return direct == via_composition; }
    bool is_cocycle() const { return coboundary.is_zero(); }
};

/// Obstruction to extending a deformation that is valid through its order.
ObstructionResult obstruction(const SuperAlgebra& a, const Deformation& d);

struct ExtensionResult {
    ObstructionResult obstruction;
    std::optional<Deformation> extended;  // empty when the obstruction class is nonzero
};

/// Solves delta mu_{N+1} = Ob_{N+1} with free variables set to zero.
ExtensionResult extend_deformation(const SuperAlgebra& a, const Deformation& d);

/// psi_t = id + psi_1 t + ... + psi_M t^M with even 1-cochains psi_k.
struct FormalIsomorphism {
    std::vector<Cochain> terms;  // psi_1 ... psi_M
};

/// Inverse series truncated at the given order.
FormalIsomorphism invert(const SuperAlgebra& a, const FormalIsomorphism& psi, std::size_t order);

/// The deformation nu_t(a, b) = psi_t(mu_t(phi_t a, phi_t b)), phi_t the inverse of psi_t.
Deformation apply_isomorphism(const SuperAlgebra& a, const FormalIsomorphism& psi, const Deformation& d);

struct Infinitesimal {
    bool trivial = true;
    std::size_t index = 0;  // n of the first nonzero mu_n
    std::optional<Cochain> term;
    bool cocycle = false;
    bool coboundary = false;
    std::optional<Cochain> witness;  // g with delta g = mu_n
};

Infinitesimal infinitesimal_class(const SuperAlgebra& a, const Deformation& d);

}  // namespace superhoch

#endif  // SUPERHOCH_DEFORMATION_HPP
