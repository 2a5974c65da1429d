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

#ifndef SUPERHOCH_COHOMOLOGY_HPP
#define SUPERHOCH_COHOMOLOGY_HPP

#include <array>
#include <optional>
#include <vector>

#include "superhoch/cochain.hpp"

namespace superhoch {

/// Largest arity n for which H^n is computed (needs C^{n+1}).
inline constexpr std::size_t max_cohomology_arity = 4;

struct CohomologyGroup {
    std::size_t arity = 0;
    Parity parity;
    std::size_t dim_c = 0;
    std::size_t dim_z = 0;
    std::size_t dim_b = 0;
    std::size_t dim_h = 0;
    /// Cocycles completing a basis of B inside Z, picked greedily from the kernel basis.
    std::vector<Cochain> representatives;
};

CohomologyGroup cohomology(const SuperAlgebra& a, const SuperBimodule& p, std::size_t arity, Parity parity,
                           bool with_representatives = true);

struct CohomologyReport {
    Field field;
    std::size_t max_arity = 0;
    std::vector<CohomologyGroup> groups;  // ordered by arity, then parity
};

CohomologyReport cohomology_report(const SuperAlgebra& a, const SuperBimodule& p, std::size_t max_arity,
                                   const std::vector<Parity>& parities, bool with_representatives = false);

/// Basis (coordinates in P) of {m in P_i : (-1)^{|m||x|} x.m = m.x for all x}.
std::vector<Vector> supercommutant(const SuperAlgebra& a, const SuperBimodule& p, Parity parity);

struct DerivationQuotient {
    std::size_t derivations = 0;
    std::size_t inner = 0;
    std::size_t quotient = 0;
};

/// Dimensions of Der_i(A;P), the inner derivations and their quotient, from the defining equations.
DerivationQuotient derivation_quotient(const SuperAlgebra& a, const SuperBimodule& p, Parity parity);

/// Some g with delta(g) = f, free variables set to zero; nullopt when f is not a coboundary.
std::optional<Cochain> is_coboundary(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& f);

/// A (+) P with (x, m)(y, n) = (xy, xn + my + h(x, y)); h must be an even 2-cochain.
SuperAlgebra extension_algebra(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& h);

/// f with delta f = h - h2 when the two extensions are equivalent.
std::optional<Cochain> extensions_equivalent(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& h,
                                             const Cochain& h2);

struct ShiftCheck {
    std::size_t arity = 0;
    std::array<std::size_t, 2> direct{};   // dim H^n_i(A;P)
    std::array<std::size_t, 2> shifted{};  // dim H^{n-1}_i(A;C^1(A;P))
    bool ok() const { return direct == shifted; }
};

ShiftCheck shift_isomorphism_check(const SuperAlgebra& a, const SuperBimodule& p, std::size_t arity);

}  // namespace superhoch

#endif  // SUPERHOCH_COHOMOLOGY_HPP
