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

#ifndef SUPERHOCH_IO_HPP
#define SUPERHOCH_IO_HPP

#include <string>
#include <string_view>

#include "superhoch/cohomology.hpp"
#include "superhoch/deformation.hpp"
#include "superhoch/products.hpp"

namespace superhoch {

/*
 * JSON file formats. Keys are written in a fixed order and arrays in index
 * order, so serialize(parse(x)) is stable and parse(serialize(y)) == y.
 *
 *   algebra:  {"field", "dim", "parity", ["names"], "table"}   table[i][j] = [[k, "c"], ...]
 *   module:   {"field", "algebra_dim", "dim", "parity", "left", "right"}
 *             left[i][a] = e_i . p_a, right[a][i] = p_a . e_i
 *   cochain:  {["field"], ["target"], "arity", "parity", "entries": [{"idx", "out", "val"}]}
 *   deformation: {["field"], "order", "terms": [cochain, ...]}
 *
 * "field" is "Q" or {"Fp": p}. Parse errors raise ErrorCode::parse; well-formed
 * files with bad content raise ErrorCode::input.
 */

SuperAlgebra parse_algebra(std::string_view text);
std::string serialize(const SuperAlgebra& a);

SuperBimodule parse_module(std::string_view text, const SuperAlgebra& a);
std::string serialize(const SuperBimodule& p);

/// Module-valued cochains ("target": "module") take values in p, the rest in A itself;
/// files without a "target" key get default_target.
Cochain parse_cochain(std::string_view text, const SuperAlgebra& a, const SuperBimodule& p,
                      Target default_target = Target::algebra);
std::string serialize(const Cochain& f, Field field);

Deformation parse_deformation(std::string_view text, const SuperAlgebra& a);
std::string serialize(const Deformation& d, Field field);

std::string report_json(const CohomologyReport& r, const std::string& module_label);
std::string report_text(const CohomologyReport& r, const std::string& module_label);
std::string report_json(const AuditReport& r, Field field);
std::string report_json(const ValidationReport& r, Field field);
std::string report_json(const DeformationCheck& r, Field field);
std::string report_json(const ObstructionResult& r, Field field);

}  // namespace superhoch

#endif  // SUPERHOCH_IO_HPP
