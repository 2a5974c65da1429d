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

#ifndef SUPERHOCH_SUPERMODULE_HPP
#define SUPERHOCH_SUPERMODULE_HPP

#include <string>
#include <vector>

#include "superhoch/superalgebra.hpp"

namespace superhoch {

/*
 * Two-sided supermodule P over an algebra of dimension d:
 *   e_i . p_a = sum_b left(i, a)[b] p_b
 *   p_a . e_i = sum_b right(a, i)[b] p_b
 */
class SuperBimodule {
public:
    SuperBimodule(Field field, std::size_t algebra_dim, std::vector<Parity> parities,
                  std::vector<SparseVector> left, std::vector<SparseVector> right);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return parities_.size(); }
    std::size_t algebra_dim() const noexcept { return algebra_dim_; }
    Parity parity(std::size_t a) const { return parities_.at(a); }
    const std::vector<Parity>& parities() const noexcept { return parities_; }

    const SparseVector& left(std::size_t i, std::size_t a) const { return left_[i * dim() + a]; }
    const SparseVector& right(std::size_t a, std::size_t i) const { return right_[a * algebra_dim_ + i]; }

    Vector act_left(std::span<const Scalar> x, std::span<const Scalar> p) const;
    Vector act_right(std::span<const Scalar> p, std::span<const Scalar> x) const;

    SuperBimodule in(Field field) const;

    friend bool operator==(const SuperBimodule&, const SuperBimodule&);

private:
    Field field_;
    std::size_t algebra_dim_;
    std::vector<Parity> parities_;
    std::vector<SparseVector> left_;
    std::vector<SparseVector> right_;
};

/// Grading of both actions and the three mixed associativity laws.
ValidationReport validate(const SuperAlgebra& a, const SuperBimodule& p);

SuperBimodule self_module(const SuperAlgebra& a);
SuperBimodule zero_module(const SuperAlgebra& a);

/// A (+) P with (a, x)(b, y) = (ab, ay + xb); basis of A first, then P.
SuperAlgebra square_zero_algebra(const SuperAlgebra& a, const SuperBimodule& p);

/*
 * C^1(A;P) as a bimodule:
 *   (a * f)(x) = a f(x),   (f * a)(x) = f(ax) - f(a) x.
 * Basis element i * dim(P) + b is the elementary map e_i -> p_b, of parity
 * |p_b| - |e_i|.
 */
SuperBimodule hom_module(const SuperAlgebra& a, const SuperBimodule& p);

}  // namespace superhoch

#endif  // SUPERHOCH_SUPERMODULE_HPP
