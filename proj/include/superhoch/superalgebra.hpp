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

#ifndef SUPERHOCH_SUPERALGEBRA_HPP
#define SUPERHOCH_SUPERALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superhoch/matrix.hpp"
#include "superhoch/scalar.hpp"

namespace superhoch {

/// Element of Z/2.
class Parity {
public:
    constexpr Parity() = default;
    constexpr explicit Parity(int v) : v_(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}

    static constexpr Parity even() { return Parity(0); }
    static constexpr Parity odd() { return Parity(1); }

    constexpr int value() const noexcept { return v_; }
    constexpr bool is_odd() const noexcept { return v_ == 1; }

    friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.v_ ^ b.v_); }
    friend constexpr Parity operator-(Parity a, Parity b) { return Parity(a.v_ ^ b.v_); }
    Parity& operator+=(Parity b) { v_ ^= b.v_; return *this; }
    friend constexpr int operator*(Parity a, Parity b) { return a.v_ & b.v_; }
    friend constexpr bool operator==(Parity, Parity) = default;

private:
    std::uint8_t v_ = 0;
};

/// Koszul sign (-1)^{a b}.
inline Scalar koszul(Parity a, Parity b) { return sign(a * b); }

struct Term {
    std::size_t index;
    Scalar coeff;
};

/// Sparse linear combination of basis vectors, sorted by index.
using SparseVector = std::vector<Term>;

SparseVector sparse_from_dense(std::span<const Scalar> v);

/*
 * Finite-dimensional superalgebra given by structure constants:
 * e_i e_j = sum_k table(i, j)[k] e_k.
 *
 * Construction checks only that indices are in range. Grading and
 * associativity are reported by validate().
 */
class SuperAlgebra {
public:
    SuperAlgebra(Field field, std::vector<Parity> parities, std::vector<std::string> names,
                 std::vector<SparseVector> table);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return parities_.size(); }
    Parity parity(std::size_t i) const { return parities_.at(i); }
    const std::vector<Parity>& parities() const noexcept { return parities_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    bool has_explicit_names() const noexcept { return explicit_names_; }

    const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

    /// Coordinates of a two-sided unit, if one exists.
    const std::optional<Vector>& unit() const noexcept { return unit_; }

    /// Same algebra with every constant mapped into another field.
    SuperAlgebra in(Field field) const;

    friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b);

private:
    Field field_;
    std::vector<Parity> parities_;
    std::vector<std::string> names_;
    bool explicit_names_ = false;
    std::vector<SparseVector> table_;
    std::optional<Vector> unit_;
};

/// Element of an algebra or module, optionally declared homogeneous.
struct SuperElement {
    Vector coords;
    std::optional<Parity> parity;

    static SuperElement basis(std::size_t dim, std::size_t i, Parity p);
    /// Checks that coords vanish off basis vectors of parity p.
    static SuperElement homogeneous(Vector coords, Parity p, const std::vector<Parity>& parities);
    /// Declares the parity when the coordinates are supported in one parity.
    static SuperElement detect(Vector coords, const std::vector<Parity>& parities);

    Parity require_parity() const;
};

struct Violation {
    std::string axiom;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

enum class AssociativityMode {
    standard,      // (ab)c = a(bc)
    cyclic_literal // (ab)c = (bc)a; diagnostic only, fails on most superalgebras
};

ValidationReport validate(const SuperAlgebra& a, AssociativityMode mode = AssociativityMode::standard);

SuperElement multiply(const SuperAlgebra& a, const SuperElement& x, const SuperElement& y);
Vector multiply(const SuperAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y);

struct NamedParams {
    std::size_t p = 0;
    std::size_t q = 0;
    std::string base;  // square_zero: name of the base algebra, module = self
};

/// ground, dual_even, dual_odd, clifford1, matrix (p|q), square_zero (base).
SuperAlgebra make_named(const std::string& name, const NamedParams& params = {}, Field field = {});
/// Parses "matrix(1|1)", "square_zero(dual_odd)" or a bare name.
SuperAlgebra parse_named(const std::string& spec, Field field = {});

/// Homogeneous linear endomorphism; column j is the image of e_j.
struct LinearMap {
    DenseMatrix matrix;
    Parity parity;

    Vector apply(std::span<const Scalar> x) const { return matrix.apply(x); }
    LinearMap compose(const LinearMap& inner) const { return {matrix * inner.matrix, parity + inner.parity}; }
};

enum class Side { left, right };

/// Left: b -> ab - (-1)^{|a||b|} ba. Right: b -> ba - (-1)^{|a||b|} ab.
LinearMap inner_derivation(const SuperAlgebra& a, const SuperElement& element, Side side);

/// Left law D(ab) = (Da)b + (-1)^{|D||a|} a(Db); right law
/// D(ab) = (-1)^{|D||b|} (Da)b + a(Db). Checked on every basis pair.
bool is_derivation(const SuperAlgebra& a, const LinearMap& d, Side side);

/// Super-commutator D1 D2 - (-1)^{|D1||D2|} D2 D1.
LinearMap supercommutator(const LinearMap& d1, const LinearMap& d2);

/// bracket[i * dim + j] = [e_i, e_j].
ValidationReport check_lie_superalgebra(const std::vector<Parity>& parities, const std::vector<SparseVector>& bracket);

/// [x, y] = xy - (-1)^{|x||y|} yx on basis elements.
std::vector<SparseVector> commutator_bracket(const SuperAlgebra& a);

}  // namespace superhoch

#endif  // SUPERHOCH_SUPERALGEBRA_HPP
