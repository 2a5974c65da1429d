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

#ifndef SUPERHOCH_COCHAIN_HPP
#define SUPERHOCH_COCHAIN_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "superhoch/supermodule.hpp"

namespace superhoch {

/// Whether a cochain takes values in the algebra itself or in a separate module.
enum class Target { algebra, module };

/*
 * Homogeneity-allowed (multi-index, output) pairs of C^n_p(V;W), listed in
 * lexicographic order. Multi-indices are flattened big-endian:
 * (i_1, ..., i_n) -> ((i_1 d + i_2) d + ...) + i_n.
 */
class CochainBasis {
public:
    struct Entry {
        std::size_t tuple;
        std::size_t out;
    };

    CochainBasis(std::vector<Parity> inputs, std::vector<Parity> outputs, std::size_t arity, Parity parity);

    static std::shared_ptr<const CochainBasis> make(const std::vector<Parity>& inputs,
                                                    const std::vector<Parity>& outputs, std::size_t arity,
                                                    Parity parity) {
        return std::make_shared<const CochainBasis>(inputs, outputs, arity, parity);
    }

    std::size_t arity() const noexcept { return arity_; }
    Parity parity() const noexcept { return parity_; }
    std::size_t input_dim() const noexcept { return inputs_.size(); }
    std::size_t output_dim() const noexcept { return outputs_.size(); }
    const std::vector<Parity>& inputs() const noexcept { return inputs_; }
    const std::vector<Parity>& outputs() const noexcept { return outputs_; }

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t tuple_count() const noexcept { return tuple_parity_.size(); }
    const Entry& entry(std::size_t pos) const { return entries_[pos]; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    /// Position of (tuple, out) in the basis, or -1 when homogeneity forbids it.
    std::ptrdiff_t position(std::size_t tuple, std::size_t out) const {
        return position_[tuple * outputs_.size() + out];
    }
    Parity tuple_parity(std::size_t tuple) const { return tuple_parity_[tuple]; }

    std::vector<std::size_t> decode(std::size_t tuple) const;
    std::size_t encode(std::span<const std::size_t> idx) const;

    bool same_space(const CochainBasis& other) const {
        return arity_ == other.arity_ && parity_ == other.parity_ && inputs_ == other.inputs_ &&
               outputs_ == other.outputs_;
    }

private:
    std::vector<Parity> inputs_;
    std::vector<Parity> outputs_;
    std::size_t arity_;
    Parity parity_;
    std::vector<Entry> entries_;
    std::vector<std::ptrdiff_t> position_;
    std::vector<Parity> tuple_parity_;
};

/*
 * Homogeneous cochain f in C^n_p(A;P), stored densely over the allowed
 * pairs only. Arity n is the number of arguments; the Z-degree used by the
 * composition products is n - 1.
 */
class Cochain {
public:
    explicit Cochain(std::shared_ptr<const CochainBasis> basis, Target target = Target::module);
    Cochain(std::shared_ptr<const CochainBasis> basis, Vector coefficients, Target target);

    static Cochain zero(const std::vector<Parity>& inputs, const std::vector<Parity>& outputs, std::size_t arity,
                        Parity parity, Target target);

    const CochainBasis& basis() const noexcept { return *basis_; }
    const std::shared_ptr<const CochainBasis>& shared_basis() const noexcept { return basis_; }
    std::size_t arity() const noexcept { return basis_->arity(); }
    Parity parity() const noexcept { return basis_->parity(); }
    Target target() const noexcept { return target_; }
    std::size_t input_dim() const noexcept { return basis_->input_dim(); }
    std::size_t output_dim() const noexcept { return basis_->output_dim(); }

    /// Coordinates in basis order.
    const Vector& coefficients() const noexcept { return coeffs_; }

    const Scalar& coeff(std::size_t tuple, std::size_t out) const;
    Scalar at(std::span<const std::size_t> idx, std::size_t out) const { return coeff(basis_->encode(idx), out); }

    /// Adds v at (tuple, out); a nonzero v on a forbidden pair is an error.
    void add(std::size_t tuple, std::size_t out, const Scalar& v);
    void set(std::span<const std::size_t> idx, std::size_t out, const Scalar& v);

    /// f(e_{i_1}, ..., e_{i_n}) as a coordinate vector of the target.
    Vector value(std::size_t tuple) const;

    bool is_zero() const;
    Cochain with_target(Target t) const;

    Cochain& operator+=(const Cochain& rhs);
    Cochain& operator-=(const Cochain& rhs);
    Cochain& operator*=(const Scalar& s);
    Cochain operator-() const;
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
    friend bool operator==(const Cochain& a, const Cochain& b);

private:
    void require_same_space(const Cochain& rhs) const;

    std::shared_ptr<const CochainBasis> basis_;
    Vector coeffs_;
    Target target_;
};

/// Non-homogeneous cochain as the formal pair (even part, odd part).
struct CochainPair {
    Cochain even;
    Cochain odd;

    static CochainPair split(const Cochain& homogeneous);
    const Cochain& part(Parity p) const { return p.is_odd() ? odd : even; }
};

/// Deterministic generator for test and audit data.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in {-3, ..., 3}.
    long small() { return static_cast<long>(engine_() % 7) - 3; }
    std::size_t below(std::size_t n) { return n ? static_cast<std::size_t>(engine_() % n) : 0; }
    Parity parity() { return Parity(static_cast<int>(engine_() & 1)); }

private:
    std::mt19937_64 engine_;
};

Cochain random_cochain(std::shared_ptr<const CochainBasis> basis, Rng& rng, Target target, Field field = {});

/// Id_A in C^1_0(A;A) and the product cochain pi(a, b) = ab in C^2_0(A;A).
Cochain identity_cochain(const SuperAlgebra& a);
Cochain multiplication_cochain(const SuperAlgebra& a);

/// Cochain basis of C^n_p(A;P).
std::shared_ptr<const CochainBasis> cochain_basis(const SuperAlgebra& a, const SuperBimodule& p, std::size_t arity,
                                                  Parity parity);

/*
 * Coboundary with Koszul signs:
 *   df(x_1..x_{n+1}) = (-1)^{|x_1||f|} x_1 f(x_2..) + sum_i (-1)^i f(..x_i x_{i+1}..)
 *                      + (-1)^{n+1} f(x_1..x_n) x_{n+1}
 */
Cochain delta(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& f);
CochainPair delta(const SuperAlgebra& a, const SuperBimodule& p, const CochainPair& f);

/// Matrix of delta from C^n_p to C^{n+1}_p in the lexicographic bases.
DenseMatrix delta_matrix(const SuperAlgebra& a, const SuperBimodule& p, std::size_t arity, Parity parity);

/// f -> f_{n-1} with f_{n-1}(a_1..a_{n-1})(a_n) = f(a_1..a_n), valued in hom_module(A,P).
Cochain shift(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& f);
Cochain unshift(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& shifted);

/// Multilinear evaluation on arbitrary (not necessarily basis) arguments.
Vector evaluate(const Cochain& f, std::span<const Vector> args);

/// Human-readable description of the first coordinate where a and b differ.
std::optional<std::string> first_difference(const Cochain& a, const Cochain& b);

}  // namespace superhoch

#endif  // SUPERHOCH_COCHAIN_HPP
