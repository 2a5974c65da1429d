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

#ifndef SUPERHOCH_SCALAR_HPP
#define SUPERHOCH_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace superhoch {

enum class ErrorCode { input, parse, dimension, unsupported };

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/*
 * Coefficient field of a session: the rationals (prime == 0) or F_p.
 *
 * Characteristic-zero results are the contract of the library; F_p is an
 * opt-in backend and every report produced over it carries its tag.
 */
struct Field {
    std::uint32_t prime = 0;

    static Field rationals() { return {}; }
    static Field modular(std::uint32_t p);
    static Field parse(std::string_view tag);  // "Q" or "Fp:<p>"

    bool is_rational() const noexcept { return prime == 0; }
    std::string tag() const;
    friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/*
 * Exact field element.
 *
 * A rational scalar (modulus 0) is kept canonical by GMP after every
 * operation. A modular scalar holds a residue 0 <= r < p. Mixing a rational
 * with a modular scalar maps the rational into F_p first, so integer
 * constants such as signs can be written without a field at hand.
 */
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class value);

    static Scalar rational(long num, long den);
    static Scalar modular(std::uint64_t residue, std::uint32_t prime);

    /// Maps this value into `field`; throws if a denominator is not invertible.
    Scalar in(Field field) const;

    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const noexcept { return p_ ? r_ == 1 : q_ == 1; }

    const mpq_class& rational_value() const;
    std::uint64_t residue() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar operator-() const;

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

    /// "p/q" with q omitted when 1; residues as plain decimals.
    std::string to_string() const;
    static Scalar parse(std::string_view text, Field field);

private:
    void unify(Scalar& other);

    mpq_class q_{0};
    std::uint64_t r_ = 0;
    std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^exponent for any integer exponent.
inline Scalar sign(long exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace superhoch

#endif  // SUPERHOCH_SCALAR_HPP
