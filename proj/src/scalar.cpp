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

#include "superhoch/scalar.hpp"

#include <charconv>
#include <ostream>

namespace superhoch {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

Field Field::modular(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31))
        throw Error(ErrorCode::input, "field modulus must be a prime below 2^31, got " + std::to_string(p));
    return Field{p};
}

Field Field::parse(std::string_view tag) {
    if (tag == "Q") return rationals();
    if (tag.substr(0, 3) == "Fp:") {
        std::uint32_t p = 0;
        auto digits = tag.substr(3);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw Error(ErrorCode::parse, "bad field tag '" + std::string(tag) + "'");
        return modular(p);
    }
    throw Error(ErrorCode::parse, "bad field tag '" + std::string(tag) + "' (expected Q or Fp:<p>)");
}

std::string Field::tag() const { return is_rational() ? "Q" : "Fp:" + std::to_string(prime); }

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::input, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::modular(std::uint64_t residue, std::uint32_t prime) {
    Scalar s;
    s.q_ = 0;
    s.p_ = prime;
    s.r_ = residue % prime;
    return s;
}

Scalar Scalar::in(Field field) const {
    if (p_ == field.prime) return *this;
    if (p_ != 0) throw Error(ErrorCode::input, "cannot move a residue mod " + std::to_string(p_) + " into " + field.tag());
    if (field.is_rational()) return *this;
    std::uint64_t den = reduce(q_.get_den(), field.prime);
    if (den == 0)
        throw Error(ErrorCode::input, "denominator of " + to_string() + " vanishes in " + field.tag());
    std::uint64_t num = reduce(q_.get_num(), field.prime);
    return modular(num * mod_pow(den, field.prime - 2, field.prime) % field.prime, field.prime);
}

const mpq_class& Scalar::rational_value() const {
    if (p_) throw Error(ErrorCode::unsupported, "scalar is a residue, not a rational");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (!p_) throw Error(ErrorCode::unsupported, "scalar is a rational, not a residue");
    return r_;
}

void Scalar::unify(Scalar& other) {
    if (p_ == other.p_) return;
    if (p_ == 0) {
        *this = in(Field{other.p_});
    } else if (other.p_ == 0) {
        other = other.in(Field{p_});
    } else {
        throw Error(ErrorCode::input, "mixing residues of different primes");
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::input, "division by zero");
    if (p_) return modular(mod_pow(r_, p_ - 2, p_), p_);
    return Scalar(mpq_class(1) / q_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (p_ == 0 && rhs.p_ == 0) {
        q_ += rhs.q_;
        return *this;
    }
    Scalar r = rhs;
    unify(r);
    r_ = (r_ + r.r_) % p_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (p_ == 0 && rhs.p_ == 0) {
        q_ -= rhs.q_;
        return *this;
    }
    Scalar r = rhs;
    unify(r);
    r_ = (r_ + p_ - r.r_) % p_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (p_ == 0 && rhs.p_ == 0) {
        q_ *= rhs.q_;
        return *this;
    }
    Scalar r = rhs;
    unify(r);
    r_ = r_ * r.r_ % p_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::input, "division by zero");
    if (p_ == 0 && rhs.p_ == 0) {
        q_ /= rhs.q_;
        return *this;
    }
    Scalar r = rhs;
    unify(r);
    return *this *= r.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_)
        s.r_ = (p_ - r_) % p_;
    else
        s.q_ = -q_;
    return s;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.p_ == 0 && rhs.p_ == 0) return lhs.q_ == rhs.q_;
    Scalar a = lhs, b = rhs;
    a.unify(b);
    return a.r_ == b.r_;
}

std::string Scalar::to_string() const {
    if (p_) return std::to_string(r_);
    return q_.get_str();
}

Scalar Scalar::parse(std::string_view text, Field field) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorCode::parse, "empty scalar string");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t start = (allow_sign && !t.empty() && t[0] == '-') ? 1 : 0;
        if (start >= t.size()) return false;
        for (std::size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    mpq_class q;
    if (slash == std::string::npos) {
        if (!valid_int(s, true)) throw Error(ErrorCode::parse, "bad scalar '" + s + "'");
        q = mpq_class(mpz_class(s, 10));
    } else {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false)) throw Error(ErrorCode::parse, "bad scalar '" + s + "'");
        mpz_class d(den, 10);
        if (d == 0) throw Error(ErrorCode::parse, "zero denominator in '" + s + "'");
        q = mpq_class(mpz_class(num, 10), d);
        q.canonicalize();
    }
    return Scalar(std::move(q)).in(field);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace superhoch
