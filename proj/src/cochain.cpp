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

#include "superhoch/cochain.hpp"

#include <sstream>

namespace superhoch {

namespace {

const Scalar& zero_scalar() {
    static const Scalar z;
    return z;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

void require_shape(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& f) {
    if (p.algebra_dim() != a.dim()) throw Error(ErrorCode::dimension, "module is over an algebra of another dimension");
    if (f.basis().inputs() != a.parities() || f.basis().outputs() != p.parities())
        throw Error(ErrorCode::dimension, "cochain does not belong to C*(A;P) for the given algebra and module");
}

}  // namespace

CochainBasis::CochainBasis(std::vector<Parity> inputs, std::vector<Parity> outputs, std::size_t arity, Parity parity)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), arity_(arity), parity_(parity) {
    const std::size_t d = inputs_.size(), m = outputs_.size();
    const std::size_t tuples = ipow(d, arity_);
    tuple_parity_.resize(tuples);
    position_.assign(tuples * m, -1);
    std::vector<std::size_t> idx(arity_, 0);
    for (std::size_t t = 0; t < tuples; ++t) {
        Parity s;
        for (auto i : idx) s += inputs_[i];
        tuple_parity_[t] = s;
        for (std::size_t b = 0; b < m; ++b)
            if (outputs_[b] == parity_ + s) {
                position_[t * m + b] = static_cast<std::ptrdiff_t>(entries_.size());
                entries_.push_back({t, b});
            }
        for (std::size_t k = arity_; k-- > 0;) {
            if (++idx[k] < d) break;
            idx[k] = 0;
        }
    }
}

std::vector<std::size_t> CochainBasis::decode(std::size_t tuple) const {
    std::vector<std::size_t> idx(arity_);
    const std::size_t d = inputs_.size();
    for (std::size_t k = arity_; k-- > 0;) {
        idx[k] = tuple % d;
        tuple /= d;
    }
    return idx;
}

std::size_t CochainBasis::encode(std::span<const std::size_t> idx) const {
    if (idx.size() != arity_) throw Error(ErrorCode::input, "multi-index has the wrong length");
    std::size_t t = 0;
    for (auto i : idx) {
        if (i >= inputs_.size()) throw Error(ErrorCode::input, "multi-index entry out of range");
        t = t * inputs_.size() + i;
    }
    return t;
}

Cochain::Cochain(std::shared_ptr<const CochainBasis> basis, Target target)
    : basis_(std::move(basis)), coeffs_(basis_->size()), target_(target) {}

Cochain::Cochain(std::shared_ptr<const CochainBasis> basis, Vector coefficients, Target target)
    : basis_(std::move(basis)), coeffs_(std::move(coefficients)), target_(target) {
    if (coeffs_.size() != basis_->size()) throw Error(ErrorCode::dimension, "coefficient vector has the wrong length");
}

Cochain Cochain::zero(const std::vector<Parity>& inputs, const std::vector<Parity>& outputs, std::size_t arity,
                      Parity parity, Target target) {
    return Cochain(CochainBasis::make(inputs, outputs, arity, parity), target);
}

const Scalar& Cochain::coeff(std::size_t tuple, std::size_t out) const {
    auto pos = basis_->position(tuple, out);
    return pos < 0 ? zero_scalar() : coeffs_[static_cast<std::size_t>(pos)];
}

void Cochain::add(std::size_t tuple, std::size_t out, const Scalar& v) {
    if (v.is_zero()) return;
    auto pos = basis_->position(tuple, out);
    if (pos < 0) throw Error(ErrorCode::input, "value violates the homogeneity of the cochain");
    coeffs_[static_cast<std::size_t>(pos)] += v;
}

void Cochain::set(std::span<const std::size_t> idx, std::size_t out, const Scalar& v) {
    if (out >= output_dim()) throw Error(ErrorCode::input, "output index out of range");
    auto pos = basis_->position(basis_->encode(idx), out);
    if (pos < 0) {
        if (v.is_zero()) return;
        throw Error(ErrorCode::input, "value violates the homogeneity of the cochain");
    }
    coeffs_[static_cast<std::size_t>(pos)] = v;
}

Vector Cochain::value(std::size_t tuple) const {
    Vector v(output_dim());
    for (std::size_t b = 0; b < v.size(); ++b) v[b] = coeff(tuple, b);
    return v;
}

bool Cochain::is_zero() const { return superhoch::is_zero(coeffs_); }

Cochain Cochain::with_target(Target t) const {
    Cochain c = *this;
    c.target_ = t;
    return c;
}

void Cochain::require_same_space(const Cochain& rhs) const {
    if (basis_ != rhs.basis_ && !basis_->same_space(*rhs.basis_))
        throw Error(ErrorCode::dimension, "cochains live in different spaces");
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
    require_same_space(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!rhs.coeffs_[i].is_zero()) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
    require_same_space(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!rhs.coeffs_[i].is_zero()) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Cochain& Cochain::operator*=(const Scalar& s) {
    for (auto& c : coeffs_)
        if (!c.is_zero()) c *= s;
    return *this;
}

Cochain Cochain::operator-() const {
    Cochain c = *this;
    for (auto& x : c.coeffs_) x = -x;
    return c;
}

bool operator==(const Cochain& a, const Cochain& b) {
    return a.basis_->same_space(*b.basis_) && a.coeffs_ == b.coeffs_;
}

CochainPair CochainPair::split(const Cochain& f) {
    const auto& b = f.basis();
    Cochain other(CochainBasis::make(b.inputs(), b.outputs(), b.arity(), b.parity() + Parity::odd()), f.target());
    return f.parity().is_odd() ? CochainPair{other, f} : CochainPair{f, other};
}

Cochain random_cochain(std::shared_ptr<const CochainBasis> basis, Rng& rng, Target target, Field field) {
    Vector v(basis->size());
    for (auto& c : v) c = Scalar(rng.small()).in(field);
    return Cochain(std::move(basis), std::move(v), target);
}

std::shared_ptr<const CochainBasis> cochain_basis(const SuperAlgebra& a, const SuperBimodule& p, std::size_t arity,
                                                  Parity parity) {
    return CochainBasis::make(a.parities(), p.parities(), arity, parity);
}

Cochain identity_cochain(const SuperAlgebra& a) {
    Cochain id = Cochain::zero(a.parities(), a.parities(), 1, Parity::even(), Target::algebra);
    for (std::size_t i = 0; i < a.dim(); ++i) id.add(i, i, Scalar(1).in(a.field()));
    return id;
}

Cochain multiplication_cochain(const SuperAlgebra& a) {
    Cochain pi = Cochain::zero(a.parities(), a.parities(), 2, Parity::even(), Target::algebra);
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : a.product(i, j)) pi.add(i * d + j, t.index, t.coeff);
    return pi;
}

Cochain delta(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& f) {
    require_shape(a, p, f);
    const std::size_t n = f.arity(), d = a.dim(), m = p.dim();
    const Parity fp = f.parity();
    Cochain out(cochain_basis(a, p, n + 1, fp), f.target());
    const auto& ob = out.basis();
    const std::size_t tail_mod = ipow(d, n);

    Vector acc(m);
    std::vector<std::size_t> x(n + 1, 0), y(n);
    for (std::size_t t = 0; t < ob.tuple_count(); ++t) {
        for (auto& s : acc) s = 0;
        bool any = false;

        // (-1)^{|x_1||f|} x_1 . f(x_2, ..., x_{n+1})
        {
            const std::size_t tail = t % tail_mod;
            Scalar s = koszul(a.parity(x[0]), fp);
            for (std::size_t b = 0; b < m; ++b) {
                const Scalar& c = f.coeff(tail, b);
                if (c.is_zero()) continue;
                for (const auto& term : p.left(x[0], b)) acc[term.index] += s * c * term.coeff;
                any = true;
            }
        }
        // sum_{i=1}^{n} (-1)^i f(x_1, ..., x_i x_{i+1}, ..., x_{n+1})
        for (std::size_t i = 1; i <= n; ++i) {
            const SparseVector& prod = a.product(x[i - 1], x[i]);
            if (prod.empty()) continue;
            Scalar s = sign(static_cast<long>(i));
            for (const auto& term : prod) {
                std::size_t k = 0;
                for (std::size_t j = 0; j + 1 < i; ++j) y[k++] = x[j];
                y[k++] = term.index;
                for (std::size_t j = i + 1; j <= n; ++j) y[k++] = x[j];
                std::size_t flat = 0;
                for (auto v : y) flat = flat * d + v;
                for (std::size_t b = 0; b < m; ++b) {
                    const Scalar& c = f.coeff(flat, b);
                    if (c.is_zero()) continue;
                    acc[b] += s * term.coeff * c;
                    any = true;
                }
            }
        }
        // (-1)^{n+1} f(x_1, ..., x_n) . x_{n+1}
        {
            const std::size_t head = t / d;
            Scalar s = sign(static_cast<long>(n + 1));
            for (std::size_t b = 0; b < m; ++b) {
                const Scalar& c = f.coeff(head, b);
                if (c.is_zero()) continue;
                for (const auto& term : p.right(b, x[n])) acc[term.index] += s * c * term.coeff;
                any = true;
            }
        }
        if (any)
            for (std::size_t b = 0; b < m; ++b) out.add(t, b, acc[b]);

        for (std::size_t k = n + 1; k-- > 0;) {
            if (++x[k] < d) break;
            x[k] = 0;
        }
    }
    return out;
}

CochainPair delta(const SuperAlgebra& a, const SuperBimodule& p, const CochainPair& f) {
    return {delta(a, p, f.even), delta(a, p, f.odd)};
}

DenseMatrix delta_matrix(const SuperAlgebra& a, const SuperBimodule& p, std::size_t arity, Parity parity) {
    auto source = cochain_basis(a, p, arity, parity);
    auto target_size = cochain_basis(a, p, arity + 1, parity)->size();
    DenseMatrix m(target_size, source->size());
    for (std::size_t c = 0; c < source->size(); ++c) {
        Cochain unit(source);
        unit.add(source->entry(c).tuple, source->entry(c).out, Scalar(1).in(a.field()));
        Cochain image = delta(a, p, unit);
        const auto& coeffs = image.coefficients();
        for (std::size_t r = 0; r < coeffs.size(); ++r)
            if (!coeffs[r].is_zero()) m(r, c) = coeffs[r];
    }
    return m;
}

Cochain shift(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& f) {
    require_shape(a, p, f);
    if (f.arity() == 0) throw Error(ErrorCode::input, "shift needs a cochain of arity at least 1");
    const std::size_t d = a.dim(), m = p.dim();
    SuperBimodule hom = hom_module(a, p);
    Cochain out(cochain_basis(a, hom, f.arity() - 1, f.parity()), Target::module);
    for (const auto& e : f.basis().entries()) {
        const Scalar& c = f.coeff(e.tuple, e.out);
        if (c.is_zero()) continue;
        // last argument becomes the input slot of the C^1 value
        out.add(e.tuple / d, (e.tuple % d) * m + e.out, c);
    }
    return out;
}

Cochain unshift(const SuperAlgebra& a, const SuperBimodule& p, const Cochain& g) {
    const std::size_t d = a.dim(), m = p.dim();
    if (g.basis().inputs() != a.parities() || g.output_dim() != d * m)
        throw Error(ErrorCode::dimension, "cochain is not valued in C^1(A;P)");
    Cochain out(cochain_basis(a, p, g.arity() + 1, g.parity()), Target::module);
    for (const auto& e : g.basis().entries()) {
        const Scalar& c = g.coeff(e.tuple, e.out);
        if (c.is_zero()) continue;
        out.add(e.tuple * d + e.out / m, e.out % m, c);
    }
    return out;
}

Vector evaluate(const Cochain& f, std::span<const Vector> args) {
    if (args.size() != f.arity()) throw Error(ErrorCode::input, "evaluate: arity mismatch");
    const std::size_t d = f.input_dim();
    for (const auto& x : args)
        if (x.size() != d) throw Error(ErrorCode::dimension, "evaluate: argument has wrong dimension");
    Vector out(f.output_dim());
    for (const auto& e : f.basis().entries()) {
        const Scalar& c = f.coeff(e.tuple, e.out);
        if (c.is_zero()) continue;
        Scalar w = c;
        std::size_t t = e.tuple;
        for (std::size_t k = f.arity(); k-- > 0 && !w.is_zero();) {
            w *= args[k][t % d];
            t /= d;
        }
        if (!w.is_zero()) out[e.out] += w;
    }
    return out;
}

std::optional<std::string> first_difference(const Cochain& a, const Cochain& b) {
    if (!a.basis().same_space(b.basis())) {
        std::ostringstream os;
        os << "different spaces: arity " << a.arity() << "/" << b.arity() << ", parity " << a.parity().value() << "/"
           << b.parity().value();
        return os.str();
    }
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        if (a.coefficients()[i] != b.coefficients()[i]) {
            const auto& e = a.basis().entry(i);
            std::ostringstream os;
            os << "at (";
            auto idx = a.basis().decode(e.tuple);
            for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
            os << ") -> " << e.out << ": " << a.coefficients()[i] << " vs " << b.coefficients()[i];
            return os.str();
        }
    return std::nullopt;
}

}  // namespace superhoch
