#ifndef MOMCERT_POLY_HPP
#define MOMCERT_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "momcert/rational.hpp"

namespace momcert {

/// Polynomial degree with a distinguished value for the zero polynomial.
///
/// Minus infinity compares below every finite degree and absorbs addition,
/// so deg(f*g) = deg f + deg g holds without special cases.
class Degree {
public:
    constexpr explicit Degree(std::size_t d) : value_(d), finite_(true) {}
    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_finite() const { return finite_; }
    std::size_t value() const {
        if (!finite_) throw std::logic_error("degree of the zero polynomial has no value");
        return value_;
    }

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(Degree a, std::size_t b) { return a == Degree(b); }
    friend constexpr std::strong_ordering operator<=>(Degree a, std::size_t b) { return a <=> Degree(b); }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return minus_infinity();
        return Degree(a.value_ + b.value_);
    }

    friend std::ostream& operator<<(std::ostream& os, Degree d) {
        return d.finite_ ? (os << d.value_) : (os << "-inf");
    }

private:
    constexpr Degree() = default;
    std::size_t value_ = 0;
    bool finite_ = false;
};

namespace detail {
template <class F>
bool scalar_is_zero(const F& x) {
    return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial, coefficients ascending by degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector. F is a field type supplying the ADL hooks is_zero,
/// zero_like, one_like, from_integer and lift (see rational.hpp).
template <class F>
class Poly {
public:
    using scalar_type = F;

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly constant(F c) { return Poly(std::vector<F>{std::move(c)}); }

    /// c * z^k
    static Poly monomial(F c, std::size_t k) {
        std::vector<F> v(k + 1, zero_like(c));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    const std::vector<F>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    const F& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// Coefficient of z^k, or `zero` past the end.
    F coeff(std::size_t k, const F& zero) const { return k < coeffs_.size() ? coeffs_[k] : zero; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Degree degree() const {
        return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
    }

    const F& leading_coeff() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    bool is_monic() const {
        return !coeffs_.empty() && coeffs_.back() == one_like(coeffs_.back());
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly operator-() const {
        std::vector<F> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(-c);
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), zero_like(o.coeffs_.back()));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), zero_like(o.coeffs_.back()));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> v(a.size() + b.size() - 1, zero_like(a.coeffs_.front()));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (detail::scalar_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

private:
    void trim() {
        while (!coeffs_.empty() && detail::scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

using RationalPoly = Poly<Rational>;

/// s * f
template <class F>
Poly<F> scale(const Poly<F>& f, const F& s) {
    if (is_zero(s)) return Poly<F>();
    std::vector<F> v;
    v.reserve(f.size());
    for (const auto& c : f.coeffs()) v.push_back(c * s);
    return Poly<F>(std::move(v));
}

/// f / lc(f); rejects the zero polynomial.
template <class F>
Poly<F> make_monic(const Poly<F>& f) {
    const F& lc = f.leading_coeff();
    return scale(f, one_like(lc) / lc);
}

/// Horner evaluation at x. Coefficients are carried into x's field by
/// lift(), which is the identity when both live in the same field.
template <class F, class X>
X eval(const Poly<F>& f, const X& x) {
    X acc = zero_like(x);
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * x + lift(*it, x);
    }
    return acc;
}

template <class F>
Poly<F> pow(const Poly<F>& f, unsigned k) {
    if (k == 0) {
        if (f.is_zero()) {
            if constexpr (std::is_same_v<F, Rational>) return Poly<F>::constant(Rational(1));
            throw std::domain_error("zeroth power of the zero polynomial has no field context");
        }
        return Poly<F>::constant(one_like(f.leading_coeff()));
    }
    Poly<F> result = f;
    for (unsigned i = 1; i < k; ++i) result *= f;
    return result;
}

/// f(g(z)) by Horner's rule over polynomials.
template <class F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g) {
    Poly<F> acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * g + Poly<F>::constant(*it);
    }
    return acc;
}

template <class F>
Poly<F> derivative(const Poly<F>& f) {
    if (f.size() <= 1) return Poly<F>();
    std::vector<F> v;
    v.reserve(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) {
        v.push_back(f[i] * from_integer(f[i], static_cast<long>(i)));
    }
    return Poly<F>(std::move(v));
}

/// H with H' = f and H(0) = 0.
template <class F>
Poly<F> antiderivative(const Poly<F>& f) {
    if (f.is_zero()) return Poly<F>();
    std::vector<F> v;
    v.reserve(f.size() + 1);
    v.push_back(zero_like(f[0]));
    for (std::size_t i = 0; i < f.size(); ++i) {
        v.push_back(f[i] / from_integer(f[i], static_cast<long>(i + 1)));
    }
    return Poly<F>(std::move(v));
}

/// Euclidean division: returns (q, r) with f = q*g + r and deg r < deg g.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& f, const Poly<F>& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.size() < g.size()) return {Poly<F>(), f};

    const std::size_t dg = g.size() - 1;
    const F inv_lc = one_like(g.leading_coeff()) / g.leading_coeff();
    std::vector<F> rem = f.coeffs();
    std::vector<F> quo(f.size() - dg, zero_like(inv_lc));
    for (std::size_t k = quo.size(); k-- > 0;) {
        F c = rem[k + dg] * inv_lc;
        if (is_zero(c)) continue;
        for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= c * g[j];
        quo[k] = std::move(c);
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = f.size(); k-- > 0;) {
        if (is_zero(f[k])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << f[k] << ")";
        if (k == 1) os << "*z";
        if (k > 1) os << "*z^" << k;
    }
    return os;
}

}  // namespace momcert

#endif  // MOMCERT_POLY_HPP
