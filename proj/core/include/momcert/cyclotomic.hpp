#ifndef MOMCERT_CYCLOTOMIC_HPP
#define MOMCERT_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "momcert/poly.hpp"
#include "momcert/rational.hpp"

namespace momcert {

using ComplexApprox = std::complex<double>;

/// Euler's totient by trial division.
std::uint64_t euler_phi(std::uint64_t k);

/// Positive divisors of k in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t k);

/// The k-th cyclotomic polynomial, by exact division of z^k - 1 by the
/// cyclotomic polynomials of the proper divisors of k. Rejects k = 0.
RationalPoly cyclotomic_polynomial(std::uint64_t k);

/// Q(zeta_k) presented as Q[z] / Phi_k. Shared read-only by its elements.
class CyclotomicContext {
public:
    /// Returns the (cached) context of order k; rejects k = 0.
    static std::shared_ptr<const CyclotomicContext> make(std::uint64_t k);

    std::uint64_t order() const { return order_; }
    std::size_t degree() const { return degree_; }
    const RationalPoly& modulus() const { return modulus_; }

    /// Reduces an arbitrary-length coordinate vector modulo Phi_k in place
    /// and pads/truncates it to exactly degree() entries.
    void reduce(std::vector<Rational>& coords) const;

    explicit CyclotomicContext(std::uint64_t k);

private:
    std::uint64_t order_;
    RationalPoly modulus_;
    std::size_t degree_;
    // Nonzero low coefficients of Phi_k as (index, value).
    std::vector<std::pair<std::size_t, Rational>> tail_;
};

using ContextPtr = std::shared_ptr<const CyclotomicContext>;

/// Element of Q(zeta_k) in the power basis 1, zeta, ..., zeta^(phi(k)-1).
///
/// Always fully reduced, so equality is coordinate-wise. Mixing elements of
/// different orders throws std::invalid_argument.
class CycElem {
public:
    /// Zero of the given field.
    explicit CycElem(ContextPtr ctx);
    /// Reduces the coordinate vector (any length) modulo Phi_k.
    CycElem(ContextPtr ctx, std::vector<Rational> coords);

    const ContextPtr& context() const { return ctx_; }
    std::uint64_t order() const { return ctx_->order(); }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;

    CycElem operator-() const;
    CycElem& operator+=(const CycElem& o);
    CycElem& operator-=(const CycElem& o);
    CycElem& operator*=(const CycElem& o);
    CycElem& operator/=(const CycElem& o);
    CycElem& operator+=(const Rational& s);
    CycElem& operator*=(const Rational& s);

    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
    friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
    friend CycElem operator/(CycElem a, const CycElem& b) { return a /= b; }
    friend CycElem operator*(CycElem a, const Rational& s) { return a *= s; }

    /// Equal iff same order and equal coordinates.
    friend bool operator==(const CycElem& a, const CycElem& b);

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// (coordinate polynomial, Phi_k); throws std::domain_error on zero.
    CycElem inverse() const;

    /// x^e for any integer e (negative powers invert first).
    CycElem pow(std::int64_t e) const;

    RationalPoly as_poly() const { return RationalPoly(coords_); }

private:
    void require_same_field(const CycElem& o) const;

    ContextPtr ctx_;
    std::vector<Rational> coords_;
};

/// zeta_k^t, t taken modulo k.
CycElem zeta(const ContextPtr& ctx, std::int64_t t);

CycElem embed_rational(const ContextPtr& ctx, const Rational& q);

/// Numeric image under zeta_k -> exp(2 pi i / k). Throws std::overflow_error
/// if a coordinate is outside double range.
ComplexApprox to_complex(const CycElem& x);

std::ostream& operator<<(std::ostream& os, const CycElem& x);

inline bool is_zero(const CycElem& x) { return x.is_zero(); }
inline CycElem zero_like(const CycElem& x) { return CycElem(x.context()); }
inline CycElem one_like(const CycElem& x) { return embed_rational(x.context(), Rational(1)); }
inline CycElem from_integer(const CycElem& x, long v) { return embed_rational(x.context(), Rational(v)); }
inline CycElem lift(const CycElem& c, const CycElem&) { return c; }
inline CycElem lift(const Rational& c, const CycElem& x) { return embed_rational(x.context(), c); }

/// Horner evaluation of a rational polynomial at a cyclotomic point.
/// Faster than the generic eval(): coefficients are added to the constant
/// coordinate instead of being embedded.
CycElem eval(const RationalPoly& f, const CycElem& x);

}  // namespace momcert

#endif  // MOMCERT_CYCLOTOMIC_HPP
