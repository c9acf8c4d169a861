#ifndef MOMCERT_MOMENTS_HPP
#define MOMCERT_MOMENTS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "momcert/cyclotomic.hpp"
#include "momcert/poly.hpp"

namespace momcert {

// m_i(P, Q, a, b) = integral from a to b of P^i dQ. The integrand is a
// polynomial, so the value is H(b) - H(a) for H = antiderivative(P^i Q')
// along any path.

template <class X>
struct MomentResult {
    std::size_t index = 0;
    X value;
    std::optional<ComplexApprox> numeric;
};

namespace detail {
inline void require_moment_index(std::size_t i) {
    if (i < 1) throw std::invalid_argument("moment index must be at least 1");
}
}  // namespace detail

template <class X>
X moment(const RationalPoly& p, const RationalPoly& q, const X& a, const X& b, std::size_t i) {
    detail::require_moment_index(i);
    const RationalPoly h = antiderivative(pow(p, static_cast<unsigned>(i)) * derivative(q));
    return eval(h, b) - eval(h, a);
}

/// m_1 .. m_n, maintaining P^i incrementally.
template <class X>
std::vector<MomentResult<X>> moment_sequence(const RationalPoly& p, const RationalPoly& q, const X& a,
                                             const X& b, std::size_t n) {
    if (n < 1) throw std::invalid_argument("moment sequence length must be at least 1");
    const RationalPoly dq = derivative(q);
    std::vector<MomentResult<X>> out;
    out.reserve(n);
    RationalPoly power = p;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i > 1) power *= p;
        if (a == b) {
            out.push_back({i, zero_like(a), std::nullopt});
            continue;
        }
        const RationalPoly h = antiderivative(power * dq);
        out.push_back({i, eval(h, b) - eval(h, a), std::nullopt});
    }
    return out;
}

/// Double-precision shadow of moment(): integrates P^i Q' along the segment
/// [a, b] by Gauss-Legendre quadrature with enough nodes to be exact in
/// exact arithmetic. Throws std::overflow_error on a non-finite result.
ComplexApprox moment_numeric(const RationalPoly& p, const RationalPoly& q, ComplexApprox a, ComplexApprox b,
                             std::size_t i);

/// Gauss-Legendre nodes and weights on [-1, 1], exact for degree 2n - 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(std::size_t n);

}  // namespace momcert

#endif  // MOMCERT_MOMENTS_HPP
