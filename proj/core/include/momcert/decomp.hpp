#ifndef MOMCERT_DECOMP_HPP
#define MOMCERT_DECOMP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "momcert/cyclotomic.hpp"
#include "momcert/poly.hpp"

namespace momcert {

// Functional decomposition over Q. Right factors W are normalized monic
// with W(0) = 0, which picks one representative out of every class
// L(W) with L linear.

/// A common right composition factor of a pair (P, Q):
/// P = outer_p(inner), Q = outer_q(inner), deg inner = degree > 1.
struct FactorEntry {
    std::size_t degree = 0;
    RationalPoly inner;
    RationalPoly outer_p;
    RationalPoly outer_q;
};

struct RightFactor {
    RationalPoly inner;  // monic, zero constant term
    RationalPoly outer;  // f = outer(inner)
};

/// Base-W digits c_0, c_1, ... with F = sum c_i W^i and deg c_i < deg W.
/// The zero polynomial has no digits. Rejects constant W.
std::vector<RationalPoly> wadic_digits(const RationalPoly& f, const RationalPoly& w);

/// A with f = A(w), if every W-adic digit of f is constant.
std::optional<RationalPoly> outer_factor(const RationalPoly& f, const RationalPoly& w);

/// Polynomial part of p^(1/e), expanded at infinity.
///
/// For monic p of degree n this is the polynomial part of
/// z^(n/e) * (1 + u(1/z))^(1/e) where p = z^n (1 + u(1/z)). When p = A(W)
/// with W monic, the result is W + const.
RationalPoly eth_root_poly_part(const RationalPoly& p, std::size_t e);

/// The normalized right factor of p of degree d, if any. Requires
/// deg p > 1, d > 1 and d | deg p; at most one such factor exists.
std::optional<RightFactor> right_factor(const RationalPoly& p, std::size_t d);

/// Every common normalized right factor of degree > 1, ascending by degree.
/// An empty result means Q(P, Q) = Q(z) among polynomial generators.
/// Requires deg p > 1; a constant q is accepted.
std::vector<FactorEntry> common_right_factors(const RationalPoly& p, const RationalPoly& q);

struct CompositionCheck {
    bool holds = false;
    std::optional<FactorEntry> witness;
};

/// Whether P = P~(W), Q = Q~(W), deg W > 1 and W(a) = W(b) for some W.
template <class X>
CompositionCheck composition_condition_holds(const RationalPoly& p, const RationalPoly& q, const X& a,
                                                const X& b) {
    for (auto& entry : common_right_factors(p, q)) {
        if (eval(entry.inner, a) == eval(entry.inner, b)) return {true, std::move(entry)};
    }
    return {};
}

}  // namespace momcert

#endif  // MOMCERT_DECOMP_HPP
