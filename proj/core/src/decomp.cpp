#include "momcert/decomp.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace momcert {

std::vector<RationalPoly> wadic_digits(const RationalPoly& f, const RationalPoly& w) {
    if (w.degree() < 1) throw std::invalid_argument("W-adic expansion needs deg W >= 1");
    std::vector<RationalPoly> digits;
    RationalPoly rest = f;
    while (!rest.is_zero()) {
        auto [quo, rem] = divmod(rest, w);
        digits.push_back(std::move(rem));
        rest = std::move(quo);
    }
    return digits;
}

std::optional<RationalPoly> outer_factor(const RationalPoly& f, const RationalPoly& w) {
    const auto digits = wadic_digits(f, w);
    std::vector<Rational> coeffs;
    coeffs.reserve(digits.size());
    for (const auto& digit : digits) {
        if (!digit.is_constant()) return std::nullopt;
        coeffs.push_back(digit.coeff(0, Rational(0)));
    }
    RationalPoly outer(std::move(coeffs));
    if (compose(outer, w) != f) throw std::logic_error("outer factor failed its recomposition check");
    return outer;
}

RationalPoly eth_root_poly_part(const RationalPoly& p, std::size_t e) {
    if (!p.is_monic()) throw std::invalid_argument("root expansion needs a monic polynomial");
    const std::size_t n = p.degree().value();
    if (e == 0 || n % e != 0) {
        throw std::invalid_argument("root index " + std::to_string(e) + " does not divide degree " +
                                    std::to_string(n));
    }
    const std::size_t s = n / e;
    // p = z^n (1 + sum_{j>=1} u_j z^-j), u_j = p_{n-j}
    auto u = [&](std::size_t j) { return j <= n ? p[n - j] : Rational(0); };

    // f = g^alpha with g_0 = 1:  n f_n = sum_{k=1}^{n} ((alpha+1) k - n) g_k f_{n-k}
    const Rational alpha_plus_one = Rational(1, static_cast<long>(e)) + Rational(1);
    std::vector<Rational> series{Rational(1)};
    for (std::size_t j = 1; j <= s; ++j) {
        Rational acc(0);
        for (std::size_t k = 1; k <= j; ++k) {
            const Rational gk = u(k);
            if (gk.is_zero()) continue;
            acc += (alpha_plus_one * Rational(static_cast<long>(k)) - Rational(static_cast<long>(j))) * gk *
                   series[j - k];
        }
        series.push_back(acc / Rational(static_cast<long>(j)));
    }

    // polynomial part of z^s * sum_j f_j z^-j
    std::vector<Rational> coeffs(s + 1, Rational(0));
    for (std::size_t j = 0; j <= s; ++j) coeffs[s - j] = series[j];
    return RationalPoly(std::move(coeffs));
}

std::optional<RightFactor> right_factor(const RationalPoly& p, std::size_t d) {
    if (p.degree() <= 1) throw std::invalid_argument("right factors need deg P > 1");
    const std::size_t n = p.degree().value();
    if (d <= 1 || n % d != 0) {
        throw std::invalid_argument("factor degree " + std::to_string(d) + " must exceed 1 and divide " +
                                    std::to_string(n));
    }
    RationalPoly candidate = eth_root_poly_part(make_monic(p), n / d);
    std::vector<Rational> coeffs = candidate.coeffs();
    coeffs[0] = Rational(0);
    candidate = RationalPoly(std::move(coeffs));

    auto outer = outer_factor(p, candidate);
    if (!outer) return std::nullopt;
    return RightFactor{std::move(candidate), std::move(*outer)};
}

std::vector<FactorEntry> common_right_factors(const RationalPoly& p, const RationalPoly& q) {
    if (p.degree() <= 1) throw std::invalid_argument("common right factors need deg P > 1");
    const std::size_t dp = p.degree().value();
    const std::size_t dq = q.degree().is_finite() ? q.degree().value() : 0;
    const std::size_t g = std::gcd(dp, dq);

    std::vector<FactorEntry> entries;
    for (auto d : divisors(g)) {
        if (d <= 1) continue;
        auto factor = right_factor(p, d);
        if (!factor) continue;
        auto outer_q = outer_factor(q, factor->inner);
        if (!outer_q) continue;
        entries.push_back(FactorEntry{d, std::move(factor->inner), std::move(factor->outer), std::move(*outer_q)});
    }
    return entries;
}

}  // namespace momcert
