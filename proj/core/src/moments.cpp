#include "momcert/moments.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace momcert {

QuadratureRule gauss_legendre(std::size_t n) {
    if (n == 0) throw std::invalid_argument("quadrature needs at least one node");
    static std::mutex mutex;
    static std::map<std::size_t, QuadratureRule> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const auto nd = static_cast<double>(n);
    for (std::size_t k = 0; k < (n + 1) / 2; ++k) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (static_cast<double>(k) + 0.75) / (nd + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const auto jd = static_cast<double>(j);
                const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = nd * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[k] = -x;
        rule.weights[k] = w;
        rule.nodes[n - 1 - k] = x;
        rule.weights[n - 1 - k] = w;
    }
    cache.emplace(n, rule);
    return rule;
}

namespace {

// Compensated Horner: error-free transformations carry the rounding error
// of each step, so P(z) comes out as if evaluated in twice the precision.
// Plain Horner loses eps * sum |c_k z^k|, which P^i then amplifies.

struct SplitCoeff {
    double hi;
    double lo;  // c - hi, rounded
};

std::vector<SplitCoeff> split_coeffs(const RationalPoly& f) {
    std::vector<SplitCoeff> out;
    out.reserve(f.size());
    for (const auto& c : f.coeffs()) {
        const double hi = c.to_double();
        out.push_back({hi, (c - Rational(mpq_class(hi))).to_double()});
    }
    return out;
}

void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double z = s - a;
    e = (a - (s - z)) + (b - z);
}

void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

// s * x = p + e exactly, up to the rounding of e itself.
void two_prod(ComplexApprox s, ComplexApprox x, ComplexApprox& p, ComplexApprox& e) {
    double z1, h1, z2, h2, z3, h3, z4, h4, z5, h5, z6, h6;
    two_prod(s.real(), x.real(), z1, h1);
    two_prod(s.imag(), x.imag(), z2, h2);
    two_prod(s.real(), x.imag(), z3, h3);
    two_prod(s.imag(), x.real(), z4, h4);
    two_sum(z1, -z2, z5, h5);
    two_sum(z3, z4, z6, h6);
    p = {z5, z6};
    e = {h1 - h2 + h5, h3 + h4 + h6};
}

ComplexApprox horner(const std::vector<SplitCoeff>& coeffs, ComplexApprox x) {
    ComplexApprox s{0.0, 0.0}, r{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        ComplexApprox p, pi;
        two_prod(s, x, p, pi);
        double re, sigma;
        two_sum(p.real(), it->hi, re, sigma);
        s = {re, p.imag()};
        r = r * x + pi + ComplexApprox{sigma + it->lo, 0.0};
    }
    return s + r;
}

ComplexApprox ipow(ComplexApprox base, std::size_t e) {
    ComplexApprox result{1.0, 0.0};
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

}  // namespace

ComplexApprox moment_numeric(const RationalPoly& p, const RationalPoly& q, ComplexApprox a, ComplexApprox b,
                             std::size_t i) {
    detail::require_moment_index(i);
    if (a == b) return {0.0, 0.0};
    const RationalPoly dq = derivative(q);
    if (dq.is_zero()) return {0.0, 0.0};

    const std::size_t dp = p.degree().is_finite() ? p.degree().value() : 0;
    const std::size_t integrand_degree = i * dp + dq.degree().value();
    const QuadratureRule rule = gauss_legendre(integrand_degree / 2 + 1);

    const auto pc = split_coeffs(p);
    const auto dqc = split_coeffs(dq);
    const ComplexApprox mid = 0.5 * (a + b);
    const ComplexApprox half = 0.5 * (b - a);
    ComplexApprox sum{0.0, 0.0};
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const ComplexApprox z = mid + half * rule.nodes[k];
        sum += rule.weights[k] * ipow(horner(pc, z), i) * horner(dqc, z);
    }
    const ComplexApprox result = half * sum;
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
        throw std::overflow_error("numeric moment is not finite");
    }
    return result;
}

}  // namespace momcert
