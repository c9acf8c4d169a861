#include "momcert/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace momcert {

std::uint64_t euler_phi(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("euler_phi(0) is undefined");
    std::uint64_t result = k;
    std::uint64_t n = k;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("divisors(0) is undefined");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        low.push_back(d);
        if (d != k / d) high.push_back(k / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

namespace {

RationalPoly cyclotomic_memo(std::uint64_t k, std::map<std::uint64_t, RationalPoly>& memo) {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    RationalPoly result = RationalPoly::monomial(Rational(1), k) - RationalPoly{Rational(1)};
    if (k > 1) {
        RationalPoly product{Rational(1)};
        for (auto d : divisors(k)) {
            if (d < k) product *= cyclotomic_memo(d, memo);
        }
        auto [quo, rem] = divmod(result, product);
        if (!rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
        result = std::move(quo);
    }
    memo.emplace(k, result);
    return result;
}

}  // namespace

RationalPoly cyclotomic_polynomial(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("cyclotomic polynomial order must be positive");
    std::map<std::uint64_t, RationalPoly> memo;
    return cyclotomic_memo(k, memo);
}

CyclotomicContext::CyclotomicContext(std::uint64_t k)
    : order_(k), modulus_(cyclotomic_polynomial(k)), degree_(modulus_.size() - 1) {
    for (std::size_t j = 0; j < degree_; ++j) {
        if (!modulus_[j].is_zero()) tail_.emplace_back(j, modulus_[j]);
    }
}

ContextPtr CyclotomicContext::make(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("cyclotomic field order must be positive");
    static std::mutex mutex;
    static std::map<std::uint64_t, ContextPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[k];
    if (!slot) slot = std::make_shared<const CyclotomicContext>(k);
    return slot;
}

void CyclotomicContext::reduce(std::vector<Rational>& coords) const {
    // z^phi = -(tail of Phi_k), applied from the top down.
    for (std::size_t i = coords.size(); i-- > degree_;) {
        if (coords[i].is_zero()) continue;
        const Rational c = coords[i];
        const std::size_t shift = i - degree_;
        for (const auto& [j, phi_j] : tail_) coords[shift + j] -= c * phi_j;
        coords[i] = Rational(0);
    }
    coords.resize(degree_, Rational(0));
}

CycElem::CycElem(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("null cyclotomic context");
    coords_.assign(ctx_->degree(), Rational(0));
}

CycElem::CycElem(ContextPtr ctx, std::vector<Rational> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (!ctx_) throw std::invalid_argument("null cyclotomic context");
    ctx_->reduce(coords_);
}

bool CycElem::is_zero() const {
    for (const auto& c : coords_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CycElem::is_one() const {
    if (!coords_[0].is_one()) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) return false;
    }
    return true;
}

void CycElem::require_same_field(const CycElem& o) const {
    if (ctx_->order() != o.ctx_->order()) {
        throw std::invalid_argument("cyclotomic field mismatch: order " + std::to_string(ctx_->order()) +
                                    " vs " + std::to_string(o.ctx_->order()));
    }
}

CycElem CycElem::operator-() const {
    CycElem r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycElem& CycElem::operator+=(const CycElem& o) {
    require_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
    require_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CycElem& CycElem::operator*=(const CycElem& o) {
    require_same_field(o);
    const std::size_t n = coords_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.coords_[j].is_zero()) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    ctx_->reduce(prod);
    coords_ = std::move(prod);
    return *this;
}

CycElem& CycElem::operator+=(const Rational& s) {
    coords_[0] += s;
    return *this;
}

CycElem& CycElem::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

CycElem& CycElem::operator/=(const CycElem& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const CycElem& a, const CycElem& b) {
    return a.order() == b.order() && a.coords_ == b.coords_;
}

CycElem CycElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
    // Invariant: s_i * x == r_i (mod Phi_k).
    RationalPoly r0 = ctx_->modulus(), r1 = as_poly();
    RationalPoly s0, s1{Rational(1)};
    while (r1.degree() > 0) {
        auto [q, r2] = divmod(r0, r1);
        RationalPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_k is irreducible and x != 0, so the final remainder is a nonzero constant.
    const Rational inv_r = r1[0].inverse();
    return CycElem(ctx_, scale(s1, inv_r).coeffs());
}

CycElem CycElem::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycElem result = embed_rational(ctx_, Rational(1));
    CycElem base = *this;
    auto u = static_cast<std::uint64_t>(e);
    while (u > 0) {
        if (u & 1U) result *= base;
        u >>= 1U;
        if (u > 0) base *= base;
    }
    return result;
}

CycElem zeta(const ContextPtr& ctx, std::int64_t t) {
    const auto k = static_cast<std::int64_t>(ctx->order());
    const auto e = static_cast<std::size_t>(((t % k) + k) % k);
    std::vector<Rational> coords(e + 1, Rational(0));
    coords[e] = Rational(1);
    return CycElem(ctx, std::move(coords));
}

CycElem embed_rational(const ContextPtr& ctx, const Rational& q) {
    return CycElem(ctx, std::vector<Rational>{q});
}

ComplexApprox to_complex(const CycElem& x) {
    const double k = static_cast<double>(x.order());
    ComplexApprox sum{0.0, 0.0};
    for (std::size_t j = 0; j < x.coords().size(); ++j) {
        if (x.coords()[j].is_zero()) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / k;
        sum += x.coords()[j].to_double() * std::polar(1.0, angle);
    }
    return sum;
}

std::ostream& operator<<(std::ostream& os, const CycElem& x) {
    os << "Q(zeta_" << x.order() << ")[";
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (i > 0) os << ", ";
        os << x.coords()[i];
    }
    return os << "]";
}

CycElem eval(const RationalPoly& f, const CycElem& x) {
    CycElem acc(x.context());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

}  // namespace momcert
