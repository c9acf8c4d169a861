#include "momcert/instance.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "momcert/chebyshev.hpp"
#include "momcert/decomp.hpp"

namespace momcert {

namespace {

RationalPoly z_power(std::size_t k) { return RationalPoly::monomial(Rational(1), k); }

void require_coprime(unsigned x, unsigned y, const char* what) {
    if (const auto g = std::gcd(x, y); g != 1) {
        std::ostringstream msg;
        msg << what << " must be coprime (gcd = " << g << ")";
        throw std::invalid_argument(msg.str());
    }
}

std::size_t nonzero_terms(const RationalPoly& f) {
    std::size_t count = 0;
    for (const auto& c : f.coeffs()) count += c.is_zero() ? 0 : 1;
    return count;
}

void finalize(const Instance& inst) {
    const auto problems = instance_violations(inst);
    if (problems.empty()) return;
    std::string msg = "generated instance violates its invariants:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw std::logic_error(msg);
}

}  // namespace

std::vector<std::string> instance_violations(const Instance& inst) {
    std::vector<std::string> out;
    if (inst.a.order() != inst.field_order || inst.b.order() != inst.field_order) {
        out.emplace_back("endpoints not in the declared field");
        return out;
    }
    if (inst.a == inst.b) out.emplace_back("a == b");
    if (inst.p.degree() <= 1) out.emplace_back("deg P <= 1");
    if (eval(inst.p, inst.a) != eval(inst.p, inst.b)) out.emplace_back("P(a) != P(b)");
    if (eval(inst.q, inst.a) != eval(inst.q, inst.b)) out.emplace_back("Q(a) != Q(b)");
    if (!inst.witness_b || !inst.witness_d) {
        out.emplace_back("missing witnesses B, D");
        return out;
    }
    const auto& wb = *inst.witness_b;
    const auto& wd = *inst.witness_d;
    if (wb + wd != inst.q) out.emplace_back("Q != B + D");
    if (eval(wb, inst.a) != eval(wb, inst.b)) out.emplace_back("B(a) != B(b)");
    if (eval(wd, inst.a) != eval(wd, inst.b)) out.emplace_back("D(a) != D(b)");
    if (wb.degree() < 1 || !outer_factor(inst.p, wb)) out.emplace_back("P not in Q[B]");
    if (wd.degree() < 1 || !outer_factor(inst.p, wd)) out.emplace_back("P not in Q[D]");
    return out;
}

Instance build_power_case(const PowerCaseParams& params) {
    const unsigned m = params.m, n = params.n;
    if (m < 2) throw std::invalid_argument("power case needs m >= 2");
    if (n < 1) throw std::invalid_argument("power case needs n >= 1");
    require_coprime(m, n, "m and n");
    if (nonzero_terms(params.r) < 2) {
        throw std::invalid_argument("R must not be a monomial gamma*z^l (it needs a nonzero root)");
    }
    if (params.c.is_zero()) throw std::invalid_argument("c must be nonzero");
    const Rational zeta_value = params.c.pow(m);
    if (!eval(params.r, zeta_value).is_zero()) {
        throw std::invalid_argument("R(c^m) = R(" + zeta_value.to_string() + ") is not zero");
    }
    const auto [j, l] = params.roots;
    if (!(j < l && l < m)) throw std::invalid_argument("root pair (j, l) needs 0 <= j < l < m");

    const RationalPoly r_of_zm = compose(params.r, z_power(m));
    const RationalPoly core = z_power(static_cast<std::size_t>(n) * m) * pow(r_of_zm, m);
    RationalPoly p = params.outer ? compose(*params.outer, core) : core;
    if (p.degree() <= 1) throw std::invalid_argument("deg P must exceed 1 (check the outer polynomial)");
    RationalPoly wb = z_power(m);
    RationalPoly wd = z_power(n) * r_of_zm;

    const auto ctx = CyclotomicContext::make(m);
    Instance inst{
        .field_order = m,
        .p = std::move(p),
        .q = wb + wd,
        .a = zeta(ctx, j) * params.c,
        .b = zeta(ctx, l) * params.c,
        .witness_b = std::move(wb),
        .witness_d = std::move(wd),
        .provenance = params,
    };
    finalize(inst);
    return inst;
}

Instance build_cheby_case(const ChebyCaseParams& params) {
    const unsigned n = params.n, m = params.m;
    if (n < 2 || m < 2) throw std::invalid_argument("Chebyshev case needs n, m >= 2");
    require_coprime(n, m, "n and m");

    const std::uint64_t k = 2ULL * n * m;
    const auto ctx = CyclotomicContext::make(k);
    const CycElem alpha = zeta(ctx, static_cast<std::int64_t>(m) + n);
    const CycElem beta = zeta(ctx, static_cast<std::int64_t>(m) - n);
    // alpha^m = beta^m, (alpha beta)^n = 1, alpha != beta, 1/beta
    if (alpha.pow(m) != beta.pow(m) || !(alpha * beta).pow(n).is_one() || alpha == beta ||
        alpha == beta.inverse()) {
        throw std::logic_error("Chebyshev endpoint parameters fail their constraints");
    }

    RationalPoly p = params.outer ? compose(*params.outer, chebyshev(n * m)) : chebyshev(n * m);
    if (p.degree() <= 1) throw std::invalid_argument("deg P must exceed 1 (check the outer polynomial)");

    Instance inst{
        .field_order = k,
        .p = std::move(p),
        .q = chebyshev(n) + chebyshev(m),
        .a = alpha + alpha.inverse(),
        .b = beta + beta.inverse(),
        .witness_b = chebyshev(n),
        .witness_d = chebyshev(m),
        .provenance = params,
    };
    finalize(inst);
    return inst;
}

}  // namespace momcert
