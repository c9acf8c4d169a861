#include "momcert/chebyshev.hpp"

#include <stdexcept>

namespace momcert {

RationalPoly chebyshev(unsigned k) {
    RationalPoly prev{Rational(2)};
    if (k == 0) return prev;
    const RationalPoly z{Rational(0), Rational(1)};
    RationalPoly cur = z;
    for (unsigned i = 1; i < k; ++i) {
        RationalPoly next = z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool verify_halfplane_identity(unsigned k, const ContextPtr& ctx, std::int64_t t) {
    if (k == 0) throw std::invalid_argument("identity is stated for k >= 1");
    const auto kt = static_cast<std::int64_t>(k) * t;
    const CycElem point = zeta(ctx, t) + zeta(ctx, -t);
    return eval(chebyshev(k), point) == zeta(ctx, kt) + zeta(ctx, -kt);
}

}  // namespace momcert
