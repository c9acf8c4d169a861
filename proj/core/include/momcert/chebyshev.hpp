#ifndef MOMCERT_CHEBYSHEV_HPP
#define MOMCERT_CHEBYSHEV_HPP

#include <cstdint>

#include "momcert/cyclotomic.hpp"
#include "momcert/poly.hpp"

namespace momcert {

/// Monic (Dickson) Chebyshev polynomial: T_0 = 2, T_1 = z,
/// T_k = z*T_{k-1} - T_{k-2}. These satisfy T_k(z + 1/z) = z^k + z^-k and
/// T_m(T_n) = T_{mn}; they are NOT the cos-normalized classical family.
RationalPoly chebyshev(unsigned k);

/// Checks T_k(zeta^t + zeta^-t) == zeta^(kt) + zeta^(-kt) exactly in the
/// given cyclotomic field.
bool verify_halfplane_identity(unsigned k, const ContextPtr& ctx, std::int64_t t);

}  // namespace momcert

#endif  // MOMCERT_CHEBYSHEV_HPP
