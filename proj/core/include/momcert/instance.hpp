#ifndef MOMCERT_INSTANCE_HPP
#define MOMCERT_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "momcert/cyclotomic.hpp"
#include "momcert/poly.hpp"

namespace momcert {

/// B = z^m, D = z^n R(z^m), endpoints c * zeta_m^j and c * zeta_m^l.
struct PowerCaseParams {
    unsigned m = 2;
    unsigned n = 1;
    RationalPoly r;
    Rational c{1};
    std::pair<unsigned, unsigned> roots{0, 1};
    std::optional<RationalPoly> outer;
};

/// B = T_n, D = T_m (monic Chebyshev), P in Q[T_nm].
struct ChebyCaseParams {
    unsigned n = 2;
    unsigned m = 3;
    std::optional<RationalPoly> outer;
};

/// No known construction; an externally supplied (P, Q, a, b).
struct ExternalParams {};

using Provenance = std::variant<ExternalParams, PowerCaseParams, ChebyCaseParams>;

/// A candidate counterexample (P, Q, a, b) with optional Claim-1 style
/// witnesses B, D (Q = B + D, P a polynomial in both, B and D each taking
/// equal values at a and b).
struct Instance {
    std::uint64_t field_order = 1;
    RationalPoly p;
    RationalPoly q;
    CycElem a;
    CycElem b;
    std::optional<RationalPoly> witness_b;
    std::optional<RationalPoly> witness_d;
    Provenance provenance;
};

/// Human-readable list of violated instance invariants; empty when the
/// instance is well formed (a != b, P and Q agree at the endpoints,
/// Q = B + D, B and D agree at the endpoints, P in Q[B] and Q[D], deg P > 1).
std::vector<std::string> instance_violations(const Instance& inst);

/// Throws std::invalid_argument on parameter errors (coprimality,
/// degenerate R, R(c^m) != 0, c = 0, bad root pair, deg P <= 1).
Instance build_power_case(const PowerCaseParams& params);

/// Throws std::invalid_argument unless n, m >= 2 and gcd(n, m) = 1.
Instance build_cheby_case(const ChebyCaseParams& params);

}  // namespace momcert

#endif  // MOMCERT_INSTANCE_HPP
