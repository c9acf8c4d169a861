#ifndef MOMCERT_TOOLS_POLY_EXPR_HPP
#define MOMCERT_TOOLS_POLY_EXPR_HPP

#include <string_view>

#include "momcert/poly.hpp"

namespace momcert::cli {

/// Parses a sum of terms such as "z^2+z-2", "-3/2*z^3 + 1" or "w^2 - 2".
/// The variable may be written z or w. Throws std::invalid_argument.
RationalPoly parse_poly_expr(std::string_view text);

}  // namespace momcert::cli

#endif  // MOMCERT_TOOLS_POLY_EXPR_HPP
