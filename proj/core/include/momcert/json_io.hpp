#ifndef MOMCERT_JSON_IO_HPP
#define MOMCERT_JSON_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "momcert/cyclotomic.hpp"
#include "momcert/decomp.hpp"
#include "momcert/instance.hpp"
#include "momcert/poly.hpp"
#include "momcert/verify.hpp"

namespace momcert {

// Interchange format. Scalars are always strings ("p/q" or "p"), never
// JSON numbers, and coefficients ascend by degree:
//
//   Rational  "3/2"
//   CycElem   {"order": k, "coords": [phi(k) rationals]}
//   Poly      {"field": "rational" | {"cyclotomic": k}, "coeffs": [...]}
//   Instance  {"schema_version", "params", "field_order", "P", "Q", "B", "D", "a", "b"}

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Malformed or unsupported JSON input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using CycPoly = Poly<CycElem>;

/// A parsed polynomial together with its coefficient field.
struct AnyPoly {
    std::uint64_t cyclotomic_order = 0;  // 0 for the rational field
    std::variant<RationalPoly, CycPoly> poly;
};

Json to_json(const Rational& q);
Json to_json(const CycElem& x);
Json to_json(const RationalPoly& f);
/// Polynomial over Q(zeta_order); the order is explicit so the zero
/// polynomial still names its field.
Json to_json(const CycPoly& f, std::uint64_t order);
Json to_json(const Instance& inst);
Json to_json(const FactorEntry& entry);
Json to_json(const Report& report);

Rational rational_from_json(const Json& j);
CycElem cyc_from_json(const Json& j);
AnyPoly poly_from_json(const Json& j);
/// Rejects polynomials over a cyclotomic field.
RationalPoly rational_poly_from_json(const Json& j);
/// Accepts a CycElem object or a bare rational (embedded into order 1).
CycElem endpoint_from_json(const Json& j);
Instance instance_from_json(const Json& j);

/// Rejects missing versions and unknown major versions.
void check_schema_version(const Json& doc);

/// Parses text, converting parser failures to FormatError.
Json parse_json_text(const std::string& text);

}  // namespace momcert

#endif  // MOMCERT_JSON_IO_HPP
