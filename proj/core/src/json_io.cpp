#include "momcert/json_io.hpp"

#include <string_view>

namespace momcert {

namespace {

const Json& field(const Json& obj, const char* key) {
    if (!obj.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
    auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T integer_field(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw FormatError(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return v.get<T>();
}

Json optional_poly(const std::optional<RationalPoly>& f) { return f ? to_json(*f) : Json(nullptr); }

std::optional<RationalPoly> optional_poly_from(const Json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    return rational_poly_from_json(*it);
}

Json params_to_json(const Provenance& prov) {
    Json out = Json::object();
    if (const auto* pw = std::get_if<PowerCaseParams>(&prov)) {
        out["family"] = "power";
        out["m"] = pw->m;
        out["n"] = pw->n;
        out["R"] = to_json(pw->r);
        out["c"] = to_json(pw->c);
        out["roots"] = Json::array({pw->roots.first, pw->roots.second});
        out["outer"] = optional_poly(pw->outer);
    } else if (const auto* ch = std::get_if<ChebyCaseParams>(&prov)) {
        out["family"] = "chebyshev";
        out["n"] = ch->n;
        out["m"] = ch->m;
        out["outer"] = optional_poly(ch->outer);
    } else {
        out["family"] = "external";
    }
    return out;
}

Provenance params_from_json(const Json& j) {
    const Json& family = field(j, "family");
    if (!family.is_string()) throw FormatError("params.family must be a string");
    const auto name = family.get<std::string>();
    if (name == "external") return ExternalParams{};
    if (name == "chebyshev") {
        return ChebyCaseParams{integer_field<unsigned>(j, "n"), integer_field<unsigned>(j, "m"),
                               optional_poly_from(j, "outer")};
    }
    if (name == "power") {
        PowerCaseParams p;
        p.m = integer_field<unsigned>(j, "m");
        p.n = integer_field<unsigned>(j, "n");
        p.r = rational_poly_from_json(field(j, "R"));
        p.c = rational_from_json(field(j, "c"));
        const Json& roots = field(j, "roots");
        if (!roots.is_array() || roots.size() != 2 || !roots[0].is_number_unsigned() ||
            !roots[1].is_number_unsigned()) {
            throw FormatError("params.roots must be a pair of nonnegative integers");
        }
        p.roots = {roots[0].get<unsigned>(), roots[1].get<unsigned>()};
        p.outer = optional_poly_from(j, "outer");
        return p;
    }
    throw FormatError("unknown params.family '" + name + "'");
}

}  // namespace

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const CycElem& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(c.to_string());
    return Json{{"order", x.order()}, {"coords", std::move(coords)}};
}

Json to_json(const RationalPoly& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"field", "rational"}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const CycPoly& f, std::uint64_t order) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) {
        if (c.order() != order) throw std::invalid_argument("coefficient outside the declared field");
        coeffs.push_back(to_json(c));
    }
    return Json{{"field", Json{{"cyclotomic", order}}}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Instance& inst) {
    return Json{
        {"schema_version", kSchemaVersion},
        {"params", params_to_json(inst.provenance)},
        {"field_order", inst.field_order},
        {"P", to_json(inst.p)},
        {"Q", to_json(inst.q)},
        {"B", optional_poly(inst.witness_b)},
        {"D", optional_poly(inst.witness_d)},
        {"a", to_json(inst.a)},
        {"b", to_json(inst.b)},
    };
}

Json to_json(const FactorEntry& entry) {
    return Json{
        {"d", entry.degree},
        {"W", to_json(entry.inner)},
        {"outer_P", to_json(entry.outer_p)},
        {"outer_Q", to_json(entry.outer_q)},
    };
}

Json to_json(const Report& report) {
    Json moments = Json::array();
    for (const auto& m : report.moments) {
        Json item{{"index", m.index}, {"value", to_json(m.value)}};
        if (m.numeric) item["numeric"] = Json{{"re", m.numeric->real()}, {"im", m.numeric->imag()}};
        moments.push_back(std::move(item));
    }
    Json factors = Json::array();
    for (const auto& f : report.factor_entries) {
        Json item = to_json(f.entry);
        item["endpoints_agree"] = f.endpoints_agree;
        factors.push_back(std::move(item));
    }
    Json out{
        {"schema_version", kSchemaVersion},
        {"endpoints_ok", report.endpoints_ok},
        {"moments_checked", report.moments_checked},
        {"moments_all_zero", report.moments_all_zero},
        {"claim1_certified", report.claim1_certified},
        {"factor_entries", std::move(factors)},
        {"composition_condition", report.composition_condition},
        {"counterexample_established", report.counterexample_established},
        {"moments", std::move(moments)},
    };
    if (report.numeric_max_abs) {
        out["numeric"] = Json{
            {"max_abs", *report.numeric_max_abs},
            {"max_deviation", *report.numeric_max_deviation},
            {"tolerance", *report.numeric_tolerance},
            {"within_tolerance", *report.numeric_within_tolerance},
        };
    }
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw FormatError("rational must be a string \"p/q\"; got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
}

CycElem cyc_from_json(const Json& j) {
    const auto order = integer_field<std::uint64_t>(j, "order");
    if (order == 0) throw FormatError("cyclotomic order must be positive");
    const Json& coords = field(j, "coords");
    if (!coords.is_array()) throw FormatError("coords must be an array");
    const auto ctx = CyclotomicContext::make(order);
    if (coords.size() != ctx->degree()) {
        throw FormatError("order " + std::to_string(order) + " needs exactly " + std::to_string(ctx->degree()) +
                          " coords, got " + std::to_string(coords.size()));
    }
    std::vector<Rational> values;
    values.reserve(coords.size());
    for (const auto& c : coords) values.push_back(rational_from_json(c));
    return CycElem(ctx, std::move(values));
}

AnyPoly poly_from_json(const Json& j) {
    const Json& fld = field(j, "field");
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) throw FormatError("coeffs must be an array");
    if (fld.is_string() && fld.get<std::string>() == "rational") {
        std::vector<Rational> values;
        values.reserve(coeffs.size());
        for (const auto& c : coeffs) values.push_back(rational_from_json(c));
        return {0, RationalPoly(std::move(values))};
    }
    if (fld.is_object()) {
        const auto order = integer_field<std::uint64_t>(fld, "cyclotomic");
        if (order == 0) throw FormatError("cyclotomic order must be positive");
        std::vector<CycElem> values;
        values.reserve(coeffs.size());
        for (const auto& c : coeffs) {
            values.push_back(cyc_from_json(c));
            if (values.back().order() != order) throw FormatError("coefficient outside the declared field");
        }
        return {order, CycPoly(std::move(values))};
    }
    throw FormatError("field must be \"rational\" or {\"cyclotomic\": k}");
}

RationalPoly rational_poly_from_json(const Json& j) {
    auto any = poly_from_json(j);
    if (auto* f = std::get_if<RationalPoly>(&any.poly)) return std::move(*f);
    throw FormatError("expected a polynomial over the rationals");
}

CycElem endpoint_from_json(const Json& j) {
    if (j.is_object()) return cyc_from_json(j);
    return embed_rational(CyclotomicContext::make(1), rational_from_json(j));
}

void check_schema_version(const Json& doc) {
    const Json& v = field(doc, "schema_version");
    if (!v.is_string()) throw FormatError("schema_version must be a string");
    const auto text = v.get<std::string>();
    const auto major = std::string_view(text).substr(0, text.find('.'));
    if (major != "1") throw FormatError("unsupported schema_version '" + text + "'");
}

Instance instance_from_json(const Json& j) {
    check_schema_version(j);
    Instance inst{
        .field_order = integer_field<std::uint64_t>(j, "field_order"),
        .p = rational_poly_from_json(field(j, "P")),
        .q = rational_poly_from_json(field(j, "Q")),
        .a = endpoint_from_json(field(j, "a")),
        .b = endpoint_from_json(field(j, "b")),
        .witness_b = optional_poly_from(j, "B"),
        .witness_d = optional_poly_from(j, "D"),
        .provenance = j.contains("params") ? params_from_json(j.at("params")) : Provenance{ExternalParams{}},
    };
    if (inst.a.order() != inst.field_order || inst.b.order() != inst.field_order) {
        throw FormatError("endpoints a, b must lie in the field of order field_order");
    }
    if (inst.witness_b.has_value() != inst.witness_d.has_value()) {
        throw FormatError("witnesses B and D must be given together");
    }
    return inst;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace momcert
