#include <gtest/gtest.h>

#include "momcert/json_io.hpp"
#include "support/corpus.hpp"
#include "support/random_poly.hpp"

namespace momcert {
namespace {

using testing::Gen;

bool same_provenance(const Provenance& x, const Provenance& y) {
    if (x.index() != y.index()) return false;
    if (const auto* p = std::get_if<PowerCaseParams>(&x)) {
        const auto& q = std::get<PowerCaseParams>(y);
        return p->m == q.m && p->n == q.n && p->r == q.r && p->c == q.c && p->roots == q.roots && p->outer == q.outer;
    }
    if (const auto* p = std::get_if<ChebyCaseParams>(&x)) {
        const auto& q = std::get<ChebyCaseParams>(y);
        return p->n == q.n && p->m == q.m && p->outer == q.outer;
    }
    return true;
}

void expect_same(const Instance& x, const Instance& y) {
    EXPECT_EQ(x.field_order, y.field_order);
    EXPECT_EQ(x.p, y.p);
    EXPECT_EQ(x.q, y.q);
    EXPECT_EQ(x.a, y.a);
    EXPECT_EQ(x.b, y.b);
    EXPECT_EQ(x.witness_b, y.witness_b);
    EXPECT_EQ(x.witness_d, y.witness_d);
    EXPECT_TRUE(same_provenance(x.provenance, y.provenance));
}

Json power_doc() { return to_json(testing::standard_instances().front()); }

TEST(JsonScalars, Rational) {
    EXPECT_EQ(to_json(Rational(-3, 6)), Json("-1/2"));
    EXPECT_EQ(rational_from_json(Json("7/21")), Rational(1, 3));
    EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
    EXPECT_THROW(rational_from_json(Json(0.5)), FormatError);
    EXPECT_THROW(rational_from_json(Json("1/0")), FormatError);
    EXPECT_THROW(rational_from_json(Json("abc")), FormatError);
}

TEST(JsonScalars, CyclotomicElement) {
    const auto ctx = CyclotomicContext::make(5);
    const CycElem x = zeta(ctx, 2) * Rational(3, 4) + embed_rational(ctx, Rational(-1));
    const Json j = to_json(x);
    EXPECT_EQ(j["order"], 5);
    EXPECT_EQ(j["coords"].size(), 4U);
    EXPECT_EQ(cyc_from_json(j), x);
    EXPECT_THROW(cyc_from_json(Json{{"order", 5}, {"coords", {"1", "2"}}}), FormatError);
    EXPECT_THROW(cyc_from_json(Json{{"order", 0}, {"coords", Json::array()}}), FormatError);
    EXPECT_THROW(cyc_from_json(Json{{"coords", {"1"}}}), FormatError);
}

TEST(JsonScalars, EndpointAcceptsBareRational) {
    const CycElem e = endpoint_from_json(Json("-2/3"));
    EXPECT_EQ(e.order(), 1U);
    EXPECT_EQ(e.coords()[0], Rational(-2, 3));
}

TEST(JsonPoly, RoundTrip) {
    Gen gen(8);
    for (int t = 0; t < 50; ++t) {
        const RationalPoly f = gen.poly(gen.index(0, 8), 9);
        EXPECT_EQ(rational_poly_from_json(to_json(f)), f);
    }
    EXPECT_EQ(to_json(RationalPoly())["coeffs"], Json::array());
    EXPECT_EQ(rational_poly_from_json(to_json(RationalPoly())), RationalPoly());
}

TEST(JsonPoly, CyclotomicCoefficients) {
    const auto ctx = CyclotomicContext::make(12);
    Gen gen(9);
    const CycPoly f({gen.cyc(ctx, 5), gen.cyc(ctx, 5), zeta(ctx, 1)});
    const AnyPoly back = poly_from_json(to_json(f, 12));
    EXPECT_EQ(back.cyclotomic_order, 12U);
    EXPECT_EQ(std::get<CycPoly>(back.poly), f);
    EXPECT_THROW(rational_poly_from_json(to_json(f, 12)), FormatError);
    Json mixed = to_json(f, 12);
    mixed["coeffs"][0] = to_json(zeta(CyclotomicContext::make(5), 1));
    EXPECT_THROW(poly_from_json(mixed), FormatError);
}

TEST(JsonPoly, Malformed) {
    EXPECT_THROW(poly_from_json(Json{{"field", "real"}, {"coeffs", Json::array()}}), FormatError);
    EXPECT_THROW(poly_from_json(Json{{"field", "rational"}, {"coeffs", "1"}}), FormatError);
    EXPECT_THROW(poly_from_json(Json{{"field", "rational"}}), FormatError);
    EXPECT_THROW(poly_from_json(Json::array()), FormatError);
}

TEST(JsonInstance, RoundTripCorpus) {
    for (const auto& inst : testing::standard_instances()) {
        const Json j = to_json(inst);
        EXPECT_EQ(j["schema_version"], kSchemaVersion);
        const Instance back = instance_from_json(j);
        expect_same(inst, back);
        EXPECT_EQ(to_json(back), j);
        // through text as well
        expect_same(inst, instance_from_json(parse_json_text(j.dump())));
    }
}

TEST(JsonInstance, RoundTripWithOuter) {
    const Instance inst = build_cheby_case({.n = 2, .m = 5, .outer = RationalPoly{Rational(1), Rational(0), Rational(2)}});
    expect_same(inst, instance_from_json(to_json(inst)));
}

TEST(JsonInstance, SchemaVersion) {
    Json j = power_doc();
    j["schema_version"] = "1.3";
    EXPECT_NO_THROW(instance_from_json(j));
    j["schema_version"] = "2.0";
    EXPECT_THROW(instance_from_json(j), FormatError);
    j["schema_version"] = 1;
    EXPECT_THROW(instance_from_json(j), FormatError);
    j.erase("schema_version");
    EXPECT_THROW(instance_from_json(j), FormatError);
}

TEST(JsonInstance, MissingParamsMeansExternal) {
    Json j = power_doc();
    j.erase("params");
    EXPECT_TRUE(std::holds_alternative<ExternalParams>(instance_from_json(j).provenance));
}

TEST(JsonInstance, Malformed) {
    Json j = power_doc();
    j.erase("P");
    EXPECT_THROW(instance_from_json(j), FormatError);

    j = power_doc();
    j["field_order"] = 7;
    EXPECT_THROW(instance_from_json(j), FormatError);

    j = power_doc();
    j["field_order"] = -2;
    EXPECT_THROW(instance_from_json(j), FormatError);

    j = power_doc();
    j.erase("D");
    EXPECT_THROW(instance_from_json(j), FormatError);

    j = power_doc();
    j["params"]["family"] = "lattice";
    EXPECT_THROW(instance_from_json(j), FormatError);

    j = power_doc();
    j["params"]["roots"] = Json::array({0});
    EXPECT_THROW(instance_from_json(j), FormatError);

    EXPECT_THROW(parse_json_text("{\"P\": "), FormatError);
    EXPECT_THROW(parse_json_text(""), FormatError);
}

TEST(JsonReport, Fields) {
    const Instance inst = testing::standard_instances().front();
    const Json r = to_json(verify_instance(inst, {.max_moment = 4, .numeric = true}));
    EXPECT_EQ(r["schema_version"], kSchemaVersion);
    EXPECT_EQ(r["counterexample_established"], true);
    EXPECT_EQ(r["moments_checked"], 4);
    EXPECT_EQ(r["moments"].size(), 4U);
    EXPECT_EQ(r["moments"][0]["index"], 1);
    EXPECT_TRUE(cyc_from_json(r["moments"][0]["value"]).is_zero());
    ASSERT_TRUE(r.contains("numeric"));
    EXPECT_EQ(r["numeric"]["within_tolerance"], true);
    EXPECT_FALSE(to_json(verify_instance(inst, {.max_moment = 1})).contains("numeric"));
}

}  // namespace
}  // namespace momcert
