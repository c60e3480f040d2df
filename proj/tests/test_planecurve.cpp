#include <doctest.h>

#include <random>

#include "arrangements.hpp"
#include "error.hpp"
#include "textform.hpp"

using namespace mwplet;

namespace {
PlaneCurve curve(const std::string& s) { return PlaneCurve(parse_mpoly(s, {"T", "X", "Z"})); }
} // namespace

TEST_CASE("conic smoothness") {
    CHECK(conic_smooth(curve("X*Z-1/2*T^2+2*Z^2")));
    CHECK_FALSE(conic_smooth(curve("X^2")));
    CHECK(conic_smooth(curve("T^2+X^2+Z^2")));
}

TEST_CASE("parametrization from the blow-up center recovers the graph") {
    const Catalog& cat = catalog();
    PlaneCurve c1 = implicitize_graph(parse_ratfunc("1/2*t^2-2").as_poly());
    ConicParam par = parametrize_conic(c1, cat.blowup_center);
    // the sweep hits the graph points [u : u^2/2 - 2 : 1] up to scaling
    for (long u : {0L, 1L, 2L, 5L}) {
        ProjPoint p = par.point_at(FieldElem(u));
        ProjPoint expected = {FieldElem(u),
                              FieldElem(Rational(u * u, 2)) - FieldElem(2), FieldElem(1)};
        CHECK(proj_eq(p, expected));
    }
    CHECK(proj_eq(par.base, cat.blowup_center));
    CHECK_THROWS_AS(parametrize_conic(c1, ProjPoint{FieldElem(1), FieldElem(1), FieldElem(1)}),
                    MwpError);
}

TEST_CASE("classical circle parametrization") {
    PlaneCurve circle = curve("T^2+X^2-Z^2");
    ProjPoint base{FieldElem(1), FieldElem(0), FieldElem(1)};
    ConicParam par = parametrize_conic(circle, base);
    for (long u : {0L, 1L, 3L}) {
        ProjPoint p = par.point_at(FieldElem(u));
        CHECK(circle.contains(p));
    }
}

TEST_CASE("profile of the reference conic against the first quartic component") {
    const Catalog& cat = catalog();
    PlaneCurve c1 = implicitize_graph(cat.s1.x().as_poly());
    ConicParam par = parametrize_conic(c1, cat.blowup_center);
    IntersectionProfile prof = intersection_profile(par, cat.branch_conic1);
    CHECK(prof.total == 4);
    REQUIRE(prof.entries.size() == 2);
    for (const auto& e : prof.entries) {
        CHECK(e.multiplicity == 2);
        REQUIRE(e.point.has_value());
    }
    ProjPoint other{FieldElem(0), FieldElem(-2), FieldElem(1)};
    bool found_zo = false, found_other = false;
    for (const auto& e : prof.entries) {
        found_zo = found_zo || proj_eq(*e.point, cat.blowup_center);
        found_other = found_other || proj_eq(*e.point, other);
    }
    CHECK(found_zo);
    CHECK(found_other);
    CHECK(prof.all_even());
}

TEST_CASE("the two quartic components cross at the four nodes") {
    const Catalog& cat = catalog();
    ConicParam par = parametrize_conic(cat.branch_conic1, cat.blowup_center);
    IntersectionProfile prof = intersection_profile(par, cat.branch_conic2);
    CHECK(prof.total == 4);
    CHECK(prof.entries.size() == 4);
    for (const auto& e : prof.entries) {
        REQUIRE(e.point.has_value());
        bool is_node = false;
        for (const auto& nd : cat.nodes) is_node = is_node || proj_eq(*e.point, nd);
        CHECK(is_node);
        CHECK(e.multiplicity == 1);
    }
}

TEST_CASE("profiles reject shared components") {
    const Catalog& cat = catalog();
    ConicParam par = parametrize_conic(cat.branch_conic1, cat.blowup_center);
    CHECK_THROWS_AS(intersection_profile(par, cat.branch_quartic), MwpError);
}

TEST_CASE("a generic line meets a conic twice") {
    const Catalog& cat = catalog();
    ConicParam par = parametrize_conic(cat.branch_conic1, cat.blowup_center);
    IntersectionProfile prof = intersection_profile(par, curve("T+X+Z"));
    CHECK(prof.total == 2);
    CHECK_FALSE(prof.all_even());
}

TEST_CASE("tangency certificates") {
    const Catalog& cat = catalog();
    std::vector<ProjPoint> sing(cat.nodes.begin(), cat.nodes.end());
    PlaneCurve c1 = implicitize_graph(cat.s1.x().as_poly());
    CHECK(tangency_certificate(c1, cat.branch_quartic, sing));
    // a generic conic is not everywhere-even
    CHECK_FALSE(tangency_certificate(curve("T^2+X^2-3*Z^2"), cat.branch_quartic, sing));
    // a conic through a node fails condition (i)
    PlaneCurve through_node = curve("T^2+X^2-8*Z^2");
    REQUIRE(through_node.contains(cat.nodes[0]));
    CHECK_FALSE(tangency_certificate(through_node, cat.branch_quartic, sing));
}

TEST_CASE("pencil classification of conic pairs") {
    const Catalog& cat = catalog();
    PlaneCurve c1 = implicitize_graph(cat.s1.x().as_poly());
    ConicPairClass two_tac = classify_conic_pair(c1, cat.branch_conic1);
    CHECK(two_tac.type == ConicPairType::TwoTacnodes);
    REQUIRE(two_tac.singularities.size() == 2);
    for (const auto& s : two_tac.singularities) {
        CHECK(s.kind == PairSingularity::Kind::Tacnode);
        CHECK(s.multiplicity == 2);
    }
    ConicPairClass nodes = classify_conic_pair(cat.branch_conic1, cat.branch_conic2);
    CHECK(nodes.type == ConicPairType::FourTransverse);
    CHECK(nodes.singularities.size() == 4);
    // internal fourth-order contact: y = x^2 against y = x^2 + x^4 analogue;
    // two conics osculating to order four, e.g. XZ - T^2 and XZ - T^2 + X^2
    ConicPairClass osc4 = classify_conic_pair(curve("X*Z-T^2"), curve("X*Z-T^2+X^2"));
    CHECK(osc4.type == ConicPairType::FourthOrderContact);
    REQUIRE(osc4.singularities.size() == 1);
    CHECK(osc4.singularities[0].kind == PairSingularity::Kind::Other);
    ConicPairClass simple = classify_conic_pair(curve("X*Z-T^2"), curve("X*Z-T^2+Z^2"));
    // members of the same pencil through a double root with a rank-2 member
    CHECK((simple.type == ConicPairType::TwoTacnodes ||
           simple.type == ConicPairType::SimpleTangency ||
           simple.type == ConicPairType::FourthOrderContact));
}

TEST_CASE("triple-point certificates") {
    const Catalog& cat = catalog();
    // three conics through [0:1:0]
    PlaneCurve a = curve("X*Z-T^2");
    PlaneCurve b = curve("X*Z-2*T^2");
    PlaneCurve c = curve("X*Z-T^2+X*T");
    CHECK(certify_no_common_point(a, b, c) == TripleCheck::Inconclusive);
    // generic triple without common points
    PlaneCurve d = curve("T^2+X^2-Z^2");
    PlaneCurve e = curve("T^2+X^2-4*Z^2");
    PlaneCurve f = curve("T^2-X*Z+3*Z^2");
    CHECK(certify_no_common_point(d, e, f) == TripleCheck::NoCommonPoint);
}

TEST_CASE("point assumption at the blow-up center") {
    const Catalog& cat = catalog();
    std::vector<ProjPoint> nodes(cat.nodes.begin(), cat.nodes.end());
    CHECK(verify_point_assumption(cat.branch_conic1, cat.branch_conic2, nodes,
                                  cat.blowup_center));
    CHECK_THROWS_AS(verify_point_assumption(cat.branch_conic1, cat.branch_conic2, nodes,
                                            cat.nodes[0]),
                    MwpError);
}

TEST_CASE("bad parameter loci are nonzero with good specializations") {
    BadParameterQuery q1{BadParameterQuery::Condition::Nonsmooth, std::nullopt, std::nullopt};
    Poly locus1 = bad_parameter_locus(1, q1);
    CHECK(locus1.degree() > 0);
    CHECK_FALSE(locus1.eval(FieldElem(1)).is_zero());
    BadParameterQuery q2{BadParameterQuery::Condition::ThroughPoint,
                         ProjPoint{FieldElem(0), FieldElem(1), FieldElem(0)}, std::nullopt};
    Poly locus2 = bad_parameter_locus(1, q2);
    // no member passes through the blow-up center: the locus is a nonzero constant
    CHECK(locus2.degree() == 0);
    BadParameterQuery q3{BadParameterQuery::Condition::NontransverseTo, std::nullopt,
                         catalog().family[0].specialized(FieldElem(1)).plane_conic()};
    Poly locus3 = bad_parameter_locus(2, q3);
    CHECK(locus3.degree() > 0);
    BadParameterQuery q4{BadParameterQuery::Condition::ContactBeyondTacnode, std::nullopt,
                         std::nullopt};
    Poly locus4 = bad_parameter_locus(1, q4);
    CHECK_FALSE(locus4.is_zero());
}

TEST_CASE("Bezout totals on random profiles") {
    const Catalog& cat = catalog();
    std::mt19937 gen(17);
    auto pick = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    };
    ConicParam par = parametrize_conic(cat.branch_conic1, cat.blowup_center);
    for (int i = 0; i < 30; ++i) {
        int fam = static_cast<int>(pick(1, 3));
        long a = pick(1, 25);
        PlaneCurve member = cat.family[fam - 1].specialized(FieldElem(a)).plane_conic();
        IntersectionProfile prof = intersection_profile(par, member);
        CHECK(prof.total == 2 * member.degree());
    }
}
