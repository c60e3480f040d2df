#include <doctest.h>

#include "catalog.hpp"
#include "error.hpp"
#include "textform.hpp"

using namespace mwplet;

TEST_CASE("expanding the factored reference curve") {
    MPoly rhs = parse_mpoly("(x-t^2+2)*(x^2-2*x+t^2-4)", {"t", "x"});
    WeierstrassModel m = WeierstrassModel::expand_factored(rhs);
    CHECK(m.a2() == parse_ratfunc("-t^2").num());
    CHECK(m.a4() == parse_ratfunc("3*t^2-8").num());
    CHECK(m.a6() == parse_ratfunc("-t^4+6*t^2-8").num());
}

TEST_CASE("expanding a trivial split") {
    WeierstrassModel m =
        WeierstrassModel::expand_factored(parse_mpoly("(x)*(x^2+1)", {"t", "x"}));
    CHECK(m.a2().is_zero());
    CHECK(m.a4() == parse_ratfunc("1").num());
    CHECK(m.a6().is_zero());
}

TEST_CASE("degree bounds are enforced") {
    CHECK_THROWS_AS(
        WeierstrassModel::expand_factored(parse_mpoly("(x-1)*(x^2-t^10)", {"t", "x"})),
        MwpError);
    CHECK_THROWS_AS(
        WeierstrassModel::expand_factored(parse_mpoly("(x-1)*(x-2)", {"t", "x"})),
        MwpError);
    CHECK_THROWS_AS(
        WeierstrassModel::expand_factored(parse_mpoly("(2*x-1)*(x^2+1)", {"t", "x"})),
        MwpError);
}

TEST_CASE("fiber classification of the reference curve") {
    const WeierstrassModel& m = catalog().model;
    auto fibers = m.classify_fibers();
    // five I2 at t = -2, -1, 1, 2, infinity plus one quadratic I1 place
    int i2 = 0, i1_weight = 0;
    bool has_infinity = false;
    long total = 0;
    for (const auto& f : fibers) {
        total += static_cast<long>(f.n) * f.residue_degree;
        if (f.n == 2) ++i2;
        if (f.n == 1) i1_weight += f.residue_degree;
        if (f.place.is_infinity()) {
            has_infinity = true;
            CHECK(f.n == 2);
            REQUIRE(f.node.has_value());
            CHECK(f.node->first == FieldElem(0)); // chart coordinates
        }
    }
    CHECK(i2 == 5);
    CHECK(i1_weight == 2);
    CHECK(has_infinity);
    CHECK(total == 12);
}

TEST_CASE("node coordinates at the rational places") {
    const WeierstrassModel& m = catalog().model;
    auto fibers = m.classify_fibers();
    auto node_at = [&](long t0) -> FieldElem {
        for (const auto& f : fibers)
            if (!f.place.is_infinity() && f.place.degree() == 1 &&
                f.place.root() == FieldElem(t0))
                return f.node->first;
        FAIL("no fiber at the requested place");
        return FieldElem(0);
    };
    // f(1, x) = (x+1)^2 (x-3), f(2, x) = x (x-2)^2
    CHECK(node_at(1) == FieldElem(-1));
    CHECK(node_at(2) == FieldElem(2));
    CHECK(node_at(-1) == FieldElem(-1));
    CHECK(node_at(-2) == FieldElem(2));
}

TEST_CASE("the quadratic bad place carries a rational node") {
    const WeierstrassModel& m = catalog().model;
    for (const auto& f : m.classify_fibers())
        if (f.residue_degree == 2) {
            CHECK(f.n == 1);
            REQUIRE(f.node.has_value());
            CHECK(f.node->first == FieldElem(1));
        }
}

TEST_CASE("additive reduction is rejected with a typed error") {
    WeierstrassModel m(Poly("t"), Poly("t"), Poly::variable("t"));
    try {
        (void)m.classify_fibers();
        CHECK(false);
    } catch (const MwpError& e) {
        CHECK(e.code() == Err::UnsupportedFiber);
    }
}

TEST_CASE("infinity chart is again a valid model") {
    WeierstrassModel chart = catalog().model.infinity_chart_model();
    CHECK(chart.a2().var() == "u");
    // ord_{u=0} of the chart discriminant equals 12 - deg(disc)
    CHECK(poly_ord_at(chart.discriminant(), Place::at_root(FieldElem(0), "u")) ==
          12 - catalog().model.discriminant().degree());
}
