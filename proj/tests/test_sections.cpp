#include <doctest.h>

#include "catalog.hpp"
#include "error.hpp"
#include "textform.hpp"

using namespace mwplet;

TEST_CASE("points must satisfy the curve equation") {
    const WeierstrassModel& m = catalog().model;
    CHECK_THROWS_AS(Section(m, parse_ratfunc("t"), parse_ratfunc("t")), MwpError);
    // the published 2-torsion coordinates with +2 are not on the curve
    CHECK_THROWS_AS(Section(m, parse_ratfunc("t^2+2"), parse_ratfunc("0")), MwpError);
    CHECK_NOTHROW(Section(m, parse_ratfunc("t^2-2"), parse_ratfunc("0")));
}

TEST_CASE("doubling the half-height sections reproduces the narrow basis") {
    const Catalog& cat = catalog();
    Section d1 = section_mul(cat.model, 2, cat.sL1);
    CHECK(d1.x() == parse_ratfunc("1/2*t^2-2"));
    CHECK(d1.y() == parse_ratfunc("-1/4*sqrt(-2)*t*(t^2-4)"));
    Section d2 = section_mul(cat.model, 2, cat.sL2);
    CHECK(d2.x() == parse_ratfunc("1/10*t^2-2"));
    CHECK(d2.y() == parse_ratfunc("-3/100*sqrt(-10)*t*(t^2+20)"));
    Section d3 = section_mul(cat.model, 2, cat.sL3);
    CHECK(d3.x() == parse_ratfunc("t^2-17/4"));
    CHECK(d3.y() == parse_ratfunc("-3/8*sqrt(-1)*(4*t^2-19)"));
}

TEST_CASE("group identities") {
    const Catalog& cat = catalog();
    const WeierstrassModel& m = cat.model;
    CHECK(section_add(m, cat.sL1, section_neg(cat.sL1)).is_zero());
    CHECK(section_add(m, cat.sL2, Section::zero()) == cat.sL2);
    CHECK(section_mul(m, 2, cat.st).is_zero()); // 2-torsion
    CHECK(section_mul(m, 0, cat.sL1).is_zero());
    CHECK(section_mul(m, -1, cat.sL1) == section_neg(cat.sL1));
}

TEST_CASE("mixed-tower addition lands in the compositum") {
    const Catalog& cat = catalog();
    Section s = section_add(cat.model, cat.sL1, cat.sL2);
    Tower t = s.tower();
    CHECK(t.radicals() == 2);
    CHECK(t.has(-2));
    CHECK(t.has(-10));
}

TEST_CASE("chart transport keeps sections on the chart model") {
    const Catalog& cat = catalog();
    WeierstrassModel chart = cat.model.infinity_chart_model();
    for (const Section* s : {&cat.sL1, &cat.s1, &cat.st})
        CHECK_NOTHROW(section_infinity_chart(chart, *s));
}
