#include <doctest.h>

#include "catalog.hpp"
#include "error.hpp"
#include "heights.hpp"
#include "textform.hpp"

using namespace mwplet;

TEST_CASE("intersection with the zero section") {
    const Catalog& cat = catalog();
    CHECK(zero_section_intersection(cat.model, cat.sL1) == 0);
    CHECK(zero_section_intersection(cat.model, cat.s1) == 0);
    CHECK(zero_section_intersection(cat.model, cat.st) == 0);
    // synthetic: a double pole at t = 0 counts once
    CHECK(zero_intersection_from_x(parse_ratfunc("1/t^2")) == 1);
    CHECK_THROWS_AS(zero_intersection_from_x(parse_ratfunc("1/t")), MwpError);
}

TEST_CASE("component incidence of the half-height sections") {
    const Catalog& cat = catalog();
    auto fibers = cat.model.classify_fibers();
    auto incidence_at = [&](const Section& s, long t0) {
        for (const auto& f : fibers)
            if (!f.place.is_infinity() && f.place.degree() == 1 &&
                f.place.root() == FieldElem(t0))
                return component_incidence(cat.model, s, f);
        FAIL("no fiber at the requested place");
        return Incidence::Identity;
    };
    CHECK(incidence_at(cat.sL1, 2) == Incidence::NonIdentity);
    CHECK(incidence_at(cat.sL1, 1) == Incidence::Identity);
    // each half-height section meets a non-identity component exactly 3 times
    for (const Section* s : {&cat.sL1, &cat.sL2, &cat.sL3}) {
        int nonid = 0;
        for (const auto& f : fibers) {
            if (f.n != 2) continue;
            if (component_incidence(cat.model, *s, f) == Incidence::NonIdentity) ++nonid;
        }
        CHECK(nonid == 3);
    }
    // the narrow basis stays on the identity components everywhere
    for (const Section* s : {&cat.s1, &cat.s2, &cat.s3}) {
        for (const auto& f : fibers) {
            if (f.n != 2) continue;
            CHECK(component_incidence(cat.model, *s, f) == Incidence::Identity);
        }
    }
}

TEST_CASE("pair intersections") {
    const Catalog& cat = catalog();
    // s1 and s2 meet exactly once, at t = 0 with y = 0 on a smooth fiber
    CHECK(pair_intersection(cat.model, cat.s1, cat.s2) == 1);
    CHECK(pair_intersection(cat.model, cat.s1, cat.s3) == 1);
    // a section and its negative meet over the zeros of y; for sL1 those are
    // fiber nodes, which the contract rejects
    try {
        (void)pair_intersection(cat.model, cat.sL1, section_neg(cat.sL1));
        CHECK(false);
    } catch (const MwpError& e) {
        CHECK(e.code() == Err::NodeMeeting);
    }
    CHECK_THROWS_AS(pair_intersection(cat.model, cat.s1, cat.s1), MwpError);
}

TEST_CASE("height table of the reference curve") {
    const Catalog& cat = catalog();
    auto value = [&](const Section& a, const Section& b) {
        return height_pairing(cat.model, a, b).value;
    };
    CHECK(value(cat.sL1, cat.sL1) == Rational(1, 2));
    CHECK(value(cat.sL2, cat.sL2) == Rational(1, 2));
    CHECK(value(cat.sL3, cat.sL3) == Rational(1, 2));
    CHECK(value(cat.s1, cat.s1) == 2);
    CHECK(value(cat.s2, cat.s2) == 2);
    CHECK(value(cat.s3, cat.s3) == 2);
    CHECK(value(cat.s1, cat.s2) == 0);
    CHECK(value(cat.s1, cat.s3) == 0);
    CHECK(value(cat.s2, cat.s3) == 0);
    CHECK(value(cat.st, cat.st) == 0);
}

TEST_CASE("height report fields satisfy the defining identity") {
    const Catalog& cat = catalog();
    HeightReport rep = height_pairing(cat.model, cat.sL1, cat.sL1);
    Rational contr;
    for (const auto& [f, c] : rep.contributions) contr += c;
    CHECK(rep.value == rep.chi_term + rep.zero_terms - rep.cross_term - contr);
    CHECK(rep.contributions.size() == 3);
}

TEST_CASE("narrow coordinates in the basis") {
    const Catalog& cat = catalog();
    std::array<Section, 3> basis = {cat.s1, cat.s2, cat.s3};
    NarrowCoordinates c = narrow_coordinates(cat.model, cat.s2, basis);
    CHECK(c.integral);
    CHECK(c.coords == std::array<Rational, 3>{0, 1, 0});
    NarrowCoordinates n = narrow_coordinates(cat.model, section_neg(cat.s3), basis);
    CHECK(n.integral);
    CHECK(n.coords == std::array<Rational, 3>{0, 0, -1});
    NarrowCoordinates h = narrow_coordinates(cat.model, cat.sL1, basis);
    CHECK_FALSE(h.integral);
    CHECK(h.coords == std::array<Rational, 3>{Rational(1, 2), 0, 0});
}

TEST_CASE("height symmetry on a torsion translate") {
    const Catalog& cat = catalog();
    Section q = section_add(cat.model, cat.s1, cat.st);
    CHECK(height_pairing(cat.model, cat.s1, q).value ==
          height_pairing(cat.model, q, cat.s1).value);
}
