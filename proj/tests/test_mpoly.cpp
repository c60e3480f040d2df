#include <doctest.h>

#include "abeljacobi.hpp"
#include "error.hpp"
#include "textform.hpp"

using namespace mwplet;

TEST_CASE("resultant against a linear factor is evaluation") {
    MPoly f = parse_mpoly("x^2+1", {"x"});
    MPoly g = parse_mpoly("x-2", {"x"});
    CHECK(resultant_eliminate(f, g, "x") == MPoly(FieldElem(5)));
}

TEST_CASE("resultant of two lines in x picks up the crossing locus") {
    MPoly a = parse_mpoly("x-t", {"t", "x"});
    MPoly b = parse_mpoly("x+t", {"t", "x"});
    MPoly r = resultant_eliminate(a, b, "x");
    CHECK(r == parse_mpoly("2*t", {"t"}));
}

TEST_CASE("resultant vanishes exactly on common factors") {
    MPoly a = parse_mpoly("(t-1)*(t+2)", {"t"});
    MPoly b = parse_mpoly("(t-1)*(t+5)", {"t"});
    CHECK(resultant_eliminate(a, b, "t").is_zero());
    MPoly c = parse_mpoly("(t-3)*(t+5)", {"t"});
    CHECK_FALSE(resultant_eliminate(a, c, "t").is_zero());
    CHECK_THROWS_AS(resultant_eliminate(MPoly(FieldElem(1)), MPoly(FieldElem(2)), "t"),
                    MwpError);
}

TEST_CASE("implicitization agrees with elimination") {
    // eliminating t from the graph equation and the substitution t = T
    // reproduces the dehomogenized conic
    MPoly graph = parse_mpoly("x-1/2*t^2+2", {"t", "x"});
    MPoly chain = parse_mpoly("t-T", {"t", "T"});
    MPoly eliminated = resultant_eliminate(graph, chain, "t");
    PlaneCurve conic = implicitize_graph(parse_ratfunc("1/2*t^2-2").as_poly());
    MPoly affine = conic.poly()
                       .substitute("X", MPoly::variable("x"))
                       .substitute("Z", FieldElem(1));
    CHECK(affine.primitive_normalized() == eliminated.primitive_normalized());
}

TEST_CASE("exact division") {
    MPoly a = parse_mpoly("(t+x)*(t-x)", {"t", "x"});
    CHECK(a.divexact(parse_mpoly("t+x", {"t", "x"})) == parse_mpoly("t-x", {"t", "x"}));
    CHECK_THROWS_AS(a.divexact(parse_mpoly("t+1", {"t"})), MwpError);
}

TEST_CASE("primitive normalization clears denominators and fixes the sign") {
    MPoly p = parse_mpoly("-1/2*T^2+X*Z+2*Z^2", {"T", "X", "Z"});
    MPoly n = p.primitive_normalized();
    CHECK(canonical_string(n) == "T^2 - 2*X*Z - 4*Z^2");
}
