#include <doctest.h>

#include "error.hpp"
#include "textform.hpp"

using namespace mwplet;

TEST_CASE("field element rendering") {
    CHECK(fieldelem_string(FieldElem(Rational(-1, 2))) == "-1/2");
    FieldElem e = FieldElem(1) + FieldElem(2) * FieldElem::radical(-2);
    CHECK(fieldelem_string(e) == "1+2*sqrt(-2)");
    CHECK(fieldelem_string(FieldElem(0)) == "0");
    FieldElem p = FieldElem::radical(-2) * FieldElem::radical(-10);
    CHECK(fieldelem_string(p) == "sqrt(-2)*sqrt(-10)");
}

TEST_CASE("canonical polynomial text is integer-cleared and sign-normalized") {
    MPoly p = parse_mpoly("x*z_dummy", {"x", "z_dummy"}); // unusual names still print
    CHECK(canonical_string(p) == "x*z_dummy");
    CHECK(canonical_string(parse_mpoly("-1/2*t^2+x", {"t", "x"})) == "t^2 - 2*x");
    CHECK(canonical_string(parse_mpoly("3*t^2-6", {"t"})) == "t^2 - 2");
    CHECK(canonical_string(parse_mpoly("sqrt(-2)*t - 2", {"t"})) == "sqrt(-2)*t - 2");
}

TEST_CASE("graded-lex ordering drives the term order") {
    // total degree first, then lex with T > X > Z
    std::string s = canonical_string(parse_mpoly("Z^2+T*X+X^2+T^2+X*Z+T*Z",
                                                 {"T", "X", "Z"}));
    CHECK(s == "T^2 + T*X + T*Z + X^2 + X*Z + Z^2");
}

TEST_CASE("round trip through the parser") {
    const char* samples[] = {
        "1/4*t^4 - 3*t^2 + 2",
        "sqrt(-2)*t^3 - 1/2*t + 7",
        "(1+sqrt(-10))*t^2 - 2*t",
        "t^2*x - x^2 + 17/4",
    };
    for (const char* s : samples) {
        MPoly p = parse_mpoly(s, {"t", "x"});
        MPoly q = parse_mpoly(mpoly_string(p), {"t", "x"});
        CHECK(p == q);
    }
}

TEST_CASE("rational function parsing and printing") {
    RatFunc r = parse_ratfunc("(t^2-1)/(2*t+2)");
    // reduced to the polynomial (t-1)/2
    CHECK(r.is_polynomial());
    CHECK(ratfunc_string(r) == "1/2*t - 1/2");
    RatFunc s = parse_ratfunc("1/(t^2-2)");
    CHECK(s.den().leading() == FieldElem(1));
    CHECK(parse_ratfunc(ratfunc_string(s)) == s);
}

TEST_CASE("parse errors carry the parse code") {
    try {
        (void)parse_mpoly("t + unknown", {"t"});
        CHECK(false);
    } catch (const MwpError& e) {
        CHECK(e.code() == Err::Parse);
    }
    CHECK_THROWS_AS((void)parse_mpoly("t +", {"t"}), MwpError);
    CHECK_THROWS_AS((void)parse_mpoly("(t", {"t"}), MwpError);
    CHECK_THROWS_AS((void)parse_fieldelem("1/0"), MwpError);
}

TEST_CASE("pair splitting") {
    auto [a, b] = split_pair(" (t, sqrt(-2)*(t+1)*(t-2)) ");
    CHECK(parse_ratfunc(a) == parse_ratfunc("t"));
    CHECK(parse_ratfunc(b) == parse_ratfunc("sqrt(-2)*(t+1)*(t-2)"));
    CHECK_THROWS_AS(split_pair("(t)"), MwpError);
}
