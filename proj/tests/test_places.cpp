#include <doctest.h>

#include "error.hpp"
#include "places.hpp"
#include "textform.hpp"

using namespace mwplet;

TEST_CASE("valuations at finite places and infinity") {
    RatFunc r = parse_ratfunc("(t-1)^2/(t+1)");
    Place v1 = Place::at_root(FieldElem(1));
    CHECK(place_valuation(r, v1) == 2);
    CHECK(place_valuation(parse_ratfunc("1/2*t^2-2"), Place::infinity()) == -2);
    CHECK(place_valuation(parse_ratfunc("1/t"), Place::at_root(FieldElem(0))) == -1);
    CHECK_THROWS_AS(place_valuation(RatFunc(FieldElem(0)), v1), MwpError);
}

TEST_CASE("place factorization over the rationals") {
    Poly p = parse_ratfunc("(t-1)^2*(t+2)*(t^2-5)").num();
    auto factors = factor_into_places(p, Tower::rationals());
    REQUIRE(factors.size() == 3);
    // ordered by degree then text
    CHECK(factors[0].place.degree() == 1);
    CHECK(factors[1].place.degree() == 1);
    CHECK(factors[2].place.degree() == 2);
    int mult_sum = 0;
    for (const auto& f : factors) mult_sum += f.multiplicity * f.place.degree();
    CHECK(mult_sum == 5);
}

TEST_CASE("quadratic places split over a tower containing the root") {
    // t^2 - 9/2 splits over Q(sqrt(-1), sqrt(-2)) since (3/2 sqrt(-1) sqrt(-2))^2 = 9/2
    Poly p = parse_ratfunc("t^2-9/2").num();
    auto plain = factor_into_places(p, Tower::rationals());
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].place.degree() == 2);
    auto split = factor_into_places(p, Tower::biquadratic(-1, -2));
    REQUIRE(split.size() == 2);
    CHECK(split[0].place.degree() == 1);
    CHECK(split[1].place.degree() == 1);
}

TEST_CASE("residue arithmetic in a quadratic residue field") {
    Place v = Place::finite(parse_ratfunc("t^2-5").num().monic());
    Residue t(v, Poly::variable("t"));
    Residue t2 = t * t;
    CHECK(t2.as_field_elem().has_value());
    CHECK(*t2.as_field_elem() == FieldElem(5));
    Residue inv = t.inverse();
    CHECK((t * inv).as_field_elem().value() == FieldElem(1));
    // evaluation of a rational function at the place
    auto val = ratfunc_at(parse_ratfunc("(t^2-3)/(t+1)"), v);
    REQUIRE(val.has_value());
    Residue expected = Residue(v, parse_ratfunc("2").num()) *
                       Residue(v, parse_ratfunc("t+1").num()).inverse();
    CHECK(*val == expected);
}

TEST_CASE("degree >= 3 residual factors are rejected") {
    Poly p = parse_ratfunc("t^3-t-1").num(); // irreducible over Q
    CHECK_THROWS_AS(factor_into_places(p, Tower::rationals()), MwpError);
}

TEST_CASE("valuations sum to zero over all places") {
    RatFunc r = parse_ratfunc("(t-1)^3*(t^2+1)/((t+2)^2*(t^2-5)^2)");
    long sum = 0;
    Poly numden = r.num() * r.den();
    for (const auto& [place, mult] : factor_into_places(numden, Tower::rationals()))
        sum += static_cast<long>(place_valuation(r, place)) * place.degree();
    sum += place_valuation(r, Place::infinity());
    CHECK(sum == 0);
}
