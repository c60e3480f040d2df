#include <doctest.h>

#include <random>

#include "error.hpp"
#include "textform.hpp"

using namespace mwplet;

TEST_CASE("divmod on the textbook splits") {
    Poly x = Poly::variable("x");
    Poly one(FieldElem(1), "x");
    auto [q1, r1] = poly_divmod(x * x - one, x - one);
    CHECK(q1 == x + one);
    CHECK(r1.is_zero());
    auto [q2, r2] = poly_divmod(x * x, x + one);
    CHECK(q2 == x - one);
    CHECK(r2 == one);
}

TEST_CASE("the curve right-hand side is divisible by x - x(t) on a section") {
    // (y(t))^2 - f(t, x) vanishes at x = x(t) for a point on the curve
    MPoly f = parse_mpoly("(x-t^2+2)*(x^2-2*x+t^2-4)", {"t", "x"});
    MPoly xt = parse_mpoly("t", {"t"});
    MPoly yt = parse_mpoly("sqrt(-2)*(t+1)*(t-2)", {"t"});
    MPoly lhs = yt * yt - f;
    MPoly remainder = lhs.substitute("x", xt);
    CHECK(remainder.is_zero());
}

TEST_CASE("gcd and squarefree part") {
    Poly t = Poly::variable("t");
    Poly one(FieldElem(1), "t");
    Poly two(FieldElem(2), "t");
    Poly three(FieldElem(3), "t");
    Poly a = (t - one) * (t - one) * (t + two);
    Poly b = (t - one) * (t + three);
    CHECK(poly_gcd(a, b) == t - one);
    CHECK(poly_squarefree_part(a) == (t - one) * (t + two));
    CHECK(poly_gcd(Poly("t"), t * t) == t * t);
}

TEST_CASE("squarefree decomposition separates multiplicities") {
    Poly t = Poly::variable("t");
    Poly one(FieldElem(1), "t");
    Poly p = (t - one).pow(2) * (t + one).pow(3) * t;
    auto dec = poly_squarefree_decomposition(p);
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].first == t);
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == t - one);
    CHECK(dec[1].second == 2);
    CHECK(dec[2].first == t + one);
    CHECK(dec[2].second == 3);
}

TEST_CASE("division by zero polynomial fails") {
    CHECK_THROWS_AS(poly_divmod(Poly::variable("t"), Poly("t")), MwpError);
}

TEST_CASE("divmod round-trip on random polynomials") {
    std::mt19937 gen(11);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    };
    FieldElem s2 = FieldElem::radical(-2);
    for (int i = 0; i < 150; ++i) {
        auto rand_poly = [&](int maxdeg) {
            std::vector<FieldElem> c;
            long d = pick(0, maxdeg);
            for (long j = 0; j <= d; ++j)
                c.push_back(FieldElem(Rational(pick(-8, 8), pick(1, 3))) +
                            s2 * FieldElem(Rational(pick(-1, 1))));
            return Poly::from_coeffs(c, "t");
        };
        Poly a = rand_poly(7), b = rand_poly(3);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divmod(a, b);
        CHECK(a == q * b + r);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }
}
