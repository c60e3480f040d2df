#include "abeljacobi.hpp"

#include "error.hpp"
#include "textform.hpp"

namespace mwplet {

ResidualQuadratic ResidualQuadratic::specialized(const FieldElem& value) const {
    if (parameter.empty()) fail(Err::Domain, "residual quadratic has no free parameter");
    ResidualQuadratic out = *this;
    out.g = g.substitute(parameter, value);
    out.slope = slope.substitute(parameter, value);
    out.parameter.clear();
    return out;
}

PlaneCurve ResidualQuadratic::plane_conic() const {
    if (!parameter.empty())
        fail(Err::Domain, "specialize the parameter before taking the plane conic");
    return PlaneCurve(homogenize_conic(g));
}

ResidualQuadratic residual_quadratic(const WeierstrassModel& model, const Section& p,
                                     const MPoly& slope) {
    if (p.is_zero()) fail(Err::Domain, "the construction needs an affine source point");
    if (!p.x().is_polynomial() || !p.y().is_polynomial())
        fail(Err::UnsupportedPlace,
             "source points with non-polynomial coordinates are not supported");
    std::string parameter;
    for (const auto& v : slope.vars()) {
        if (v == "t") continue;
        if (v == "x") fail(Err::Domain, "slope must not involve x");
        if (!parameter.empty() && parameter != v)
            fail(Err::Domain, "slope may carry at most one parameter");
        parameter = v;
    }
    MPoly xp = MPoly::from_poly(p.x().as_poly());
    MPoly yp = MPoly::from_poly(p.y().as_poly());
    MPoly a2 = MPoly::from_poly(model.a2());
    MPoly a4 = MPoly::from_poly(model.a4());
    MPoly x = MPoly::variable("x");
    // divide (r(x - x_P) + y_P)^2 - f by (x - x_P):
    //   g = -x^2 + B x + C,  B = r^2 - a2 - x_P,
    //   C = -r^2 x_P - a2 x_P - x_P^2 + 2 r y_P - a4
    MPoly r2 = slope * slope;
    MPoly B = r2 - a2 - xp;
    MPoly C = -(r2 * xp) - a2 * xp - xp * xp + slope * yp * FieldElem(2) - a4;
    MPoly g = -(x * x) + B * x + C;
    // the defining identity, checked symbolically
    MPoly line = slope * (x - xp) + yp;
    MPoly f = model.rhs_mpoly();
    if (!(line * line - f == (x - xp) * g))
        fail(Err::VerifyFailed, "residual factorization identity failed");
    ResidualQuadratic out;
    out.g = g;
    out.slope = slope;
    out.source = p;
    out.parameter = parameter;
    return out;
}

namespace {

// u + w * sqrt(delta) with u, w rational functions of t
struct ExtElem {
    RatFunc u, w;
    ExtElem() = default;
    ExtElem(const RatFunc& a, const RatFunc& b) : u(a), w(b) {}
    static ExtElem rational(const RatFunc& a) { return ExtElem(a, RatFunc(FieldElem(0))); }
};

struct ExtField {
    Poly delta;
    ExtElem add(const ExtElem& a, const ExtElem& b) const { return {a.u + b.u, a.w + b.w}; }
    ExtElem sub(const ExtElem& a, const ExtElem& b) const { return {a.u - b.u, a.w - b.w}; }
    ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        RatFunc d(delta);
        return {a.u * b.u + a.w * b.w * d, a.u * b.w + a.w * b.u};
    }
    ExtElem neg(const ExtElem& a) const { return {-a.u, -a.w}; }
    ExtElem inverse(const ExtElem& a) const {
        RatFunc n = a.u * a.u - a.w * a.w * RatFunc(delta);
        if (n.is_zero())
            fail(Err::Degenerate, "zero divisor in the quadratic function-field extension");
        return {a.u / n, -(a.w / n)};
    }
    bool is_zero(const ExtElem& a) const { return a.u.is_zero() && a.w.is_zero(); }
};

} // namespace

Section verify_abel_jacobi_image(const WeierstrassModel& model,
                                 const ResidualQuadratic& member) {
    if (!member.parameter.empty())
        fail(Err::Domain, "specialize the family parameter before verification");
    MPoly g = member.g;
    MPoly lead = g.coeff_of("x", 2);
    if (!lead.is_constant() || lead.is_zero())
        fail(Err::Degenerate, "member has degenerate x^2 coefficient");
    // normalize to g = -x^2 + B x + C
    g = g * (-lead.constant_value().inverse());
    Poly B = g.coeff_of("x", 1).to_poly("t");
    Poly C = g.coeff_of("x", 0).to_poly("t");
    ExtField ext;
    ext.delta = B * B + C * FieldElem(4);
    if (ext.delta.is_zero())
        fail(Err::Degenerate, "degenerate member: the two cut points coincide identically");
    FieldElem half(Rational(1, 2));
    // the two roots x = (B +- sqrt(delta)) / 2
    ExtElem x_plus{RatFunc(B * half), RatFunc(half)};
    ExtElem x_minus{RatFunc(B * half), RatFunc(-half)};
    // lift along the line y = r (x - x_P) + y_P
    RatFunc r(member.slope.to_poly("t"));
    RatFunc xp = member.source.x(), yp = member.source.y();
    auto lift = [&](const ExtElem& xx) {
        ExtElem d = ext.sub(xx, ExtElem::rational(xp));
        return ext.add({d.u * r, d.w * r}, ExtElem::rational(yp));
    };
    ExtElem y_plus = lift(x_plus), y_minus = lift(x_minus);
    // both cut points satisfy the curve equation over the extension
    RatFunc a2(model.a2()), a4(model.a4()), a6(model.a6());
    auto on_curve = [&](const ExtElem& xx, const ExtElem& yy) {
        ExtElem x2 = ext.mul(xx, xx);
        ExtElem rhs = ext.mul(x2, xx);
        rhs = ext.add(rhs, ext.mul(ExtElem::rational(a2), x2));
        rhs = ext.add(rhs, ext.mul(ExtElem::rational(a4), xx));
        rhs = ext.add(rhs, ExtElem::rational(a6));
        return ext.is_zero(ext.sub(ext.mul(yy, yy), rhs));
    };
    if (!on_curve(x_plus, y_plus) || !on_curve(x_minus, y_minus))
        fail(Err::VerifyFailed, "cut points do not lie on the curve");
    // chord addition; the two x-coordinates differ by sqrt(delta) != 0
    ExtElem dx = ext.sub(x_plus, x_minus);
    ExtElem lambda = ext.mul(ext.sub(y_plus, y_minus), ext.inverse(dx));
    ExtElem xs = ext.sub(ext.sub(ext.mul(lambda, lambda), ExtElem::rational(a2)),
                         ext.add(x_plus, x_minus));
    ExtElem ys = ext.neg(ext.add(y_plus, ext.mul(lambda, ext.sub(xs, x_plus))));
    if (!xs.w.is_zero() || !ys.w.is_zero())
        fail(Err::VerifyFailed, "bisection sum failed to be rational");
    Section sum(model, xs.u, ys.u);
    Section expected = section_neg(member.source);
    if (!(sum == expected))
        fail(Err::VerifyFailed, "bisection sum does not equal the negative of the source");
    return sum;
}

PlaneCurve implicitize_graph(const Poly& x_of_t) {
    if (x_of_t.degree() > 2) fail(Err::Domain, "graph implicitization needs degree <= 2");
    if (x_of_t.degree() <= 1) {
        // the closure of the graph of an affine-linear map is the line
        // X = a T + c Z
        MPoly line = MPoly::variable("X") -
                     MPoly::variable("T") * x_of_t.coeff(1) -
                     MPoly::variable("Z") * x_of_t.coeff(0);
        return PlaneCurve(line);
    }
    // X/Z = x(T/Z) cleared by Z^2
    MPoly g = MPoly::from_poly(x_of_t.with_var("t")) - MPoly::variable("x");
    return PlaneCurve(homogenize_conic(g));
}

} // namespace mwplet
