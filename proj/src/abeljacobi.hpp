#ifndef MWPLET_ABELJACOBI_HPP
#define MWPLET_ABELJACOBI_HPP

#include "planecurve.hpp"
#include "section.hpp"

namespace mwplet {

// The residual quadratic g of the line y = r(x - x_P) + y_P through P:
//   (r (x - x_P) + y_P)^2 - f(t, x) = (x - x_P) g(t, x),  deg_x g = 2.
// The slope may carry one free parameter, in which case g does too.
struct ResidualQuadratic {
    MPoly g;          // in t, x and possibly the slope's parameter
    MPoly slope;      // r(t [, parameter])
    Section source;   // P
    std::string parameter; // empty when the slope is parameter-free

    ResidualQuadratic specialized(const FieldElem& value) const;
    // the plane conic g = 0 (parameter-free g only)
    PlaneCurve plane_conic() const;
};

// Exact factorization of the line construction; P must have polynomial
// coordinates and the slope polynomial coefficients.
ResidualQuadratic residual_quadratic(const WeierstrassModel& model, const Section& p,
                                     const MPoly& slope);

// Abel-Jacobi image of the bisection cut out by a parameter-free member:
// solves g = 0 over the quadratic extension Q(t)(sqrt(delta)), lifts both
// points to the curve along the line, adds them with the group law, checks
// that the sum is rational, and checks that it equals -P.
Section verify_abel_jacobi_image(const WeierstrassModel& model, const ResidualQuadratic& member);

// graph x = x(t), deg <= 2, as a plane conic through [0:1:0]
PlaneCurve implicitize_graph(const Poly& x_of_t);

} // namespace mwplet

#endif
