#ifndef MWPLET_PLANECURVE_HPP
#define MWPLET_PLANECURVE_HPP

#include <optional>
#include <vector>

#include "mpoly.hpp"
#include "places.hpp"

namespace mwplet {

using ProjPoint = std::array<FieldElem, 3>;

bool proj_eq(const ProjPoint& a, const ProjPoint& b);
ProjPoint proj_normalized(const ProjPoint& p); // first nonzero coordinate scaled to 1
std::string proj_string(const ProjPoint& p);

// Reduced homogeneous curve in (T : X : Z), content-normalized.
class PlaneCurve {
public:
    explicit PlaneCurve(const MPoly& f);
    const MPoly& poly() const { return f_; }
    int degree() const { return degree_; }
    Tower tower() const { return f_.tower(); }
    FieldElem eval(const ProjPoint& p) const;
    bool contains(const ProjPoint& p) const { return eval(p).is_zero(); }
    // gradient, i.e. the tangent line coefficients at a smooth point
    std::array<FieldElem, 3> gradient(const ProjPoint& p) const;
    bool operator==(const PlaneCurve& o) const { return f_ == o.f_; }
    bool operator!=(const PlaneCurve& o) const { return !(*this == o); }
    std::string str() const;

private:
    MPoly f_;
    int degree_;
};

// --- conic helpers -----------------------------------------------------

using ConicMatrix = std::array<std::array<FieldElem, 3>, 3>;

ConicMatrix conic_matrix(const PlaneCurve& conic); // symmetric, F = v^T M v
FieldElem conic_matrix_det(const ConicMatrix& m);
int conic_matrix_rank(const ConicMatrix& m);
bool conic_smooth(const PlaneCurve& conic);

// stereographic parametrization from a smooth base point on the conic;
// coordinates are degree <= 2 polynomials in one parameter, base at infinity
struct ConicParam {
    std::array<Poly, 3> coords; // in the variable "u"
    ProjPoint base;
    ProjPoint point_at(const FieldElem& u) const;
};

ConicParam parametrize_conic(const PlaneCurve& conic, const ProjPoint& base);
// deterministic search for a point over the conic's own tower
std::optional<ProjPoint> find_rational_point(const PlaneCurve& conic);

// line through two points / parametrization of a line
struct LineParam {
    std::array<Poly, 2> span_mix; // point(u) = p0 + u * p1, p1 at infinity
    ProjPoint p0, p1;
    ProjPoint point_at(const FieldElem& u) const;
};
LineParam parametrize_line(const std::array<FieldElem, 3>& line_coeffs);

// --- intersection profiles ---------------------------------------------

struct ProfileEntry {
    int multiplicity = 0;
    int degree = 1;                        // residue degree of the parameter value
    std::optional<ProjPoint> point;        // present when degree == 1
    std::optional<Poly> parameter_factor;  // marker for conjugate clusters (degree >= 2)
};

struct IntersectionProfile {
    std::vector<ProfileEntry> entries;
    int total = 0; // sum of multiplicity * degree = product of curve degrees
    bool all_even() const;
};

// pulls g back along the parametrization of c; fails on a shared component
IntersectionProfile intersection_profile(const ConicParam& c, const PlaneCurve& g);
IntersectionProfile line_profile(const LineParam& l, const PlaneCurve& g);

// --- conic pencils ------------------------------------------------------

// Multiplicity pattern of the intersection of two distinct smooth conics,
// decided from the pencil's degenerate members. No base point is needed.
enum class ConicPairType {
    FourTransverse,     // (1,1,1,1)
    SimpleTangency,     // (2,1,1)
    TwoTacnodes,        // (2,2)
    ThirdOrderContact,  // (3,1)
    FourthOrderContact, // (4)
};

struct PairSingularity {
    enum class Kind { Node, Tacnode, Other } kind;
    int multiplicity = 0;
    int degree = 1;
    std::optional<ProjPoint> point;
};

struct ConicPairClass {
    ConicPairType type;
    std::vector<PairSingularity> singularities;
    int point_count() const { return static_cast<int>(singularities.size()); }
};

ConicPairClass classify_conic_pair(const PlaneCurve& c, const PlaneCurve& d);

// pencil determinant det(lambda*A + B) as a cubic in "lambda"
Poly pencil_cubic(const PlaneCurve& c, const PlaneCurve& d);

// --- certificates -------------------------------------------------------

// every intersection multiplicity of conic with q even, and conic avoids the
// given singular points of q
bool tangency_certificate(const PlaneCurve& conic, const PlaneCurve& q,
                          const std::vector<ProjPoint>& sing_q);
// the same certificate decided through the pencil with the components of q
bool tangency_certificate_split(const PlaneCurve& conic, const PlaneCurve& q1,
                                const PlaneCurve& q2, const std::vector<ProjPoint>& sing_q);

enum class TripleCheck { NoCommonPoint, Inconclusive };
// certifies that the three curves have no common projective point (over the
// algebraic closure); sound but not complete
TripleCheck certify_no_common_point(const PlaneCurve& c1, const PlaneCurve& c2,
                                    const PlaneCurve& c3);

// point assumption for a split quartic q1*q2: the tangent line at p meets the
// quartic at two further distinct points, and no node tangent passes through p
bool verify_point_assumption(const PlaneCurve& q1, const PlaneCurve& q2,
                             const std::vector<ProjPoint>& nodes, const ProjPoint& p);

// --- generic symbolic helpers for parameter loci ------------------------

using MConicMatrix = std::array<std::array<MPoly, 3>, 3>;

MConicMatrix conic_matrix_symbolic(const MPoly& conic_tx); // affine (t, x) conic, params kept
MPoly mconic_det(const MConicMatrix& m);
// det(lambda*A + mu*B) coefficients [lambda^3, lambda^2 mu, lambda mu^2, mu^3]
std::array<MPoly, 4> pencil_cubic_symbolic(const MConicMatrix& a, const MConicMatrix& b);
MPoly binary_cubic_discriminant(const std::array<MPoly, 4>& c);
std::array<MPoly, 3> binary_cubic_hessian(const std::array<MPoly, 4>& c);

// affine conic g(t,x) -> homogeneous (T, X, Z)
MPoly homogenize_conic(const MPoly& g_tx);

} // namespace mwplet

#endif
