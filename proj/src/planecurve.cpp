#include "planecurve.hpp"

#include <algorithm>

#include "error.hpp"
#include "textform.hpp"

namespace mwplet {

bool proj_eq(const ProjPoint& a, const ProjPoint& b) {
    // rank of the 2x3 coordinate matrix is 1 iff the points agree
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    return true;
}

ProjPoint proj_normalized(const ProjPoint& p) {
    for (int i = 0; i < 3; ++i) {
        if (!p[i].is_zero()) {
            FieldElem inv = p[i].inverse();
            return {p[0] * inv, p[1] * inv, p[2] * inv};
        }
    }
    fail(Err::Domain, "zero vector is not a projective point");
}

std::string proj_string(const ProjPoint& p) {
    ProjPoint n = proj_normalized(p);
    return "[" + fieldelem_string(n[0]) + ":" + fieldelem_string(n[1]) + ":" +
           fieldelem_string(n[2]) + "]";
}

PlaneCurve::PlaneCurve(const MPoly& f) : f_(f.primitive_normalized()) {
    if (f_.is_zero()) fail(Err::Domain, "zero polynomial does not define a curve");
    for (const auto& v : f_.vars())
        if (v != "T" && v != "X" && v != "Z")
            fail(Err::Domain, "plane curves live in (T, X, Z); found variable " + v);
    if (!f_.is_homogeneous()) fail(Err::Domain, "curve polynomial must be homogeneous");
    degree_ = f_.total_degree();
}

FieldElem PlaneCurve::eval(const ProjPoint& p) const {
    return f_.eval({{"T", p[0]}, {"X", p[1]}, {"Z", p[2]}});
}

std::array<FieldElem, 3> PlaneCurve::gradient(const ProjPoint& p) const {
    std::map<std::string, FieldElem> at = {{"T", p[0]}, {"X", p[1]}, {"Z", p[2]}};
    return {f_.derivative("T").eval(at), f_.derivative("X").eval(at),
            f_.derivative("Z").eval(at)};
}

std::string PlaneCurve::str() const { return canonical_string(f_); }

// --- conic helpers -----------------------------------------------------

ConicMatrix conic_matrix(const PlaneCurve& conic) {
    if (conic.degree() != 2) fail(Err::Domain, "conic expected, degree " +
                                                   std::to_string(conic.degree()));
    const MPoly& f = conic.poly();
    FieldElem half(Rational(1, 2));
    auto c = [&](int et, int ex, int ez) {
        return f.coeff_of("T", et).coeff_of("X", ex).coeff_of("Z", ez).constant_value();
    };
    FieldElem tt = c(2, 0, 0), xx = c(0, 2, 0), zz = c(0, 0, 2);
    FieldElem tx = c(1, 1, 0) * half, tz = c(1, 0, 1) * half, xz = c(0, 1, 1) * half;
    return {{{tt, tx, tz}, {tx, xx, xz}, {tz, xz, zz}}};
}

FieldElem conic_matrix_det(const ConicMatrix& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

int conic_matrix_rank(const ConicMatrix& m) {
    std::array<std::array<FieldElem, 3>, 3> a = m;
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int pivot = -1;
        for (int row = rank; row < 3; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        FieldElem inv = a[rank][col].inverse();
        for (int row = rank + 1; row < 3; ++row) {
            FieldElem fac = a[row][col] * inv;
            for (int j = col; j < 3; ++j) a[row][j] = a[row][j] - fac * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool conic_smooth(const PlaneCurve& conic) {
    return !conic_matrix_det(conic_matrix(conic)).is_zero();
}

namespace {

FieldElem bilinear(const ConicMatrix& m, const ProjPoint& a, const ProjPoint& b) {
    FieldElem out(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out += a[i] * m[i][j] * b[j];
    return out;
}

// two distinct points spanning the line l0*T + l1*X + l2*Z = 0
std::pair<ProjPoint, ProjPoint> line_basis(const std::array<FieldElem, 3>& l) {
    if (!l[0].is_zero())
        return {{-l[1], l[0], FieldElem(0)}, {-l[2], FieldElem(0), l[0]}};
    if (!l[1].is_zero())
        return {{l[1], -l[0], FieldElem(0)}, {FieldElem(0), -l[2], l[1]}};
    if (!l[2].is_zero())
        return {{l[2], FieldElem(0), -l[0]}, {FieldElem(0), l[2], -l[1]}};
    fail(Err::Domain, "zero line");
}

} // namespace

ProjPoint ConicParam::point_at(const FieldElem& u) const {
    return {coords[0].eval(u), coords[1].eval(u), coords[2].eval(u)};
}

ConicParam parametrize_conic(const PlaneCurve& conic, const ProjPoint& base) {
    if (!conic.contains(base))
        fail(Err::Domain, "base point " + proj_string(base) + " is not on the conic");
    if (!conic_smooth(conic)) fail(Err::Domain, "conic is not smooth");
    ConicMatrix m = conic_matrix(conic);
    // tangent line at the base point
    std::array<FieldElem, 3> tangent;
    for (int i = 0; i < 3; ++i)
        tangent[i] = m[i][0] * base[0] + m[i][1] * base[1] + m[i][2] * base[2];
    auto [t1, t2] = line_basis(tangent);
    ProjPoint q = proj_eq(t1, base) ? t2 : t1; // on the tangent, distinct from base
    // a point off the tangent line
    ProjPoint p{};
    bool found = false;
    const ProjPoint candidates[3] = {{FieldElem(1), FieldElem(0), FieldElem(0)},
                                     {FieldElem(0), FieldElem(1), FieldElem(0)},
                                     {FieldElem(0), FieldElem(0), FieldElem(1)}};
    for (const auto& cand : candidates) {
        FieldElem v = tangent[0] * cand[0] + tangent[1] * cand[1] + tangent[2] * cand[2];
        if (!v.is_zero()) {
            p = cand;
            found = true;
            break;
        }
    }
    if (!found) fail(Err::Internal, "no coordinate point off the tangent line");
    // m(u) = p + u q; point(u) = C(m(u)) * base - 2 B(base, m(u)) * m(u)
    FieldElem cp = bilinear(m, p, p), cq = bilinear(m, q, q), cpq = bilinear(m, p, q);
    FieldElem bp = bilinear(m, base, p); // B(base, q) = 0 because q is on the tangent
    ConicParam out;
    out.base = base;
    for (int i = 0; i < 3; ++i) {
        // coefficient of u^0, u^1, u^2 in coordinate i
        FieldElem c0 = cp * base[i] - FieldElem(2) * bp * p[i];
        FieldElem c1 = FieldElem(2) * cpq * base[i] - FieldElem(2) * bp * q[i];
        FieldElem c2 = cq * base[i];
        out.coords[i] = Poly::from_coeffs({c0, c1, c2}, "u");
    }
    // sanity: the image satisfies the conic identically
    MPoly check;
    {
        MPoly sub = conic.poly();
        sub = sub.substitute("T", MPoly::from_poly(out.coords[0]));
        sub = sub.substitute("X", MPoly::from_poly(out.coords[1]));
        sub = sub.substitute("Z", MPoly::from_poly(out.coords[2]));
        check = sub;
    }
    if (!check.is_zero()) fail(Err::Internal, "parametrization does not satisfy the conic");
    return out;
}

std::optional<ProjPoint> find_rational_point(const PlaneCurve& conic) {
    if (conic.degree() != 2) fail(Err::Domain, "conic expected");
    const ProjPoint simple[5] = {{FieldElem(0), FieldElem(1), FieldElem(0)},
                                 {FieldElem(1), FieldElem(0), FieldElem(0)},
                                 {FieldElem(0), FieldElem(0), FieldElem(1)},
                                 {FieldElem(1), FieldElem(1), FieldElem(1)},
                                 {FieldElem(1), FieldElem(-1), FieldElem(1)}};
    for (const auto& p : simple)
        if (conic.contains(p)) return p;
    // intersect with the coordinate lines; a quadratic with a tower root
    const char* names[3] = {"T", "X", "Z"};
    for (int dropped = 0; dropped < 3; ++dropped) {
        MPoly r = conic.poly().substitute(names[dropped], FieldElem(0));
        int i = (dropped + 1) % 3, j = (dropped + 2) % 3; // surviving coordinates
        // r = a wi^2 + b wi wj + c wj^2
        auto coeff = [&](int ei, int ej) {
            return r.coeff_of(names[i], ei).coeff_of(names[j], ej).constant_value();
        };
        FieldElem a = coeff(2, 0), b = coeff(1, 1), c = coeff(0, 2);
        auto mk = [&](const FieldElem& wi, const FieldElem& wj) {
            ProjPoint p{FieldElem(0), FieldElem(0), FieldElem(0)};
            p[dropped] = FieldElem(0);
            p[i] = wi;
            p[j] = wj;
            return p;
        };
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue; // line is a component
        if (a.is_zero()) return mk(FieldElem(1), FieldElem(0));
        FieldElem disc = b * b - FieldElem(4) * a * c;
        Tower k = Tower::unite(disc.tower(), conic.tower());
        if (auto s = sqrt_in_tower(disc.embedded(k))) {
            FieldElem wi = (-b + *s) * FieldElem(Rational(1, 2));
            return mk(wi, a);
        }
    }
    return std::nullopt;
}

ProjPoint LineParam::point_at(const FieldElem& u) const {
    return {p0[0] + u * p1[0], p0[1] + u * p1[1], p0[2] + u * p1[2]};
}

LineParam parametrize_line(const std::array<FieldElem, 3>& line_coeffs) {
    auto [p0, p1] = line_basis(line_coeffs);
    LineParam out;
    out.p0 = p0;
    out.p1 = p1;
    return out;
}

// --- intersection profiles ---------------------------------------------

bool IntersectionProfile::all_even() const {
    for (const auto& e : entries)
        if (e.multiplicity % 2) return false;
    return true;
}

namespace {

// common engine: coordinates of the sweep as polynomials in u, plus the point
// reached at u = infinity with its expected total degree
IntersectionProfile pullback_profile(const std::array<Poly, 3>& coords,
                                     const ProjPoint& at_infinity, const PlaneCurve& g,
                                     int expected_total) {
    MPoly sub = g.poly();
    sub = sub.substitute("T", MPoly::from_poly(coords[0]));
    sub = sub.substitute("X", MPoly::from_poly(coords[1]));
    sub = sub.substitute("Z", MPoly::from_poly(coords[2]));
    if (sub.is_zero())
        fail(Err::Degenerate, "curves share a component; intersection profile is undefined");
    Poly pull = sub.to_poly("u");
    Tower k = Tower::unite(pull.tower(), g.tower());
    IntersectionProfile out;
    int inf_mult = expected_total - pull.degree();
    if (inf_mult > 0) {
        ProfileEntry e;
        e.multiplicity = inf_mult;
        e.degree = 1;
        e.point = proj_normalized(at_infinity);
        out.entries.push_back(e);
    }
    for (const auto& [sf, mult] : poly_squarefree_decomposition(pull)) {
        auto [roots, residual] = tower_roots(sf, k);
        for (const auto& r : roots) {
            ProfileEntry e;
            e.multiplicity = mult;
            e.degree = 1;
            e.point = proj_normalized(
                {coords[0].eval(r), coords[1].eval(r), coords[2].eval(r)});
            out.entries.push_back(e);
        }
        if (residual.degree() > 0) {
            ProfileEntry e;
            e.multiplicity = mult;
            e.degree = residual.degree();
            e.parameter_factor = residual;
            out.entries.push_back(e);
        }
    }
    for (const auto& e : out.entries) out.total += e.multiplicity * e.degree;
    if (out.total != expected_total)
        fail(Err::Internal, "profile total does not match the degree product");
    return out;
}

} // namespace

IntersectionProfile intersection_profile(const ConicParam& c, const PlaneCurve& g) {
    return pullback_profile(c.coords, c.base, g, 2 * g.degree());
}

IntersectionProfile line_profile(const LineParam& l, const PlaneCurve& g) {
    std::array<Poly, 3> coords;
    for (int i = 0; i < 3; ++i)
        coords[i] = Poly::from_coeffs({l.p0[i], l.p1[i]}, "u");
    return pullback_profile(coords, l.p1, g, g.degree());
}

// --- conic pencils ------------------------------------------------------

Poly pencil_cubic(const PlaneCurve& c, const PlaneCurve& d) {
    ConicMatrix a = conic_matrix(c), b = conic_matrix(d);
    // det(lambda*A + B) as a cubic in lambda
    MPoly lam = MPoly::variable("lambda");
    std::array<std::array<MPoly, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = lam * MPoly(a[i][j]) + MPoly(b[i][j]);
    MPoly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det.to_poly("lambda");
}

namespace {

// the degenerate pencil member lambda0*C + D as a curve
PlaneCurve pencil_member(const PlaneCurve& c, const PlaneCurve& d, const FieldElem& lambda0) {
    MPoly f = c.poly() * lambda0 + d.poly();
    return PlaneCurve(f);
}

// the double line of a rank-1 conic
std::array<FieldElem, 3> double_line_of(const ConicMatrix& m) {
    for (int i = 0; i < 3; ++i)
        if (!m[i][i].is_zero() || !m[i][(i + 1) % 3].is_zero() ||
            !m[i][(i + 2) % 3].is_zero())
            return {m[i][0], m[i][1], m[i][2]};
    fail(Err::Internal, "zero matrix has no double line");
}

// the two (possibly conjugate) points of line ^ conic, reported as profile
// style singularities with the given kind and multiplicity
std::vector<PairSingularity> line_conic_points(const std::array<FieldElem, 3>& line,
                                               const PlaneCurve& conic,
                                               PairSingularity::Kind kind, int mult) {
    LineParam lp = parametrize_line(line);
    std::array<Poly, 3> coords;
    for (int i = 0; i < 3; ++i) coords[i] = Poly::from_coeffs({lp.p0[i], lp.p1[i]}, "u");
    MPoly sub = conic.poly();
    sub = sub.substitute("T", MPoly::from_poly(coords[0]));
    sub = sub.substitute("X", MPoly::from_poly(coords[1]));
    sub = sub.substitute("Z", MPoly::from_poly(coords[2]));
    Poly pull = sub.to_poly("u");
    std::vector<PairSingularity> out;
    int expected = 2;
    int inf_mult = expected - pull.degree();
    if (inf_mult > 0) {
        PairSingularity s;
        s.kind = kind;
        s.multiplicity = mult;
        s.point = proj_normalized(lp.p1);
        out.push_back(s);
    }
    Tower k = Tower::unite(pull.tower(), conic.tower());
    auto [roots, residual] = tower_roots(poly_squarefree_part(pull), k);
    for (const auto& r : roots) {
        PairSingularity s;
        s.kind = kind;
        s.multiplicity = mult;
        s.point = proj_normalized(lp.point_at(r));
        out.push_back(s);
    }
    if (residual.degree() > 0) {
        PairSingularity s;
        s.kind = kind;
        s.multiplicity = mult;
        s.degree = residual.degree();
        out.push_back(s);
        if (residual.degree() == 2) out.push_back(s); // conjugate partner
    }
    return out;
}

} // namespace

ConicPairClass classify_conic_pair(const PlaneCurve& c, const PlaneCurve& d) {
    if (c.degree() != 2 || d.degree() != 2) fail(Err::Domain, "conic pair expected");
    if (c == d) fail(Err::Degenerate, "coincident conics share a component");
    if (!conic_smooth(c) || !conic_smooth(d))
        fail(Err::Domain, "pair classification expects smooth conics");
    Poly cubic = pencil_cubic(c, d); // leading coefficient det(C) != 0
    Poly g = poly_gcd(cubic, cubic.derivative());
    ConicPairClass out;
    if (g.degree() == 0) {
        out.type = ConicPairType::FourTransverse;
        // four transverse points; report them through a parametrization when a
        // base point over the tower exists, anonymously otherwise
        if (auto base = find_rational_point(c)) {
            IntersectionProfile prof = intersection_profile(parametrize_conic(c, *base), d);
            for (const auto& e : prof.entries) {
                PairSingularity s;
                s.kind = PairSingularity::Kind::Node;
                s.multiplicity = 1;
                s.degree = e.degree;
                s.point = e.point;
                for (int i = 0; i < e.degree; ++i) out.singularities.push_back(s);
            }
        } else {
            for (int i = 0; i < 4; ++i)
                out.singularities.push_back(
                    {PairSingularity::Kind::Node, 1, 1, std::nullopt});
        }
        return out;
    }
    // multiple roots of the pencil cubic are rational over the tower
    FieldElem lambda0;
    bool triple = false;
    if (g.degree() == 1) {
        lambda0 = -g.monic().coeff(0);
    } else {
        Poly sf = poly_squarefree_part(g);
        if (sf.degree() != 1) fail(Err::Internal, "unexpected pencil gcd structure");
        lambda0 = -sf.monic().coeff(0);
        triple = true;
    }
    PlaneCurve member = pencil_member(c, d, lambda0);
    int rank = conic_matrix_rank(conic_matrix(member));
    if (!triple) {
        if (rank == 2) {
            out.type = ConicPairType::SimpleTangency;
            // tangency point = the singular point of the rank-2 member; the
            // two residual transverse points are left anonymous
            PairSingularity tac;
            tac.kind = PairSingularity::Kind::Tacnode;
            tac.multiplicity = 2;
            out.singularities.push_back(tac);
            out.singularities.push_back({PairSingularity::Kind::Node, 1, 1, std::nullopt});
            out.singularities.push_back({PairSingularity::Kind::Node, 1, 1, std::nullopt});
        } else {
            out.type = ConicPairType::TwoTacnodes;
            auto pts = line_conic_points(double_line_of(conic_matrix(member)), c,
                                         PairSingularity::Kind::Tacnode, 2);
            out.singularities = pts;
        }
    } else {
        if (rank == 2) {
            out.type = ConicPairType::ThirdOrderContact;
            out.singularities.push_back({PairSingularity::Kind::Other, 3, 1, std::nullopt});
            out.singularities.push_back({PairSingularity::Kind::Node, 1, 1, std::nullopt});
        } else {
            out.type = ConicPairType::FourthOrderContact;
            auto pts = line_conic_points(double_line_of(conic_matrix(member)), c,
                                         PairSingularity::Kind::Other, 4);
            // fourth-order contact happens at a single point
            if (!pts.empty()) pts.resize(1);
            out.singularities = pts;
        }
    }
    return out;
}

// --- certificates -------------------------------------------------------

bool tangency_certificate(const PlaneCurve& conic, const PlaneCurve& q,
                          const std::vector<ProjPoint>& sing_q) {
    for (const auto& s : sing_q)
        if (conic.contains(s)) return false;
    auto base = find_rational_point(conic);
    if (!base) fail(Err::UnsupportedPlace, "no tower point found to parametrize the conic");
    IntersectionProfile prof = intersection_profile(parametrize_conic(conic, *base), q);
    return prof.all_even();
}

bool tangency_certificate_split(const PlaneCurve& conic, const PlaneCurve& q1,
                                const PlaneCurve& q2, const std::vector<ProjPoint>& sing_q) {
    for (const auto& s : sing_q)
        if (conic.contains(s)) return false;
    // away from Sing(q1*q2) the components are disjoint, so per-component
    // evenness is equivalent to evenness on the product
    for (const PlaneCurve* comp : {&q1, &q2}) {
        ConicPairClass cls = classify_conic_pair(conic, *comp);
        if (cls.type != ConicPairType::TwoTacnodes &&
            cls.type != ConicPairType::FourthOrderContact)
            return false;
    }
    return true;
}

namespace {

// conjugate every coefficient under the which-th automorphism of the tower k
MPoly conj_poly(const MPoly& p, const Tower& k, int which) {
    MPoly out;
    for (const auto& [e, c] : p.terms()) {
        MPoly term(c.embedded(k).conj(which));
        for (size_t i = 0; i < p.vars().size(); ++i)
            if (e[i] > 0) term *= MPoly::variable(p.vars()[i]).pow(e[i]);
        out += term;
    }
    return out;
}

// coefficient-wise tower conjugations multiplied out: a rational-coefficient
// multiple of f vanishing on all conjugates of its zero set
MPoly rational_norm(const MPoly& f) {
    Tower k = f.tower();
    if (k.radicals() == 0) return f;
    MPoly out = f * conj_poly(f, k, 1);
    if (k.radicals() == 2) out = out * conj_poly(out, k, 2);
    if (out.tower().radicals() != 0)
        fail(Err::Internal, "norm did not land in rational coefficients");
    return out;
}

// gcd degree of two binary forms in (T, Z); 0 means no common projective root
int binary_form_common_degree(const MPoly& f, const MPoly& g) {
    auto split = [](const MPoly& p) {
        // p = Z^zpow * (univariate in T of degree dT, scaled by powers of Z)
        int dT = std::max(p.degree_in("T"), 0);
        int d = p.total_degree();
        int zpow = d - dT;
        std::vector<FieldElem> coeffs(dT + 1, FieldElem(0));
        for (int i = 0; i <= dT; ++i)
            coeffs[i] = p.coeff_of("T", i).coeff_of("Z", d - i).constant_value();
        return std::make_pair(zpow, Poly::from_coeffs(coeffs, "T"));
    };
    auto [za, fa] = split(f);
    auto [zb, fb] = split(g);
    int common = std::min(za, zb);
    Poly gc = poly_gcd(fa, fb);
    return common + std::max(gc.degree(), 0);
}

MPoly shear_apply(const MPoly& f, int which) {
    MPoly T = MPoly::variable("T"), X = MPoly::variable("X"), Z = MPoly::variable("Z");
    MPoly out = f;
    switch (which) {
    case 0: break;
    case 1: out = out.substitute("X", X + T); break;
    case 2: out = out.substitute("X", X + Z); break;
    case 3: out = out.substitute("X", X + T + Z); break;
    case 4: {
        // swap T and X
        out = out.substitute("X", MPoly::variable("v"));
        out = out.substitute("T", X);
        out = out.substitute("v", T);
        break;
    }
    case 5: out = out.substitute("X", X + T * FieldElem(2) + Z * FieldElem(3)); break;
    case 6: out = out.substitute("X", X - T); break;
    case 7: out = out.substitute("X", X + T * FieldElem(5) + Z * FieldElem(2)); break;
    default: break;
    }
    return out;
}

} // namespace

TripleCheck certify_no_common_point(const PlaneCurve& c1, const PlaneCurve& c2,
                                    const PlaneCurve& c3) {
    for (int shear = 0; shear < 8; ++shear) {
        MPoly f1 = shear_apply(c1.poly(), shear);
        MPoly f2 = shear_apply(c2.poly(), shear);
        MPoly f3 = shear_apply(c3.poly(), shear);
        bool ok = true;
        for (const MPoly* f : {&f1, &f2, &f3}) {
            // the projection center [0:1:0] must avoid the curve, i.e. the
            // top X-coefficient must be a nonzero constant
            MPoly top = f->coeff_of("X", f->total_degree());
            if (!top.is_constant() || top.is_zero()) ok = false;
        }
        if (!ok) continue;
        MPoly r12 = resultant_eliminate(f1, f2, "X");
        MPoly r13 = resultant_eliminate(f1, f3, "X");
        if (r12.is_zero() || r13.is_zero()) continue;
        bool representable = true;
        try {
            (void)Tower::unite(r12.tower(), r13.tower());
        } catch (const MwpError&) {
            representable = false;
        }
        int common = representable
                         ? binary_form_common_degree(r12, r13)
                         : binary_form_common_degree(rational_norm(r12), rational_norm(r13));
        if (common == 0) return TripleCheck::NoCommonPoint;
    }
    return TripleCheck::Inconclusive;
}

bool verify_point_assumption(const PlaneCurve& q1, const PlaneCurve& q2,
                             const std::vector<ProjPoint>& nodes, const ProjPoint& p) {
    bool on1 = q1.contains(p), on2 = q2.contains(p);
    if (on1 && on2) fail(Err::Domain, "point is a singular point of the quartic");
    if (!on1 && !on2) fail(Err::Domain, "point is not on the quartic");
    const PlaneCurve& comp = on1 ? q1 : q2;
    std::array<FieldElem, 3> tangent = comp.gradient(p);
    if (tangent[0].is_zero() && tangent[1].is_zero() && tangent[2].is_zero())
        fail(Err::Domain, "point is singular on its component");
    // profile of the tangent line against the full quartic must be {2,1,1}
    LineParam lp = parametrize_line(tangent);
    PlaneCurve quartic(q1.poly() * q2.poly());
    IntersectionProfile prof = line_profile(lp, quartic);
    std::vector<int> mults;
    for (const auto& e : prof.entries)
        for (int i = 0; i < e.degree; ++i) mults.push_back(e.multiplicity);
    std::sort(mults.begin(), mults.end());
    if (!(mults == std::vector<int>{1, 1, 2})) return false;
    // no tangent line at a node passes through p
    for (const auto& nd : nodes) {
        for (const PlaneCurve* c : {&q1, &q2}) {
            std::array<FieldElem, 3> ln = c->gradient(nd);
            FieldElem v = ln[0] * p[0] + ln[1] * p[1] + ln[2] * p[2];
            if (v.is_zero()) return false;
        }
    }
    return true;
}

// --- generic symbolic helpers -------------------------------------------

MConicMatrix conic_matrix_symbolic(const MPoly& g_tx) {
    MPoly h = homogenize_conic(g_tx);
    FieldElem half(Rational(1, 2));
    auto c = [&](int et, int ex, int ez) {
        return h.coeff_of("T", et).coeff_of("X", ex).coeff_of("Z", ez);
    };
    MConicMatrix m;
    m[0][0] = c(2, 0, 0);
    m[1][1] = c(0, 2, 0);
    m[2][2] = c(0, 0, 2);
    m[0][1] = m[1][0] = c(1, 1, 0) * half;
    m[0][2] = m[2][0] = c(1, 0, 1) * half;
    m[1][2] = m[2][1] = c(0, 1, 1) * half;
    return m;
}

MPoly mconic_det(const MConicMatrix& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<MPoly, 4> pencil_cubic_symbolic(const MConicMatrix& a, const MConicMatrix& b) {
    MPoly lam = MPoly::variable("lambda"), mu = MPoly::variable("mu");
    std::array<std::array<MPoly, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = lam * a[i][j] + mu * b[i][j];
    MPoly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    std::array<MPoly, 4> out;
    for (int i = 0; i <= 3; ++i)
        out[i] = det.coeff_of("lambda", 3 - i).coeff_of("mu", i);
    return out;
}

MPoly binary_cubic_discriminant(const std::array<MPoly, 4>& c) {
    const MPoly &a = c[0], &b = c[1], &cc = c[2], &d = c[3];
    return a * b * cc * d * FieldElem(18) - b.pow(3) * d * FieldElem(4) +
           b.pow(2) * cc.pow(2) - a * cc.pow(3) * FieldElem(4) -
           a.pow(2) * d.pow(2) * FieldElem(27);
}

std::array<MPoly, 3> binary_cubic_hessian(const std::array<MPoly, 4>& c) {
    const MPoly &a = c[0], &b = c[1], &cc = c[2], &d = c[3];
    return {a * cc * FieldElem(3) - b * b, a * d * FieldElem(9) - b * cc,
            b * d * FieldElem(3) - cc * cc};
}

MPoly homogenize_conic(const MPoly& g_tx) {
    // t = T/Z, x = X/Z, cleared by Z^2
    MPoly T = MPoly::variable("T"), X = MPoly::variable("X"), Z = MPoly::variable("Z");
    MPoly out;
    for (int dt = 0; dt <= 2; ++dt)
        for (int dx = 0; dx + dt <= 2; ++dx) {
            // coefficients may carry a family parameter; only t and x homogenize
            MPoly c = g_tx.coeff_of("t", dt).coeff_of("x", dx);
            if (c.is_zero()) continue;
            out += T.pow(dt) * X.pow(dx) * Z.pow(2 - dt - dx) * c;
        }
    // reject anything of higher affine degree
    MPoly rest = g_tx;
    for (int dt = 0; dt <= 2; ++dt)
        for (int dx = 0; dx + dt <= 2; ++dx)
            rest -= g_tx.coeff_of("t", dt).coeff_of("x", dx) *
                    MPoly::variable("t").pow(dt) * MPoly::variable("x").pow(dx);
    if (!rest.is_zero()) fail(Err::Domain, "affine polynomial has degree above two");
    return out;
}

} // namespace mwplet
