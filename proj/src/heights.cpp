#include "heights.hpp"

#include <algorithm>

#include "error.hpp"
#include "textform.hpp"

namespace mwplet {

namespace {

// v lies under the (possibly coarser) place w
bool place_under(const Place& v, const Place& w) {
    if (v == w) return true;
    if (v.is_infinity() || w.is_infinity()) return false;
    if (w.pi().degree() <= v.pi().degree()) return false;
    return poly_divmod(w.pi().with_var(v.pi().var()), v.pi()).second.is_zero();
}

const FiberPlace* fiber_under(const std::vector<FiberPlace>& fibers, const Place& v) {
    for (const auto& f : fibers)
        if (!f.place.is_infinity() && place_under(v, f.place)) return &f;
    return nullptr;
}

bool section_regular_at(const Section& p, const Place& v) {
    return !poly_mod(p.x().den(), v).is_zero();
}

// intersection multiplicity of the graphs of p and q above the finite place v
int local_multiplicity(const WeierstrassModel& model, const std::vector<FiberPlace>& fibers,
                       const Section& p, const Section& q, const Place& v) {
    bool preg = section_regular_at(p, v), qreg = section_regular_at(q, v);
    if (preg != qreg) return 0;
    if (!preg) {
        // both sections pass through the point at infinity of the fiber;
        // xi = x/y is a local coordinate there
        RatFunc d = p.x() / p.y() - q.x() / q.y();
        if (d.is_zero())
            fail(Err::Domain, "sections cannot be separated at a common pole " + v.str());
        int m = place_valuation(d, v);
        if (m <= 0) fail(Err::Internal, "pole-meeting with nonpositive contact order");
        return m;
    }
    auto xp = ratfunc_at(p.x(), v), xq = ratfunc_at(q.x(), v);
    auto yp = ratfunc_at(p.y(), v), yq = ratfunc_at(q.y(), v);
    if (!(*xp == *xq) || !(*yp == *yq)) return 0;
    bool y_zero = yp->is_zero();
    if (const FiberPlace* f = fiber_under(fibers, v)) {
        if (y_zero) {
            if (!f->node)
                fail(Err::UnsupportedPlace,
                     "cannot compare with the fiber node at " + v.str());
            if (*xp == Residue::of_field_elem(v, f->node->first))
                fail(Err::NodeMeeting,
                     "sections meet at the node of the fiber above " + v.str() +
                         "; multiplicity needs blow-up data");
        }
    }
    if (!y_zero) return place_valuation(p.x() - q.x(), v);
    return place_valuation(p.y() - q.y(), v);
}

} // namespace

int zero_intersection_from_x(const RatFunc& x) {
    if (x.is_zero()) fail(Err::Domain, "zero x-coordinate");
    Tower k = x.tower();
    int total = 0;
    if (x.den().degree() > 0) {
        for (const auto& [place, mult] : factor_into_places(x.den(), k)) {
            if (mult % 2)
                fail(Err::Domain, "odd pole order " + std::to_string(mult) + " at " +
                                      place.str() + "; not an x-coordinate of a section");
            total += mult * place.degree();
        }
    }
    RatFunc chart = x.infinity_chart(2, "u");
    int ord_inf = chart.is_zero() ? 1 : place_valuation(chart, Place::at_root(FieldElem(0), "u"));
    if (ord_inf < 0) {
        if ((-ord_inf) % 2)
            fail(Err::Domain, "odd pole order at infinity; not an x-coordinate of a section");
        total += -ord_inf;
    }
    return total / 2;
}

int zero_section_intersection(const WeierstrassModel& model, const Section& p) {
    (void)model;
    if (p.is_zero()) fail(Err::Domain, "s.O is defined for nonzero sections");
    return zero_intersection_from_x(p.x());
}

Incidence component_incidence(const WeierstrassModel& model, const Section& p,
                              const FiberPlace& fp) {
    if (p.is_zero()) fail(Err::Domain, "incidence of the zero section is trivial");
    if (fp.n >= 3)
        fail(Err::UnsupportedFiber,
             "component index on I_n with n >= 3 is not determined by first-order data");
    if (fp.n == 1) return Incidence::Identity;
    if (fp.place.is_infinity()) {
        WeierstrassModel chart = model.infinity_chart_model();
        Section pc = section_infinity_chart(chart, p);
        FiberPlace f0 = fp;
        f0.place = Place::at_root(FieldElem(0), "u");
        return component_incidence(chart, pc, f0);
    }
    const Place& v = fp.place;
    if (!section_regular_at(p, v)) return Incidence::Identity; // passes through the O-point
    if (!fp.node)
        fail(Err::UnsupportedPlace, "fiber node at " + v.str() + " is outside the tower");
    auto x0 = ratfunc_at(p.x(), v), y0 = ratfunc_at(p.y(), v);
    if (y0->is_zero() && *x0 == Residue::of_field_elem(v, fp.node->first))
        return Incidence::NonIdentity;
    return Incidence::Identity;
}

int pair_intersection(const WeierstrassModel& model, const Section& p, const Section& q) {
    if (p.is_zero() || q.is_zero())
        fail(Err::Domain, "pair_intersection expects nonzero sections");
    if (p == q) fail(Err::Domain, "coincident sections");
    Tower k = Tower::unite(Tower::unite(p.tower(), q.tower()), model.tower());
    std::vector<FiberPlace> fibers = model.classify_fibers();
    std::vector<Place> candidates;
    auto add_places = [&](const Poly& f) {
        if (f.degree() < 1) return;
        for (const auto& [place, mult] : factor_into_places(f, k)) {
            bool seen = false;
            for (const auto& c : candidates) seen = seen || c == place;
            if (!seen) candidates.push_back(place);
        }
    };
    RatFunc xdiff = p.x() - q.x();
    if (!xdiff.is_zero())
        add_places(xdiff.num());
    else
        add_places((p.y() - q.y()).num());
    add_places(poly_gcd(p.x().den(), q.x().den()));
    int total = 0;
    for (const auto& v : candidates)
        total += local_multiplicity(model, fibers, p, q, v) * v.degree();
    // the place at infinity, in the u-chart
    WeierstrassModel chart = model.infinity_chart_model();
    Section pc = section_infinity_chart(chart, p);
    Section qc = section_infinity_chart(chart, q);
    total += local_multiplicity(chart, chart.classify_fibers(), pc, qc,
                                Place::at_root(FieldElem(0), "u"));
    return total;
}

HeightReport height_pairing(const WeierstrassModel& model, const Section& p, const Section& q) {
    if (p.is_zero() || q.is_zero()) fail(Err::Domain, "height pairing expects nonzero sections");
    std::vector<FiberPlace> fibers = model.classify_fibers();
    HeightReport rep;
    int chi = model.euler_char();
    bool diagonal = (p == q);
    if (diagonal) {
        int po = zero_section_intersection(model, p);
        rep.chi_term = 2 * chi;
        rep.zero_terms = 2 * po;
        rep.cross_term = 0;
    } else {
        rep.chi_term = chi;
        rep.zero_terms = zero_section_intersection(model, p) +
                         zero_section_intersection(model, q);
        rep.cross_term = pair_intersection(model, p, q);
    }
    Rational contr_total;
    for (const auto& f : fibers) {
        if (f.n != 2) continue; // I_1 fibers are irreducible
        bool pn = component_incidence(model, p, f) == Incidence::NonIdentity;
        bool qn = diagonal ? pn : component_incidence(model, q, f) == Incidence::NonIdentity;
        if (pn && qn) {
            // Contr_v for I_2: (-A_v)^{-1} = 1/2
            Rational c = Rational(1, 2) * f.residue_degree;
            rep.contributions.emplace_back(f, c);
            contr_total += c;
        }
    }
    rep.value = rep.chi_term + rep.zero_terms - rep.cross_term - contr_total;
    return rep;
}

NarrowCoordinates narrow_coordinates(const WeierstrassModel& model, const Section& p,
                                     const std::array<Section, 3>& basis) {
    Rational g[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            g[i][j] = g[j][i] = height_pairing(model, basis[i], basis[j]).value;
    Rational rhs[3];
    for (int i = 0; i < 3; ++i) rhs[i] = height_pairing(model, p, basis[i]).value;
    auto det3 = [](Rational m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    Rational d = det3(g);
    if (d == 0) fail(Err::Domain, "singular Gram matrix");
    NarrowCoordinates out;
    out.integral = true;
    for (int col = 0; col < 3; ++col) {
        Rational m[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = (j == col) ? rhs[i] : g[i][j];
        out.coords[col] = det3(m) / d;
        if (out.coords[col].get_den() != 1) out.integral = false;
    }
    return out;
}

} // namespace mwplet
