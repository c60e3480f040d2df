#include "places.hpp"

#include <algorithm>

#include "error.hpp"
#include "textform.hpp"

namespace mwplet {

Place Place::infinity() {
    Place p;
    p.infinite_ = true;
    return p;
}

Place Place::finite(const Poly& monic_irreducible) {
    if (monic_irreducible.degree() < 1) fail(Err::Domain, "place polynomial must be nonconstant");
    if (!(monic_irreducible.leading() == FieldElem(1)))
        fail(Err::Domain, "place polynomial must be monic");
    if (monic_irreducible.degree() > 2)
        fail(Err::UnsupportedPlace,
             "places of degree >= 3 are not supported: " + monic_irreducible.str());
    Place p;
    p.infinite_ = false;
    p.pi_ = monic_irreducible;
    return p;
}

Place Place::at_root(const FieldElem& root, const std::string& var) {
    return finite(Poly::variable(var) - Poly(root, var));
}

const Poly& Place::pi() const {
    if (infinite_) fail(Err::Domain, "infinite place has no polynomial");
    return pi_;
}

FieldElem Place::root() const {
    if (infinite_ || pi_.degree() != 1) fail(Err::Domain, "place is not a finite rational point");
    return -pi_.coeff(0);
}

bool Place::operator==(const Place& o) const {
    if (infinite_ != o.infinite_) return false;
    return infinite_ || pi_ == o.pi_;
}

std::string Place::str() const { return infinite_ ? "inf" : pi_.str(); }

Residue::Residue(const Place& place, const Poly& value) : place_(place) {
    if (place.is_infinity()) fail(Err::Domain, "residues live at finite places");
    rep_ = poly_divmod(value.with_var(place.pi().var()), place.pi()).second;
}

Residue Residue::of_field_elem(const Place& place, const FieldElem& c) {
    return Residue(place, Poly(c, place.pi().var()));
}

std::optional<FieldElem> Residue::as_field_elem() const {
    if (rep_.degree() > 0) return std::nullopt;
    return rep_.coeff(0);
}

Residue Residue::operator-() const { return Residue(place_, -rep_); }
Residue Residue::operator+(const Residue& o) const { return Residue(place_, rep_ + o.rep_); }
Residue Residue::operator-(const Residue& o) const { return Residue(place_, rep_ - o.rep_); }
Residue Residue::operator*(const Residue& o) const { return Residue(place_, rep_ * o.rep_); }

bool Residue::operator==(const Residue& o) const {
    return place_ == o.place_ && rep_ == o.rep_;
}

Residue Residue::inverse() const {
    if (is_zero()) fail(Err::Domain, "inversion of zero residue");
    // extended Euclid: u*rep + v*pi = g, g constant since pi is irreducible
    Poly r0 = place_.pi(), r1 = rep_;
    Poly u0(FieldElem(0), r0.var()), u1(FieldElem(1), r0.var());
    while (r1.degree() > 0) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly u2 = u0 - q * u1;
        u0 = u1;
        u1 = u2;
        if (r1.is_zero()) fail(Err::Internal, "place polynomial is reducible");
    }
    return Residue(place_, u1 * r1.coeff(0).inverse());
}

int poly_ord_at(const Poly& p, const Place& v) {
    if (p.is_zero()) fail(Err::Domain, "valuation of zero");
    if (v.is_infinity()) fail(Err::Domain, "poly_ord_at expects a finite place");
    int ord = 0;
    Poly q = p.with_var(v.pi().var());
    while (true) {
        auto [quot, rem] = poly_divmod(q, v.pi());
        if (!rem.is_zero()) return ord;
        q = quot;
        ++ord;
        if (q.is_zero()) fail(Err::Internal, "valuation loop on zero");
    }
}

int place_valuation(const RatFunc& r, const Place& v) {
    if (r.is_zero()) fail(Err::Domain, "valuation of the zero function");
    if (v.is_infinity()) return r.den().degree() - r.num().degree();
    return poly_ord_at(r.num(), v) - poly_ord_at(r.den(), v);
}

Residue poly_mod(const Poly& p, const Place& v) { return Residue(v, p); }

std::optional<Residue> ratfunc_at(const RatFunc& r, const Place& v) {
    Residue den = poly_mod(r.den(), v);
    if (den.is_zero()) return std::nullopt;
    return poly_mod(r.num(), v) * den.inverse();
}

std::pair<std::vector<FieldElem>, Poly> tower_roots(const Poly& squarefree, const Tower& ambient) {
    std::vector<FieldElem> roots;
    Poly f = squarefree.monic();
    Tower k = Tower::unite(ambient, f.tower());
    // rational roots: a rational c is a root of f iff it is a root of the
    // gcd of the four coordinate polynomials
    {
        std::vector<Poly> comps(4, Poly(f.var()));
        for (int i = 0; i <= f.degree(); ++i) {
            FieldElem c = f.coeff(i).embedded(k);
            for (int j = 0; j < 4; ++j)
                comps[j] += Poly::monomial(FieldElem(c.coord(j)), i, f.var());
        }
        Poly g(f.var());
        for (const auto& cp : comps) g = poly_gcd(g, cp);
        if (g.degree() >= 1) {
            // integer-clear g and enumerate candidate rational roots
            Integer den_lcm = 1;
            for (int i = 0; i <= g.degree(); ++i) {
                const Rational& q = g.coeff(i).rational();
                if (q != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
            }
            std::vector<Integer> ic(g.degree() + 1);
            for (int i = 0; i <= g.degree(); ++i) {
                Rational q = g.coeff(i).rational() * Rational(den_lcm);
                ic[i] = q.get_num();
            }
            int low = 0;
            while (ic[low] == 0) ++low; // t^low divides: root zero
            if (low > 0) roots.push_back(FieldElem(0));
            Integer c0 = ic[low], cn = ic[g.degree()];
            for (const Integer& p : positive_divisors(c0))
                for (const Integer& q : positive_divisors(cn)) {
                    Rational cand(p, q);
                    cand.canonicalize();
                    for (int s = 0; s < 2; ++s) {
                        Rational c = s ? -cand : cand;
                        FieldElem val = g.eval(FieldElem(c));
                        if (val.is_zero() &&
                            std::find(roots.begin(), roots.end(), FieldElem(c)) == roots.end())
                            roots.push_back(FieldElem(c));
                    }
                }
        }
    }
    for (const auto& r : roots) f = poly_divexact(f, Poly::variable(f.var()) - Poly(r, f.var()));
    if (f.degree() == 1) {
        roots.push_back(-f.coeff(0));
        f = Poly(FieldElem(1), f.var());
    } else if (f.degree() == 2) {
        // quadratic formula inside the ambient tower
        FieldElem b = f.coeff(1), c = f.coeff(0);
        FieldElem disc = b * b - FieldElem(4) * c;
        if (auto s = sqrt_in_tower(disc.embedded(k))) {
            FieldElem half(Rational(1, 2));
            roots.push_back((-b + *s) * half);
            roots.push_back((-b - *s) * half);
            f = Poly(FieldElem(1), f.var());
        }
    }
    return {roots, f};
}

std::vector<PlaceFactor> factor_into_places(const Poly& p, const Tower& ambient) {
    if (p.is_zero()) fail(Err::Domain, "factorization of zero");
    std::vector<PlaceFactor> out;
    for (const auto& [sf, mult] : poly_squarefree_decomposition(p)) {
        auto [roots, residual] = tower_roots(sf, ambient);
        for (const auto& r : roots) out.push_back({Place::at_root(r, p.var()), mult});
        if (residual.degree() == 2) {
            out.push_back({Place::finite(residual), mult});
        } else if (residual.degree() > 0) {
            fail(Err::UnsupportedPlace, "cannot split factor of degree " +
                                            std::to_string(residual.degree()) + ": " +
                                            residual.str());
        }
    }
    std::sort(out.begin(), out.end(), [](const PlaceFactor& a, const PlaceFactor& b) {
        if (a.place.degree() != b.place.degree()) return a.place.degree() < b.place.degree();
        return a.place.str() < b.place.str();
    });
    return out;
}

} // namespace mwplet
