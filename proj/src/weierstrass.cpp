#include "weierstrass.hpp"

#include "error.hpp"
#include "textform.hpp"

namespace mwplet {

WeierstrassModel::WeierstrassModel(const Poly& a2, const Poly& a4, const Poly& a6, int euler_char)
    : a2_(a2), a4_(a4), a6_(a6), chi_(euler_char) {
    if (chi_ != 1)
        fail(Err::Domain, "only rational elliptic surfaces (euler characteristic 1) are supported");
    if (a2_.degree() > 2 * chi_ || a4_.degree() > 4 * chi_ || a6_.degree() > 6 * chi_)
        fail(Err::Domain, "coefficient degree bound violated: need deg a2 <= 2, deg a4 <= 4, "
                          "deg a6 <= 6");
    compute_invariants();
    if (disc_.is_zero()) fail(Err::Domain, "discriminant vanishes identically");
}

WeierstrassModel WeierstrassModel::expand_factored(const MPoly& rhs) {
    for (const auto& v : rhs.vars())
        if (v != "t" && v != "x") fail(Err::Domain, "right-hand side must involve t and x only");
    if (rhs.degree_in("x") != 3) fail(Err::Domain, "right-hand side must be cubic in x");
    if (!(rhs.coeff_of("x", 3) == MPoly(FieldElem(1))))
        fail(Err::Domain, "right-hand side must be monic in x");
    Poly a2 = rhs.coeff_of("x", 2).to_poly("t");
    Poly a4 = rhs.coeff_of("x", 1).to_poly("t");
    Poly a6 = rhs.coeff_of("x", 0).to_poly("t");
    return WeierstrassModel(a2, a4, a6);
}

void WeierstrassModel::compute_invariants() {
    // b-invariants for y^2 = x^3 + a2 x^2 + a4 x + a6
    Poly b2 = a2_ * FieldElem(4);
    Poly b4 = a4_ * FieldElem(2);
    Poly b6 = a6_ * FieldElem(4);
    Poly b8 = a2_ * a6_ * FieldElem(4) - a4_ * a4_;
    disc_ = -(b2 * b2 * b8) - b4 * b4 * b4 * FieldElem(8) - b6 * b6 * FieldElem(27) +
            b2 * b4 * b6 * FieldElem(9);
    c4_ = b2 * b2 - b4 * FieldElem(24);
}

Tower WeierstrassModel::tower() const {
    return Tower::unite(a2_.tower(), Tower::unite(a4_.tower(), a6_.tower()));
}

MPoly WeierstrassModel::rhs_mpoly() const {
    MPoly x = MPoly::variable("x");
    return x.pow(3) + MPoly::from_poly(a2_) * x.pow(2) + MPoly::from_poly(a4_) * x +
           MPoly::from_poly(a6_);
}

Poly WeierstrassModel::fiber_cubic(const FieldElem& t_value) const {
    std::vector<FieldElem> c = {a6_.eval(t_value), a4_.eval(t_value), a2_.eval(t_value),
                                FieldElem(1)};
    return Poly::from_coeffs(std::move(c), "x");
}

WeierstrassModel WeierstrassModel::infinity_chart_model() const {
    auto twist = [&](const Poly& a, int w) {
        // u^w * a(1/u), a polynomial because of the degree bounds
        Poly r = a.reversed().with_var("u");
        return r * Poly::monomial(FieldElem(1), w - a.degree(), "u").with_var("u");
    };
    auto lift = [&](const Poly& a, int w) {
        if (a.is_zero()) return Poly("u");
        return twist(a, w);
    };
    return WeierstrassModel(lift(a2_, 2 * chi_), lift(a4_, 4 * chi_), lift(a6_, 6 * chi_), chi_);
}

namespace {

// Unique double root of a cubic x^3 + A x^2 + B x + D known to have one:
// the remainder of the cubic modulo its derivative is linear with root
// (A B - 9 D) / (6 B - 2 A^2).
template <typename F>
std::optional<F> cubic_double_root(const F& A, const F& B, const F& D) {
    F e1 = B * F(6) - A * A * F(2);
    F e0 = D * F(9) - A * B;
    if (e1.is_zero()) return std::nullopt; // triple root or no multiple root
    F x0 = -e0 * e1.inverse();
    F c = ((x0 + A) * x0 + B) * x0 + D;
    F cp = x0 * x0 * F(3) + A * x0 * F(2) + B;
    if (!c.is_zero() || !cp.is_zero()) return std::nullopt;
    return x0;
}

template <>
std::optional<Residue> cubic_double_root(const Residue& A, const Residue& B, const Residue& D) {
    auto lift = [&](long n) { return Residue::of_field_elem(A.place(), FieldElem(n)); };
    Residue e1 = B * lift(6) - A * A * lift(2);
    Residue e0 = D * lift(9) - A * B;
    if (e1.is_zero()) return std::nullopt;
    Residue x0 = -(e0 * e1.inverse());
    Residue c = ((x0 + A) * x0 + B) * x0 + D;
    Residue cp = x0 * x0 * lift(3) + A * x0 * lift(2) + B;
    if (!c.is_zero() || !cp.is_zero()) return std::nullopt;
    return x0;
}

} // namespace

std::vector<FiberPlace> WeierstrassModel::classify_fibers() const {
    {
        std::lock_guard<std::mutex> guard(cache_->lock);
        if (cache_->fibers) return *cache_->fibers;
    }
    std::vector<FiberPlace> out;
    Tower k = tower();
    auto analyze_finite = [&](const WeierstrassModel& m, const Place& v, int n,
                              std::vector<FiberPlace>& sink, bool as_infinity) {
        int c4_ord = m.c4_.is_zero() ? n + 1 : poly_ord_at(m.c4_, v);
        if (c4_ord > 0)
            fail(Err::UnsupportedFiber,
                 "additive fiber at place " + (as_infinity ? std::string("inf") : v.str()) +
                     " (ord c4 = " + std::to_string(c4_ord) + "); only multiplicative I_n is "
                                                              "supported");
        FiberPlace fp;
        fp.place = as_infinity ? Place::infinity() : v;
        fp.n = n;
        fp.residue_degree = v.degree();
        if (v.degree() == 1) {
            FieldElem tv = v.root();
            Poly cubic = m.fiber_cubic(tv);
            if (auto x0 = cubic_double_root(cubic.coeff(2), cubic.coeff(1), cubic.coeff(0)))
                fp.node = std::make_pair(*x0, FieldElem(0));
            else
                fail(Err::Internal, "no node found on a multiplicative fiber at " + v.str());
        } else {
            Residue A = poly_mod(m.a2_.with_var(v.pi().var()), v);
            Residue B = poly_mod(m.a4_.with_var(v.pi().var()), v);
            Residue D = poly_mod(m.a6_.with_var(v.pi().var()), v);
            auto x0 = cubic_double_root<Residue>(A, B, D);
            if (!x0) fail(Err::Internal, "no node found on a multiplicative fiber at " + v.str());
            if (auto fe = x0->as_field_elem()) fp.node = std::make_pair(*fe, FieldElem(0));
        }
        sink.push_back(fp);
    };
    for (const auto& [place, mult] : factor_into_places(disc_, k))
        analyze_finite(*this, place, mult, out, false);
    int inf_ord = 12 * chi_ - disc_.degree();
    if (inf_ord > 0) {
        WeierstrassModel chart = infinity_chart_model();
        Place u0 = Place::at_root(FieldElem(0), "u");
        int check = poly_ord_at(chart.disc_, u0);
        if (check != inf_ord)
            fail(Err::Internal, "chart discriminant order mismatch at infinity");
        analyze_finite(chart, u0, inf_ord, out, true);
    }
    std::lock_guard<std::mutex> guard(cache_->lock);
    if (!cache_->fibers) cache_->fibers = out;
    return out;
}

const FiberPlace* WeierstrassModel::fiber_at(const Place& v,
                                             const std::vector<FiberPlace>& fibers) const {
    for (const auto& f : fibers)
        if (f.place == v) return &f;
    return nullptr;
}

bool WeierstrassModel::operator==(const WeierstrassModel& o) const {
    return a2_ == o.a2_ && a4_ == o.a4_ && a6_ == o.a6_ && chi_ == o.chi_;
}

} // namespace mwplet
