#include "ratfunc.hpp"

#include "error.hpp"

namespace mwplet {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) fail(Err::Domain, "zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(FieldElem(1), den_.var());
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    FieldElem lead = den_.leading();
    if (!(lead == FieldElem(1))) {
        FieldElem inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Poly RatFunc::as_poly() const {
    if (!is_polynomial()) fail(Err::Domain, "rational function has a nontrivial denominator");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail(Err::Domain, "inversion of the zero function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc r(FieldElem(1), var());
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

bool RatFunc::regular_at(const FieldElem& x) const { return !den_.eval(x).is_zero(); }

FieldElem RatFunc::eval(const FieldElem& x) const {
    FieldElem d = den_.eval(x);
    if (d.is_zero()) fail(Err::Domain, "evaluation at a pole");
    return num_.eval(x) * d.inverse();
}

RatFunc RatFunc::infinity_chart(int weight, const std::string& uvar) const {
    // u^w * n(1/u)/d(1/u) = u^(w + deg d - deg n) * rev(n)(u) / rev(d)(u)
    Poly rn = num_.reversed().with_var(uvar);
    Poly rd = den_.reversed().with_var(uvar);
    int shift = weight + den_.degree() - num_.degree();
    if (shift >= 0) return RatFunc(rn * Poly::monomial(FieldElem(1), shift, uvar), rd);
    return RatFunc(rn, rd * Poly::monomial(FieldElem(1), -shift, uvar));
}

RatFunc operator*(const FieldElem& s, const RatFunc& r) {
    return RatFunc(r.num() * s, r.den());
}

} // namespace mwplet
