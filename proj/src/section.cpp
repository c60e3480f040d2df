#include "section.hpp"

#include "error.hpp"
#include "textform.hpp"

namespace mwplet {

namespace {

RatFunc curve_rhs(const WeierstrassModel& model, const RatFunc& x) {
    return x * x * x + RatFunc(model.a2()) * x * x + RatFunc(model.a4()) * x +
           RatFunc(model.a6());
}

Section make_checked(const WeierstrassModel& model, const RatFunc& x, const RatFunc& y) {
    return Section(model, x, y);
}

} // namespace

Section::Section(const WeierstrassModel& model, const RatFunc& x, const RatFunc& y)
    : zero_(false), x_(x), y_(y) {
    if (!(y * y == curve_rhs(model, x)))
        fail(Err::Domain, "point is not on the curve: x = " + ratfunc_string(x) +
                              ", y = " + ratfunc_string(y));
}

const RatFunc& Section::x() const {
    if (zero_) fail(Err::Domain, "zero section has no affine coordinates");
    return x_;
}

const RatFunc& Section::y() const {
    if (zero_) fail(Err::Domain, "zero section has no affine coordinates");
    return y_;
}

bool Section::operator==(const Section& o) const {
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return x_ == o.x_ && y_ == o.y_;
}

// the involution [-1]: (x, y) -> (x, -y)
Section section_neg(const Section& p) {
    if (p.is_zero()) return p;
    return Section(Section::Raw{}, p.x(), -p.y());
}

Section section_add(const WeierstrassModel& model, const Section& p, const Section& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    const RatFunc &xp = p.x(), &yp = p.y(), &xq = q.x(), &yq = q.y();
    RatFunc lambda;
    if (xp == xq) {
        if (yp == -yq) return Section::zero(); // includes 2-torsion doubling
        // tangent slope f_x / (2y)
        RatFunc fx = RatFunc(FieldElem(3)) * xp * xp +
                     RatFunc(FieldElem(2)) * RatFunc(model.a2()) * xp + RatFunc(model.a4());
        lambda = fx / (RatFunc(FieldElem(2)) * yp);
    } else {
        lambda = (yq - yp) / (xq - xp);
    }
    RatFunc xr = lambda * lambda - RatFunc(model.a2()) - xp - xq;
    RatFunc yr = -(yp + lambda * (xr - xp));
    return make_checked(model, xr, yr);
}

Section section_mul(const WeierstrassModel& model, long m, const Section& p) {
    if (m < 0) return section_mul(model, -m, section_neg(p));
    Section acc = Section::zero();
    Section base = p;
    while (m > 0) {
        if (m & 1) acc = section_add(model, acc, base);
        m >>= 1;
        if (m) base = section_add(model, base, base);
    }
    return acc;
}

Section section_infinity_chart(const WeierstrassModel& chart_model, const Section& p) {
    if (p.is_zero()) return p;
    return Section(chart_model, p.x().infinity_chart(2, "u"), p.y().infinity_chart(3, "u"));
}

} // namespace mwplet
