#ifndef MWPLET_SECTION_HPP
#define MWPLET_SECTION_HPP

#include "weierstrass.hpp"

namespace mwplet {

// Rational point of the generic fiber, or the zero section O.
class Section {
public:
    Section() : zero_(true) {} // O
    static Section zero() { return Section(); }
    // validates y^2 = f(t, x) exactly
    Section(const WeierstrassModel& model, const RatFunc& x, const RatFunc& y);

    bool is_zero() const { return zero_; }
    const RatFunc& x() const;
    const RatFunc& y() const;
    Tower tower() const { return zero_ ? Tower() : Tower::unite(x_.tower(), y_.tower()); }

    bool operator==(const Section& o) const;
    bool operator!=(const Section& o) const { return !(*this == o); }

private:
    struct Raw {};
    Section(Raw, const RatFunc& x, const RatFunc& y) : zero_(false), x_(x), y_(y) {}
    friend Section section_neg(const Section& p);
    bool zero_ = false;
    RatFunc x_, y_;
};

// chord-tangent group law
Section section_neg(const Section& p);
Section section_add(const WeierstrassModel& model, const Section& p, const Section& q);
Section section_mul(const WeierstrassModel& model, long m, const Section& p);

// the section in the chart at infinity: (u^2 x(1/u), u^3 y(1/u))
Section section_infinity_chart(const WeierstrassModel& chart_model, const Section& p);

} // namespace mwplet

#endif
