#include "tower.hpp"

#include "error.hpp"

namespace mwplet {

void Tower::check_descriptor(long d) {
    if (d == 0 || d == 1) fail(Err::Domain, "radicand must not be 0 or 1");
    Integer sq, sf;
    split_square_part(Integer(d), sq, sf);
    if (sq != 1) fail(Err::Domain, "radicand must be squarefree: " + std::to_string(d));
}

bool Tower::gen_before(long a, long b) {
    long aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
    if (aa != ab) return aa < ab;
    return a > b; // same magnitude: positive generator first
}

Tower Tower::quadratic(long d) {
    check_descriptor(d);
    Tower t;
    t.d1_ = d;
    return t;
}

Tower Tower::biquadratic(long a, long b) {
    check_descriptor(a);
    check_descriptor(b);
    if (a == b) fail(Err::Domain, "tower generators must be distinct");
    Tower t;
    if (gen_before(a, b)) {
        t.d1_ = a;
        t.d2_ = b;
    } else {
        t.d1_ = b;
        t.d2_ = a;
    }
    return t;
}

bool Tower::contains(const Tower& sub) const {
    if (sub.d1_ && !has(*sub.d1_)) return false;
    if (sub.d2_ && !has(*sub.d2_)) return false;
    return true;
}

Tower Tower::unite(const Tower& a, const Tower& b) {
    long gens[4];
    int n = 0;
    auto add = [&](long d) {
        for (int i = 0; i < n; ++i)
            if (gens[i] == d) return;
        if (n == 4) return;
        gens[n++] = d;
    };
    if (a.d1_) add(*a.d1_);
    if (a.d2_) add(*a.d2_);
    if (b.d1_) add(*b.d1_);
    if (b.d2_) add(*b.d2_);
    if (n > 2)
        fail(Err::TowerOverflow, "common tower of " + a.str() + " and " + b.str() +
                                     " needs more than two radicals");
    if (n == 0) return rationals();
    if (n == 1) return quadratic(gens[0]);
    return biquadratic(gens[0], gens[1]);
}

std::string Tower::str() const {
    if (!d1_) return "Q";
    if (!d2_) return "Q(sqrt(" + std::to_string(*d1_) + "))";
    return "Q(sqrt(" + std::to_string(*d1_) + "),sqrt(" + std::to_string(*d2_) + "))";
}

FieldElem FieldElem::radical(long d) {
    Integer sq, sf;
    split_square_part(Integer(d), sq, sf);
    return sqrt_integer(Integer(d));
}

FieldElem FieldElem::sqrt_integer(const Integer& n) {
    if (n == 0) return FieldElem();
    Integer sq, sf;
    split_square_part(n, sq, sf);
    if (sf == 1) return FieldElem(Rational(sq));
    if (!sf.fits_slong_p()) fail(Err::Domain, "radicand out of range: " + n.get_str());
    FieldElem e;
    e.tw_ = Tower::quadratic(sf.get_si());
    e.c_ = {Rational(0), Rational(sq), Rational(0), Rational(0)};
    return e;
}

FieldElem FieldElem::make(const Tower& tw, const std::array<Rational, 4>& coords) {
    FieldElem e;
    e.tw_ = tw;
    e.c_ = coords;
    for (auto& q : e.c_) q.canonicalize();
    if (tw.radicals() < 2 && !(e.c_[2] == 0 && e.c_[3] == 0))
        fail(Err::Domain, "coordinates exceed tower rank");
    if (tw.radicals() < 1 && !(e.c_[1] == 0))
        fail(Err::Domain, "coordinates exceed tower rank");
    e.prune();
    return e;
}

bool FieldElem::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Rational FieldElem::rational() const {
    if (!is_rational()) fail(Err::Domain, "element is not rational: tower " + tw_.str());
    return c_[0];
}

int FieldElem::sign_key() const {
    for (int i = 0; i < 4; ++i)
        if (c_[i] != 0) return sgn(c_[i]);
    return 0;
}

void FieldElem::prune() {
    if (tw_.radicals() == 2) {
        bool use1 = c_[1] != 0 || c_[3] != 0;
        bool use2 = c_[2] != 0 || c_[3] != 0;
        if (use1 && use2) return;
        if (!use1 && !use2) {
            tw_ = Tower::rationals();
            return;
        }
        if (use1) {
            tw_ = Tower::quadratic(tw_.d1());
        } else {
            tw_ = Tower::quadratic(tw_.d2());
            c_[1] = c_[2];
            c_[2] = 0;
        }
        return;
    }
    if (tw_.radicals() == 1 && c_[1] == 0) tw_ = Tower::rationals();
}

FieldElem FieldElem::embedded(const Tower& target) const {
    if (!target.contains(tw_)) fail(Err::Domain, "element tower is not a subtower of target");
    FieldElem e;
    e.tw_ = target;
    e.c_[0] = c_[0];
    if (tw_.radicals() >= 1) {
        int slot1 = (target.radicals() >= 1 && target.d1() == tw_.d1()) ? 1 : 2;
        e.c_[slot1] = c_[1];
        if (tw_.radicals() == 2) {
            // both generators present; order is canonical, so slots match
            e.c_[2] = c_[2];
            e.c_[3] = c_[3];
        }
    }
    return e;
}

FieldElem FieldElem::operator-() const {
    FieldElem e = *this;
    for (auto& x : e.c_) x = -x;
    return e;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    Tower t = Tower::unite(tw_, o.tw_);
    FieldElem a = embedded(t), b = o.embedded(t);
    for (int i = 0; i < 4; ++i) a.c_[i] += b.c_[i];
    a.prune();
    return a;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    Tower t = Tower::unite(tw_, o.tw_);
    FieldElem a = embedded(t), b = o.embedded(t);
    Rational d1 = t.radicals() >= 1 ? Rational(t.d1()) : Rational(0);
    Rational d2 = t.radicals() >= 2 ? Rational(t.d2()) : Rational(0);
    std::array<Rational, 4> r;
    r[0] = a.c_[0] * b.c_[0] + d1 * a.c_[1] * b.c_[1] + d2 * a.c_[2] * b.c_[2] +
           d1 * d2 * a.c_[3] * b.c_[3];
    r[1] = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0] + d2 * (a.c_[2] * b.c_[3] + a.c_[3] * b.c_[2]);
    r[2] = a.c_[0] * b.c_[2] + a.c_[2] * b.c_[0] + d1 * (a.c_[1] * b.c_[3] + a.c_[3] * b.c_[1]);
    r[3] = a.c_[0] * b.c_[3] + a.c_[3] * b.c_[0] + a.c_[1] * b.c_[2] + a.c_[2] * b.c_[1];
    FieldElem e;
    e.tw_ = t;
    e.c_ = r;
    e.prune();
    return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

bool FieldElem::operator==(const FieldElem& o) const { return tw_ == o.tw_ && c_ == o.c_; }

FieldElem FieldElem::conj(int which) const {
    if (which < 1 || which > tw_.radicals())
        fail(Err::Domain, "conjugation index out of range for tower " + tw_.str());
    FieldElem e = *this;
    if (which == 1) {
        e.c_[1] = -e.c_[1];
        e.c_[3] = -e.c_[3];
    } else {
        e.c_[2] = -e.c_[2];
        e.c_[3] = -e.c_[3];
    }
    return e;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail(Err::Domain, "inversion of zero");
    if (tw_.radicals() == 0) {
        FieldElem e;
        e.c_[0] = 1 / c_[0];
        return e;
    }
    if (tw_.radicals() == 1) {
        Rational n = c_[0] * c_[0] - Rational(tw_.d1()) * c_[1] * c_[1];
        FieldElem e;
        e.tw_ = tw_;
        e.c_[0] = c_[0] / n;
        e.c_[1] = -c_[1] / n;
        e.prune();
        return e;
    }
    FieldElem a = conj(1);
    FieldElem na = *this * a; // fixed by conj(1): prunes into Q(sqrt(d2)) or Q
    if (na.is_rational()) return a * FieldElem(Rational(1) / na.rational());
    FieldElem nb = na.conj(1);
    FieldElem n = na * nb;
    return a * nb * FieldElem(Rational(1) / n.rational());
}

Rational FieldElem::norm_to_q() const {
    FieldElem n = *this;
    if (tw_.radicals() >= 1) n = n * conj(1);
    if (n.tower().radicals() >= 1) n = n * n.conj(1);
    return n.rational();
}

int FieldElem::cmp(const FieldElem& a, const FieldElem& b) {
    auto key = [](const Tower& t, int i) -> long {
        if (i == 0) return t.radicals();
        if (i == 1) return t.radicals() >= 1 ? t.d1() : 0;
        return t.radicals() >= 2 ? t.d2() : 0;
    };
    for (int i = 0; i < 3; ++i) {
        long ka = key(a.tw_, i), kb = key(b.tw_, i);
        if (ka != kb) return ka < kb ? -1 : 1;
    }
    for (int i = 0; i < 4; ++i) {
        int c = ::cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

namespace {

// Square root of a + b*sqrt(d) inside Q(sqrt(d)), if any.
std::optional<std::pair<Rational, Rational>> sqrt_quadratic(const Rational& a, const Rational& b,
                                                            long d) {
    if (a == 0 && b == 0) return std::make_pair(Rational(0), Rational(0));
    if (b == 0) {
        if (auto r = rational_sqrt(a)) return std::make_pair(*r, Rational(0));
        if (auto r = rational_sqrt(a / d)) return std::make_pair(Rational(0), *r);
        return std::nullopt;
    }
    // (p + q sqrt d)^2 = p^2 + q^2 d + 2pq sqrt d; p^2 is a root of
    // z^2 - a z + d b^2/4 with rational discriminant a^2 - d b^2.
    auto s = rational_sqrt(a * a - Rational(d) * b * b);
    if (!s) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rational z = (a + (sign ? -*s : *s)) / 2;
        if (auto p = rational_sqrt(z)) {
            if (*p == 0) continue;
            Rational q = b / (2 * *p);
            if (*p * *p + q * q * d == a && 2 * *p * q == b) return std::make_pair(*p, q);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<FieldElem> sqrt_in_tower(const FieldElem& e) {
    const Tower& tw = e.tower();
    if (e.is_zero()) return FieldElem(0);
    if (tw.radicals() == 0) {
        if (auto r = rational_sqrt(e.rational())) return FieldElem(*r);
        return std::nullopt;
    }
    if (tw.radicals() == 1) {
        auto pq = sqrt_quadratic(e.coord(0), e.coord(1), tw.d1());
        if (!pq) return std::nullopt;
        return FieldElem::make(tw, {pq->first, pq->second, 0, 0});
    }
    // x = p + q*sqrt(d2) with p, q in Q(sqrt(d1)); write e = e0 + e1*sqrt(d2).
    long d1 = tw.d1(), d2 = tw.d2();
    Tower sub = Tower::quadratic(d1);
    FieldElem e0 = FieldElem::make(sub, {e.coord(0), e.coord(1), 0, 0});
    FieldElem e1 = FieldElem::make(sub, {e.coord(2), e.coord(3), 0, 0});
    auto lift = [&](const FieldElem& p, const FieldElem& q) {
        FieldElem p2 = p.embedded(sub);
        FieldElem q2 = q.embedded(sub);
        return FieldElem::make(tw, {p2.coord(0), p2.coord(1), q2.coord(0), q2.coord(1)});
    };
    // Roots with a rational-looking square may still live in Q(sqrt(d1)),
    // so the recursive searches always run over that subfield.
    if (e1.is_zero()) {
        if (auto p = sqrt_in_tower(e0.embedded(sub))) return lift(*p, FieldElem(0));
        FieldElem t = e0 * FieldElem(Rational(1) / Rational(d2));
        if (auto q = sqrt_in_tower(t.embedded(sub))) return lift(FieldElem(0), *q);
        return std::nullopt;
    }
    FieldElem disc = e0 * e0 - FieldElem(Rational(d2)) * e1 * e1;
    auto s = sqrt_in_tower(disc.embedded(sub));
    if (!s) return std::nullopt;
    FieldElem half(Rational(1, 2));
    for (int sign = 0; sign < 2; ++sign) {
        FieldElem z = (e0 + (sign ? -*s : *s)) * half;
        if (auto p = sqrt_in_tower(z.embedded(sub))) {
            if (p->is_zero()) continue;
            FieldElem q = e1 * half / *p;
            if (q.tower().radicals() == 2) continue;
            FieldElem cand = lift(*p, q);
            if (cand * cand == e) return cand;
        }
    }
    return std::nullopt;
}

} // namespace mwplet
