#ifndef MWPLET_TOWER_HPP
#define MWPLET_TOWER_HPP

#include <array>
#include <optional>
#include <string>

#include "rational.hpp"

namespace mwplet {

// Coefficient domain: Q, Q(sqrt(d1)) or Q(sqrt(d1), sqrt(d2)) with each d
// squarefree, not 0 or 1, and d1 before d2 under the order (|d|, sign).
// Towers are identified by their generator values; no rewriting of the
// product radical sqrt(d1)*sqrt(d2) into a third generator is ever done, so
// every element has a unique canonical home.
class Tower {
public:
    Tower() = default;
    static Tower rationals() { return Tower(); }
    static Tower quadratic(long d);
    static Tower biquadratic(long a, long b);

    int radicals() const { return d2_ ? 2 : (d1_ ? 1 : 0); }
    long d1() const { return *d1_; }
    long d2() const { return *d2_; }
    bool has(long d) const { return (d1_ && *d1_ == d) || (d2_ && *d2_ == d); }
    bool contains(const Tower& sub) const;
    bool operator==(const Tower& o) const = default;

    // Smallest common tower; fails with TowerOverflow above two radicals.
    static Tower unite(const Tower& a, const Tower& b);

    std::string str() const;

private:
    static void check_descriptor(long d);
    static bool gen_before(long a, long b);
    std::optional<long> d1_, d2_;
};

// c0 + c1*sqrt(d1) + c2*sqrt(d2) + c3*sqrt(d1)*sqrt(d2), coordinates rational.
// Elements are kept pruned: generators whose coordinates vanish are dropped,
// so the tower of an element is always minimal for it.
class FieldElem {
public:
    FieldElem() : c_{0, 0, 0, 0} {}
    FieldElem(const Rational& r) : c_{r, 0, 0, 0} { c_[0].canonicalize(); }
    FieldElem(long n) : c_{n, 0, 0, 0} {}
    FieldElem(int n) : c_{n, 0, 0, 0} {}

    // sqrt(d) for squarefree d; sqrt_integer normalizes the square part,
    // e.g. sqrt(20) = 2*sqrt(5), sqrt(4) = 2.
    static FieldElem radical(long d);
    static FieldElem sqrt_integer(const Integer& n);
    static FieldElem make(const Tower& tw, const std::array<Rational, 4>& coords);

    const Tower& tower() const { return tw_; }
    // by value: these are routinely called on temporaries
    Rational coord(int i) const { return c_[i]; }

    bool is_zero() const;
    bool is_rational() const { return tw_.radicals() == 0; }
    Rational rational() const; // requires is_rational
    int sign_key() const;             // sign of the first nonzero coordinate

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inverse() const;
    // which = 1 flips sqrt(d1), which = 2 flips sqrt(d2).
    FieldElem conj(int which) const;
    Rational norm_to_q() const; // product over all tower conjugates

    // Coordinates re-expressed in a supertower.
    FieldElem embedded(const Tower& target) const;

    // Total order usable as a map key (tower generators, then coordinates).
    static int cmp(const FieldElem& a, const FieldElem& b);

private:
    void prune();
    std::array<Rational, 4> c_;
    Tower tw_;
};

inline bool operator<(const FieldElem& a, const FieldElem& b) { return FieldElem::cmp(a, b) < 0; }

// Square root inside the element's own tower (no extension is attempted).
std::optional<FieldElem> sqrt_in_tower(const FieldElem& e);

} // namespace mwplet

#endif
