#ifndef MWPLET_RATFUNC_HPP
#define MWPLET_RATFUNC_HPP

#include "poly.hpp"

namespace mwplet {

// Rational function num/den with monic reduced denominator.
class RatFunc {
public:
    RatFunc() : num_("t"), den_(FieldElem(1), "t") {}
    RatFunc(const Poly& p) : num_(p), den_(FieldElem(1), p.var()) {}
    RatFunc(const FieldElem& c, std::string var = "t")
        : num_(c, var), den_(FieldElem(1), var) {}
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const std::string& var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    Poly as_poly() const; // requires polynomial
    Tower tower() const { return Tower::unite(num_.tower(), den_.tower()); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc pow(int n) const; // negative n inverts
    FieldElem eval(const FieldElem& x) const; // fails on a pole
    bool regular_at(const FieldElem& x) const;

    // u^weight * f(1/u) as a rational function of u; the substitution used
    // for the chart at the infinite place.
    RatFunc infinity_chart(int weight, const std::string& uvar = "u") const;

private:
    void reduce();
    Poly num_, den_;
};

RatFunc operator*(const FieldElem& s, const RatFunc& r);

} // namespace mwplet

#endif
