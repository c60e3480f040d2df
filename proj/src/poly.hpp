#ifndef MWPLET_POLY_HPP
#define MWPLET_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "tower.hpp"

namespace mwplet {

// Dense univariate polynomial over a quadratic tower. The zero polynomial has
// an empty coefficient list; otherwise the top coefficient is nonzero.
class Poly {
public:
    Poly() : var_("t") {}
    explicit Poly(std::string var) : var_(std::move(var)) {}
    Poly(const FieldElem& c, std::string var = "t");
    static Poly variable(const std::string& var = "t"); // the monomial var^1
    static Poly from_coeffs(std::vector<FieldElem> coeffs, std::string var = "t");
    static Poly monomial(const FieldElem& c, int degree, std::string var = "t");

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // deg 0 poly -> 0, zero -> -1
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    FieldElem coeff(int i) const;
    FieldElem leading() const; // by value: safe on temporaries
    FieldElem constant() const { return coeff(0); }
    Tower tower() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;
    Poly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    Poly pow(int n) const;
    // var^deg(p) * p(1/var), coefficient reversal
    Poly reversed() const;
    Poly with_var(const std::string& var) const;
    // substitute var -> c * var (used for small coordinate changes)
    Poly scaled_arg(const FieldElem& c) const;

    std::string str() const; // exact rational-coefficient rendering

private:
    void normalize();
    std::vector<FieldElem> c_;
    std::string var_;
};

Poly operator*(const FieldElem& s, const Poly& p);

// a = q*b + r with deg r < deg b; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// exact division; fails if the remainder is nonzero
Poly poly_divexact(const Poly& a, const Poly& b);
// monic greatest common divisor; gcd(0, b) = monic b
Poly poly_gcd(const Poly& a, const Poly& b);
// squarefree part a / gcd(a, a')
Poly poly_squarefree_part(const Poly& a);
// Yun decomposition: list of (factor, multiplicity), factors squarefree,
// pairwise coprime, product (with multiplicities) = monic a.
std::vector<std::pair<Poly, int>> poly_squarefree_decomposition(const Poly& a);

} // namespace mwplet

#endif
