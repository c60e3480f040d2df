#ifndef MWPLET_MPOLY_HPP
#define MWPLET_MPOLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "poly.hpp"
#include "tower.hpp"

namespace mwplet {

// Sparse polynomial in at most four named variables over a quadratic tower.
// Variables are ordered by a fixed global precedence (T < X < Z < t < x < y <
// a < r < u < lambda < mu, unknown names after), which also fixes the
// graded-lex term order used for printing and leading terms.
class MPoly {
public:
    using Exp = std::array<int, 4>;

    MPoly() = default;
    explicit MPoly(const FieldElem& c);
    explicit MPoly(const Rational& c) : MPoly(FieldElem(c)) {}
    static MPoly variable(const std::string& name);
    static MPoly from_poly(const Poly& p); // univariate in p.var()

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElem constant_value() const;
    const std::vector<std::string>& vars() const { return vars_; }
    int degree_in(const std::string& var) const;    // -1 for the zero polynomial
    int total_degree() const;                        // -1 for the zero polynomial
    bool is_homogeneous() const;
    Tower tower() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const FieldElem& s) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    MPoly pow(int n) const;

    // coefficient of var^k as a polynomial in the remaining variables
    MPoly coeff_of(const std::string& var, int k) const;
    // view as univariate in var with MPoly coefficients, degree down to 0
    std::vector<MPoly> coeffs_in(const std::string& var) const;
    MPoly substitute(const std::string& var, const MPoly& value) const;
    MPoly substitute(const std::string& var, const FieldElem& value) const;
    // collapse to a univariate Poly; fails if other variables survive
    Poly to_poly(const std::string& var) const;
    FieldElem eval(const std::map<std::string, FieldElem>& point) const;

    // exact division; fails if not divisible
    MPoly divexact(const MPoly& divisor) const;
    MPoly derivative(const std::string& var) const;

    // integer-cleared, content-normalized, sign-normalized associate
    MPoly primitive_normalized() const;
    std::string str() const;

    // iteration support for printers
    const std::map<Exp, FieldElem, std::greater<Exp>>& terms() const { return terms_; }

private:
    void insert_term(const Exp& e, const FieldElem& c);
    void normalize();
    MPoly aligned_to(const std::vector<std::string>& vars) const;
    static std::vector<std::string> unite_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b);
    int var_index(const std::string& name) const; // -1 if absent

    // exponent rows follow vars_ order; graded-lex descending iteration
    std::vector<std::string> vars_;
    std::map<Exp, FieldElem, std::greater<Exp>> terms_;
};

MPoly operator*(const FieldElem& s, const MPoly& p);

// Resultant of a and b with respect to `eliminate` (Sylvester determinant,
// fraction-free Gaussian elimination). Both must be nonconstant in it.
MPoly resultant_eliminate(const MPoly& a, const MPoly& b, const std::string& eliminate);

} // namespace mwplet

#endif
