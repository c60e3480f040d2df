#include "poly.hpp"

#include <sstream>

#include "error.hpp"

namespace mwplet {

namespace {
void check_vars(const Poly& a, const Poly& b) {
    if (a.is_constant() || b.is_constant()) return;
    if (a.var() != b.var())
        fail(Err::Domain, "mixed polynomial variables: " + a.var() + " vs " + b.var());
}
// non-constant operand wins the variable tag
std::string join_var(const Poly& a, const Poly& b) {
    if (!a.is_constant()) return a.var();
    if (!b.is_constant()) return b.var();
    return a.var();
}
} // namespace

Poly::Poly(const FieldElem& c, std::string var) : var_(std::move(var)) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::variable(const std::string& var) {
    Poly p(var);
    p.c_ = {FieldElem(0), FieldElem(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<FieldElem> coeffs, std::string var) {
    Poly p(std::move(var));
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

Poly Poly::monomial(const FieldElem& c, int degree, std::string var) {
    Poly p(std::move(var));
    if (c.is_zero()) return p;
    p.c_.assign(degree + 1, FieldElem(0));
    p.c_[degree] = c;
    return p;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem(0);
    return c_[i];
}

FieldElem Poly::leading() const {
    if (is_zero()) fail(Err::Domain, "leading coefficient of zero polynomial");
    return c_.back();
}

Tower Poly::tower() const {
    Tower t;
    for (const auto& c : c_) t = Tower::unite(t, c.tower());
    return t;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    check_vars(*this, o);
    Poly p(join_var(*this, o));
    p.c_.resize(std::max(c_.size(), o.c_.size()), FieldElem(0));
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (i < c_.size()) p.c_[i] += c_[i];
        if (i < o.c_.size()) p.c_[i] += o.c_[i];
    }
    p.normalize();
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_vars(*this, o);
    Poly p(join_var(*this, o));
    if (is_zero() || o.is_zero()) return p;
    p.c_.assign(c_.size() + o.c_.size() - 1, FieldElem(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) p.c_[i + j] += c_[i] * o.c_[j];
    }
    p.normalize();
    return p;
}

Poly Poly::operator*(const FieldElem& s) const {
    Poly p(var_);
    if (s.is_zero()) return p;
    p.c_ = c_;
    for (auto& c : p.c_) c *= s;
    return p;
}

Poly operator*(const FieldElem& s, const Poly& p) { return p * s; }

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    if (!is_constant() && !o.is_constant() && var_ != o.var_) return false;
    return true;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    Poly p(var_);
    if (c_.size() <= 1) return p;
    p.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) p.c_[i - 1] = c_[i] * FieldElem(Rational(i));
    p.normalize();
    return p;
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) fail(Err::Domain, "negative polynomial power");
    Poly r(FieldElem(1), var_);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

Poly Poly::reversed() const {
    Poly p(var_);
    p.c_.assign(c_.rbegin(), c_.rend());
    p.normalize();
    return p;
}

Poly Poly::with_var(const std::string& var) const {
    Poly p = *this;
    p.var_ = var;
    return p;
}

Poly Poly::scaled_arg(const FieldElem& s) const {
    Poly p(var_);
    p.c_ = c_;
    FieldElem f(1);
    for (size_t i = 1; i < p.c_.size(); ++i) {
        f *= s;
        p.c_[i] *= f;
    }
    p.normalize();
    return p;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(Err::Domain, "division by zero polynomial");
    check_vars(a, b);
    Poly q(join_var(a, b));
    Poly r = a;
    FieldElem inv_lead = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        FieldElem c = r.leading() * inv_lead;
        int d = r.degree() - b.degree();
        Poly term = Poly::monomial(c, d, q.var());
        q += term;
        r -= term * b;
    }
    return {q, r};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) fail(Err::Domain, "polynomial division is not exact");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly poly_squarefree_part(const Poly& a) {
    if (a.is_zero()) fail(Err::Domain, "squarefree part of zero");
    Poly g = poly_gcd(a, a.derivative());
    return poly_divexact(a.monic(), g);
}

std::vector<std::pair<Poly, int>> poly_squarefree_decomposition(const Poly& a) {
    if (a.is_zero()) fail(Err::Domain, "squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly f = a.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm, characteristic zero
    Poly g = poly_gcd(f, f.derivative());
    Poly w = poly_divexact(f, g);
    Poly y = poly_divexact(f.derivative(), g);
    int i = 1;
    while (w.degree() > 0) {
        Poly z = y - w.derivative();
        Poly p = poly_gcd(w, z);
        if (p.degree() > 0) out.emplace_back(p, i);
        w = poly_divexact(w, p);
        y = poly_divexact(z, p);
        ++i;
    }
    return out;
}

} // namespace mwplet
