#include "mpoly.hpp"

#include <algorithm>

#include "error.hpp"

namespace mwplet {

namespace {

int precedence(const std::string& name) {
    static const std::vector<std::string> order = {"T", "X", "Z",      "t",  "x", "y",
                                                   "a", "r", "lambda", "mu", "u", "v"};
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == name) return static_cast<int>(i);
    return 1000; // unknown names sort after, alphabetically via name compare
}

bool var_before(const std::string& a, const std::string& b) {
    int pa = precedence(a), pb = precedence(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

int total(const MPoly::Exp& e) { return e[0] + e[1] + e[2] + e[3]; }

} // namespace

MPoly::MPoly(const FieldElem& c) {
    if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c;
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_[{1, 0, 0, 0}] = FieldElem(1);
    return p;
}

MPoly MPoly::from_poly(const Poly& p) {
    MPoly m;
    if (p.is_zero()) return m;
    if (p.is_constant()) return MPoly(p.coeff(0));
    m.vars_ = {p.var()};
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) m.terms_[{i, 0, 0, 0}] = p.coeff(i);
    return m;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

FieldElem MPoly::constant_value() const {
    if (is_zero()) return FieldElem(0);
    if (!is_constant()) fail(Err::Domain, "polynomial is not constant: " + str());
    return terms_.begin()->second;
}

int MPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

int MPoly::degree_in(const std::string& var) const {
    if (is_zero()) return -1;
    int idx = var_index(var);
    if (idx < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int MPoly::total_degree() const {
    if (is_zero()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
}

bool MPoly::is_homogeneous() const {
    if (is_zero()) return true;
    int d = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total(e) != d) return false;
    return true;
}

Tower MPoly::tower() const {
    Tower t;
    for (const auto& [e, c] : terms_) t = Tower::unite(t, c.tower());
    return t;
}

void MPoly::insert_term(const Exp& e, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    // drop variables that no longer occur
    std::vector<int> used;
    for (size_t i = 0; i < vars_.size(); ++i) {
        bool occurs = false;
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) {
                occurs = true;
                break;
            }
        if (occurs) used.push_back(static_cast<int>(i));
    }
    if (used.size() == vars_.size()) return;
    std::vector<std::string> nv;
    for (int i : used) nv.push_back(vars_[i]);
    std::map<Exp, FieldElem, std::greater<Exp>> nt;
    for (const auto& [e, c] : terms_) {
        Exp ne{0, 0, 0, 0};
        for (size_t k = 0; k < used.size(); ++k) ne[k] = e[used[k]];
        nt[ne] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

std::vector<std::string> MPoly::unite_vars(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end(), var_before);
    if (out.size() > 4) fail(Err::Domain, "more than four variables in one polynomial");
    return out;
}

MPoly MPoly::aligned_to(const std::vector<std::string>& vars) const {
    MPoly out;
    out.vars_ = vars;
    std::array<int, 4> slot{-1, -1, -1, -1};
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) fail(Err::Internal, "variable alignment failure");
        slot[i] = static_cast<int>(it - vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exp ne{0, 0, 0, 0};
        for (size_t i = 0; i < vars_.size(); ++i) ne[slot[i]] = e[i];
        out.terms_[ne] = c;
    }
    return out;
}

MPoly MPoly::operator-() const {
    MPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
    auto vars = unite_vars(vars_, o.vars_);
    MPoly a = aligned_to(vars), b = o.aligned_to(vars);
    for (const auto& [e, c] : b.terms_) a.insert_term(e, c);
    a.normalize();
    return a;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    auto vars = unite_vars(vars_, o.vars_);
    MPoly a = aligned_to(vars), b = o.aligned_to(vars);
    MPoly out;
    out.vars_ = vars;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out.insert_term(e, ca * cb);
        }
    out.normalize();
    return out;
}

MPoly MPoly::operator*(const FieldElem& s) const {
    if (s.is_zero()) return MPoly();
    MPoly p = *this;
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
}

MPoly operator*(const FieldElem& s, const MPoly& p) { return p * s; }

bool MPoly::operator==(const MPoly& o) const { return (*this - o).is_zero(); }

MPoly MPoly::pow(int n) const {
    if (n < 0) fail(Err::Domain, "negative power");
    MPoly r(FieldElem(1));
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

MPoly MPoly::coeff_of(const std::string& var, int k) const {
    int idx = var_index(var);
    MPoly out;
    if (idx < 0) {
        if (k == 0) return *this;
        return out;
    }
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        Exp ne = e;
        ne[idx] = 0;
        out.terms_[ne] = c;
    }
    out.normalize();
    return out;
}

std::vector<MPoly> MPoly::coeffs_in(const std::string& var) const {
    int d = std::max(degree_in(var), 0);
    std::vector<MPoly> out;
    for (int k = d; k >= 0; --k) out.push_back(coeff_of(var, k));
    return out;
}

MPoly MPoly::substitute(const std::string& var, const MPoly& value) const {
    int idx = var_index(var);
    if (idx < 0) return *this;
    int d = degree_in(var);
    // Horner over the coefficients
    MPoly acc;
    for (int k = d; k >= 0; --k) acc = acc * value + coeff_of(var, k);
    return acc;
}

MPoly MPoly::substitute(const std::string& var, const FieldElem& value) const {
    return substitute(var, MPoly(value));
}

Poly MPoly::to_poly(const std::string& var) const {
    Poly out(var);
    if (is_zero()) return out;
    for (const auto& v : vars_)
        if (v != var) fail(Err::Domain, "polynomial is not univariate in " + var + ": " + str());
    int idx = var_index(var);
    std::vector<FieldElem> coeffs(degree_in(var) + 1, FieldElem(0));
    for (const auto& [e, c] : terms_) coeffs[idx < 0 ? 0 : e[idx]] = c;
    return Poly::from_coeffs(std::move(coeffs), var);
}

FieldElem MPoly::eval(const std::map<std::string, FieldElem>& point) const {
    FieldElem out(0);
    for (const auto& [e, c] : terms_) {
        FieldElem term = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = point.find(vars_[i]);
            if (it == point.end()) fail(Err::Domain, "missing value for variable " + vars_[i]);
            for (int k = 0; k < e[i]; ++k) term *= it->second;
        }
        out += term;
    }
    return out;
}

MPoly MPoly::divexact(const MPoly& divisor) const {
    if (divisor.is_zero()) fail(Err::Domain, "division by zero polynomial");
    auto vars = unite_vars(vars_, divisor.vars_);
    MPoly f = aligned_to(vars), g = divisor.aligned_to(vars);
    f.normalize();
    g.normalize();
    MPoly q;
    q.vars_ = vars;
    while (!f.is_zero()) {
        const auto& [ef, cf] = *f.terms_.begin();
        const auto& [eg, cg] = *g.terms_.begin();
        Exp m;
        for (int i = 0; i < 4; ++i) {
            m[i] = ef[i] - eg[i];
            if (m[i] < 0) fail(Err::Domain, "polynomial division is not exact");
        }
        FieldElem c = cf / cg;
        MPoly mono;
        mono.vars_ = vars;
        mono.terms_[m] = c;
        q.insert_term(m, c);
        f -= mono * g;
    }
    q.normalize();
    return q;
}

MPoly MPoly::derivative(const std::string& var) const {
    int idx = var_index(var);
    MPoly out;
    if (idx < 0) return out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exp ne = e;
        ne[idx] -= 1;
        out.terms_[ne] = c * FieldElem(Rational(e[idx]));
    }
    out.normalize();
    return out;
}

MPoly MPoly::primitive_normalized() const {
    if (is_zero()) return *this;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < 4; ++i) {
            Rational q = c.coord(i);
            if (q == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < 4; ++i) {
            Rational q = c.coord(i);
            if (q == 0) continue;
            Integer n = q.get_num() * den_lcm / q.get_den();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    MPoly out = *this * FieldElem(scale);
    // sign rule: the graded-lex leading coefficient starts positive
    const FieldElem* lead = nullptr;
    int best_total = -1;
    for (const auto& [e, c] : out.terms_) {
        int te = total(e);
        if (te > best_total) { // map iterates lex-descending, first of max grade wins
            best_total = te;
            lead = &c;
        }
    }
    if (lead && lead->sign_key() < 0) out = -out;
    return out;
}

MPoly resultant_eliminate(const MPoly& a, const MPoly& b, const std::string& eliminate) {
    int da = a.degree_in(eliminate), db = b.degree_in(eliminate);
    if (a.is_zero() || b.is_zero()) fail(Err::Domain, "resultant of zero polynomial");
    if (da <= 0 && db <= 0)
        fail(Err::Domain, "both inputs constant in the eliminated variable " + eliminate);
    if (da <= 0) return a.pow(db);
    if (db <= 0) return b.pow(da);
    auto ca = a.coeffs_in(eliminate); // degree-descending
    auto cb = b.coeffs_in(eliminate);
    int n = da + db;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = ca[j];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = cb[j];
    // Bareiss fraction-free elimination
    MPoly prev(FieldElem(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return MPoly(); // singular: resultant zero
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(prev);
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

} // namespace mwplet
