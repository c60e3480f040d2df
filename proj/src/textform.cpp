#include "textform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "error.hpp"

namespace mwplet {

namespace {

std::string radical_text(const Tower& tw, int i) {
    if (i == 1) return "sqrt(" + std::to_string(tw.d1()) + ")";
    if (i == 2) return "sqrt(" + std::to_string(tw.d2()) + ")";
    return "sqrt(" + std::to_string(tw.d1()) + ")*sqrt(" + std::to_string(tw.d2()) + ")";
}

int component_count(const FieldElem& e) {
    int n = 0;
    for (int i = 0; i < 4; ++i)
        if (e.coord(i) != 0) ++n;
    return n;
}

// |q| * radical, "1*" omitted next to a radical
std::string unsigned_component(const Rational& q, const std::string& rad) {
    Rational a = abs(q);
    if (rad.empty()) return rational_string(a);
    if (a == 1) return rad;
    return rational_string(a) + "*" + rad;
}

} // namespace

std::string fieldelem_string(const FieldElem& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Rational& q = e.coord(i);
        if (q == 0) continue;
        std::string rad = (i == 0) ? "" : radical_text(e.tower(), i);
        if (out.empty())
            out += (q < 0 ? "-" : "") + unsigned_component(q, rad);
        else
            out += (q < 0 ? "-" : "+") + unsigned_component(q, rad);
    }
    return out;
}

namespace {

struct Term {
    MPoly::Exp exp;
    int total;
    FieldElem coeff;
};

std::string monomial_text(const std::vector<std::string>& vars, const MPoly::Exp& e) {
    std::string out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string render_terms(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<Term> terms;
    for (const auto& [e, c] : p.terms())
        terms.push_back({e, e[0] + e[1] + e[2] + e[3], c});
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.total != b.total) return a.total > b.total;
        return a.exp > b.exp;
    });
    std::string out;
    for (const auto& t : terms) {
        std::string mono = monomial_text(p.vars(), t.exp);
        int comps = component_count(t.coeff);
        std::string piece;
        bool negative = false;
        if (comps == 1) {
            int idx = 0;
            while (t.coeff.coord(idx) == 0) ++idx;
            negative = t.coeff.coord(idx) < 0;
            std::string rad = idx == 0 ? "" : radical_text(t.coeff.tower(), idx);
            std::string c = unsigned_component(t.coeff.coord(idx), rad);
            if (mono.empty())
                piece = c;
            else if (c == "1")
                piece = mono;
            else
                piece = c + "*" + mono;
        } else {
            piece = "(" + fieldelem_string(t.coeff) + ")";
            if (!mono.empty()) piece += "*" + mono;
        }
        if (out.empty())
            out += (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

} // namespace

std::string mpoly_string(const MPoly& p) { return render_terms(p); }

std::string poly_string(const Poly& p) { return render_terms(MPoly::from_poly(p)); }

std::string MPoly::str() const { return render_terms(*this); }
std::string Poly::str() const { return poly_string(*this); }

std::string ratfunc_string(const RatFunc& r) {
    if (r.is_polynomial()) return poly_string(r.num());
    return "(" + poly_string(r.num()) + ")/(" + poly_string(r.den()) + ")";
}

std::string canonical_string(const MPoly& p) { return render_terms(p.primitive_normalized()); }

std::string canonical_string(const Poly& p) { return canonical_string(MPoly::from_poly(p)); }

// ---------------------------------------------------------------------------
// parser

namespace {

struct Fraction {
    MPoly num, den; // den nonzero
    Fraction() : num(), den(FieldElem(1)) {}
    Fraction(MPoly n) : num(std::move(n)), den(FieldElem(1)) {}
    Fraction operator+(const Fraction& o) const {
        Fraction f;
        f.num = num * o.den + o.num * den;
        f.den = den * o.den;
        return f;
    }
    Fraction operator-(const Fraction& o) const {
        Fraction f;
        f.num = num * o.den - o.num * den;
        f.den = den * o.den;
        return f;
    }
    Fraction operator*(const Fraction& o) const {
        Fraction f;
        f.num = num * o.num;
        f.den = den * o.den;
        return f;
    }
    Fraction operator/(const Fraction& o) const {
        if (o.num.is_zero()) fail(Err::Parse, "division by zero in expression");
        Fraction f;
        f.num = num * o.den;
        f.den = den * o.num;
        return f;
    }
    Fraction pow(int n) const {
        Fraction f{MPoly(FieldElem(1))};
        for (int i = 0; i < n; ++i) f = f * *this;
        return f;
    }
};

class Parser {
public:
    Parser(const std::string& text, std::vector<std::string> vars)
        : s_(text), vars_(std::move(vars)) {}

    Fraction parse() {
        Fraction f = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(Err::Parse, "trailing input at '" + s_.substr(pos_) + "'");
        return f;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Fraction expr() {
        Fraction acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = term();
        if (neg) acc = Fraction{MPoly(FieldElem(-1))} * acc;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Fraction term() {
        Fraction acc = factor();
        while (true) {
            if (eat('*'))
                acc = acc * factor();
            else if (eat('/'))
                acc = acc / factor();
            else
                break;
        }
        return acc;
    }

    Fraction factor() {
        Fraction base = atom();
        if (eat('^')) {
            std::string digits;
            skip_ws();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            if (digits.empty()) fail(Err::Parse, "exponent expected");
            int e = std::stoi(digits);
            if (e > 64) fail(Err::Parse, "exponent too large");
            return base.pow(e);
        }
        return base;
    }

    Fraction atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail(Err::Parse, "unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Fraction f = expr();
            if (!eat(')')) fail(Err::Parse, "missing ')'");
            return f;
        }
        if (c == '-') {
            ++pos_;
            return Fraction{MPoly(FieldElem(-1))} * factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return Fraction{MPoly(FieldElem(Rational(Integer(digits))))};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                name += s_[pos_++];
            if (name == "sqrt") {
                if (!eat('(')) fail(Err::Parse, "sqrt expects '('");
                bool neg = eat('-');
                skip_ws();
                std::string digits;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    digits += s_[pos_++];
                if (digits.empty()) fail(Err::Parse, "sqrt expects an integer radicand");
                if (!eat(')')) fail(Err::Parse, "missing ')' after sqrt");
                Integer n(digits);
                if (neg) n = -n;
                return Fraction{MPoly(FieldElem::sqrt_integer(n))};
            }
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
                fail(Err::Parse, "unknown variable '" + name + "'");
            return Fraction{MPoly::variable(name)};
        }
        fail(Err::Parse, std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
    std::vector<std::string> vars_;
};

} // namespace

MPoly parse_mpoly(const std::string& text, const std::vector<std::string>& vars) {
    Fraction f = Parser(text, vars).parse();
    if (!f.den.is_constant())
        fail(Err::Parse, "expression is not polynomial (nonconstant denominator)");
    return f.num * f.den.constant_value().inverse();
}

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
    Fraction f = Parser(text, {var}).parse();
    return RatFunc(f.num.is_zero() ? Poly(var) : f.num.to_poly(var),
                   f.den.to_poly(var));
}

FieldElem parse_fieldelem(const std::string& text) {
    return parse_mpoly(text, {}).constant_value();
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
    std::string s = text;
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) fail(Err::Parse, "empty pair");
    s = s.substr(a, b - a + 1);
    if (s.front() != '(' || s.back() != ')') fail(Err::Parse, "pair must be parenthesized: " + s);
    s = s.substr(1, s.size() - 2);
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
    }
    fail(Err::Parse, "pair needs a top-level comma: " + s);
}

} // namespace mwplet
