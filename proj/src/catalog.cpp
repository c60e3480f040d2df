#include "catalog.hpp"

#include "error.hpp"
#include "textform.hpp"

namespace mwplet {

namespace {

Catalog build_catalog() {
    // y^2 = (x - t^2 + 2)(x^2 - 2x + t^2 - 4)
    MPoly rhs = parse_mpoly("(x-t^2+2)*(x^2-2*x+t^2-4)", {"t", "x"});
    WeierstrassModel model = WeierstrassModel::expand_factored(rhs);

    auto sec = [&](const std::string& x, const std::string& y) {
        return Section(model, parse_ratfunc(x), parse_ratfunc(y));
    };
    Section sL1 = sec("t", "sqrt(-2)*(t+1)*(t-2)");
    Section sL2 = sec("3*t-4", "sqrt(-10)*(t-1)*(t-2)");
    Section sL3 = sec("2", "sqrt(-1)*(t+2)*(t-2)");
    Section s1 = section_mul(model, 2, sL1);
    Section s2 = section_mul(model, 2, sL2);
    Section s3 = section_mul(model, 2, sL3);
    // the branch conic XZ - T^2 + 2Z^2 = 0 carries the 2-torsion section;
    // its section coordinates are (t^2 - 2, 0)
    Section st = sec("t^2-2", "0");

    auto curve = [&](const std::string& text) {
        return PlaneCurve(parse_mpoly(text, {"T", "X", "Z"}));
    };
    PlaneCurve q1 = curve("X*Z-T^2+2*Z^2");
    PlaneCurve q2 = curve("X^2-2*X*Z+T^2-4*Z^2");
    PlaneCurve quartic(q1.poly() * q2.poly());

    auto pt = [](long a, long b, long c) {
        return ProjPoint{FieldElem(a), FieldElem(b), FieldElem(c)};
    };
    std::array<ProjPoint, 4> nodes = {pt(2, 2, 1), pt(-1, -1, 1), pt(1, -1, 1), pt(-2, 2, 1)};
    std::array<PlaneCurve, 3> lines = {curve("X-T"), curve("X-3*T+4*Z"), curve("X-2*Z")};

    // bisection families through -s_i with the slope strata that keep the
    // residual quadratic a conic:
    //   r_1 = (sqrt(-2)/2) t - a, r_2 = (3 sqrt(-10)/10) t - a, r_3 = -a
    std::array<MPoly, 3> slopes = {
        parse_mpoly("(1/2)*sqrt(-2)*t-a", {"t", "a"}),
        parse_mpoly("(3/10)*sqrt(-10)*t-a", {"t", "a"}),
        parse_mpoly("-a", {"a"}),
    };
    std::array<Section, 3> images = {s1, s2, s3};
    std::array<ResidualQuadratic, 3> family = {
        residual_quadratic(model, section_neg(s1), slopes[0]),
        residual_quadratic(model, section_neg(s2), slopes[1]),
        residual_quadratic(model, section_neg(s3), slopes[2]),
    };

    return Catalog{model,  sL1,  sL2,   sL3,   s1,
                   s2,     s3,   st,    q1,    q2,
                   quartic, nodes, lines, pt(0, 1, 0), family, images};
}

} // namespace

const Catalog& catalog() {
    static const Catalog c = build_catalog();
    return c;
}

const Section* Catalog::named_section(const std::string& name) const {
    if (name == "sL1") return &sL1;
    if (name == "sL2") return &sL2;
    if (name == "sL3") return &sL3;
    if (name == "s1") return &s1;
    if (name == "s2") return &s2;
    if (name == "s3") return &s3;
    if (name == "st") return &st;
    if (name == "O") return nullptr; // callers treat the zero section specially
    return nullptr;
}

Section Catalog::family_source(int family_index) const {
    if (family_index < 1 || family_index > 3) fail(Err::Domain, "family index must be 1..3");
    return section_neg(family_image[family_index - 1]);
}

Section resolve_section(const WeierstrassModel& model, const std::string& text) {
    if (text == "O") return Section::zero();
    if (model == catalog().model) {
        if (const Section* s = catalog().named_section(text)) return *s;
    }
    if (text.find('(') == std::string::npos)
        fail(Err::Parse, "unknown section name '" + text +
                             "' (named sections exist on the default curve only)");
    auto [xs, ys] = split_pair(text);
    return Section(model, parse_ratfunc(xs), parse_ratfunc(ys));
}

} // namespace mwplet
