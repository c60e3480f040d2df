#ifndef MWPLET_CATALOG_HPP
#define MWPLET_CATALOG_HPP

#include "abeljacobi.hpp"

namespace mwplet {

// Built-in reference data: the default curve y^2 = (x - t^2 + 2)(x^2 - 2x +
// t^2 - 4), the branch quartic it double-covers, the three half-height
// sections cut by lines through the quartic's nodes, their doubles spanning
// the narrow lattice, the 2-torsion section, and the three bisection
// families with prescribed image.
struct Catalog {
    WeierstrassModel model;
    Section sL1, sL2, sL3; // <s, s> = 1/2, from the node lines
    Section s1, s2, s3;    // doubles, the narrow-lattice basis
    Section st;            // 2-torsion

    PlaneCurve branch_conic1;   // XZ - T^2 + 2Z^2 (contains the blow-up center)
    PlaneCurve branch_conic2;   // X^2 - 2XZ + T^2 - 4Z^2
    PlaneCurve branch_quartic;  // the product
    std::array<ProjPoint, 4> nodes; // P0..P3
    std::array<PlaneCurve, 3> node_lines;
    ProjPoint blowup_center;    // [0:1:0]

    // bisection families: residual quadratic with free parameter "a" and the
    // section every member maps to
    std::array<ResidualQuadratic, 3> family;
    std::array<Section, 3> family_image;

    const Section* named_section(const std::string& name) const;
    Section family_source(int family_index) const; // the point the lines pass through
};

const Catalog& catalog();

// parse a named section or a coordinate pair "(x, y)" against a model
Section resolve_section(const WeierstrassModel& model, const std::string& text);

} // namespace mwplet

#endif
