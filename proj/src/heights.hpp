#ifndef MWPLET_HEIGHTS_HPP
#define MWPLET_HEIGHTS_HPP

#include "section.hpp"

namespace mwplet {

enum class Incidence { Identity, NonIdentity };

struct HeightReport {
    Rational value;
    Rational chi_term;
    Rational zero_terms;  // s1.O + s2.O (twice s.O on the diagonal)
    Rational cross_term;  // s1.s2, zero on the diagonal
    std::vector<std::pair<FiberPlace, Rational>> contributions;
};

// s.O, computed from the pole divisor of x
int zero_section_intersection(const WeierstrassModel& model, const Section& p);
// same quantity for a bare x-coordinate (used by synthetic checks)
int zero_intersection_from_x(const RatFunc& x);

// which component of an I_1/I_2 fiber the section meets
Incidence component_incidence(const WeierstrassModel& model, const Section& p,
                              const FiberPlace& fp);

// intersection number of two distinct nonzero sections
int pair_intersection(const WeierstrassModel& model, const Section& p, const Section& q);

// the Q-valued pairing <P,Q> = chi + P.O + Q.O - P.Q - sum Contr_v, with the
// diagonal convention <P,P> = 2 chi + 2 P.O - sum Contr_v(P,P)
HeightReport height_pairing(const WeierstrassModel& model, const Section& p, const Section& q);

struct NarrowCoordinates {
    std::array<Rational, 3> coords{};
    bool integral = false; // non-integral coordinates mean: not in the lattice span
};

NarrowCoordinates narrow_coordinates(const WeierstrassModel& model, const Section& p,
                                     const std::array<Section, 3>& basis);

} // namespace mwplet

#endif
