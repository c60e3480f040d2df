#ifndef MWPLET_VERIFY_HPP
#define MWPLET_VERIFY_HPP

#include "report.hpp"

namespace mwplet {

// The full reference verification: reproduces the built-in curve's section
// doublings, height table, fiber census, bisection families, conic
// implicitizations, diagram counts, plet certificates and the randomized
// property suites. Every check is exact.
std::vector<Check> run_reference_verification();

} // namespace mwplet

#endif
