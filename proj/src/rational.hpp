#ifndef MWPLET_RATIONAL_HPP
#define MWPLET_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace mwplet {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" or "p/q", canonicalized, q > 0.
Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& q);

bool is_perfect_square(const Integer& n);
Integer isqrt_floor(const Integer& n);

// Exact square root of a nonnegative rational, if it is a square.
std::optional<Rational> rational_sqrt(const Rational& q);

// n = square_part^2 * squarefree_part, squarefree_part carries the sign of n.
void split_square_part(const Integer& n, Integer& square_part, Integer& squarefree_part);

// All positive divisors, via trial division. Throws if a cofactor above the
// trial bound remains and is not prime-certifiable by the same bound.
std::vector<Integer> positive_divisors(const Integer& n);

} // namespace mwplet

#endif
