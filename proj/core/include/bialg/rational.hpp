#ifndef BIALG_RATIONAL_HPP
#define BIALG_RATIONAL_HPP

#include <optional>

#include "bialg/precision.hpp"

namespace bialg {

// Rat is boost's canonical-form rational (gcd-reduced, positive denominator),
// which is exactly the invariant the domain type requires.

bool is_perfect_square(const Int& n, Int* root = nullptr);

// Exact conversion of a binary float to a rational (no rounding).
Rat exact_rational(const Real& x);

// Continued-fraction recognition: returns p/q with q <= max_height and
// |x - p/q| < 10 * tol / q^2, scanning convergents of the exact binary value
// of x.  NONE means "not recognized at this height", never a proof of
// irrationality.
std::optional<Rat> recognize_rational(const Real& x, const Int& max_height,
                                      double tol = 1e-9);

} // namespace bialg

#endif
