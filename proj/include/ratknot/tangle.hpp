#pragma once

// Rational tangle operations carried out on fractions (a complete isotopy
// invariant) and, for the cut constructions, on term vectors.

#include "ratknot/contfrac.hpp"

namespace ratknot {

/// `twists` bottom twists applied to `reduced` give back the original tangle.
struct TwistReduction {
    Fraction reduced;
    Int twists = 0;

    friend bool operator==(const TwistReduction&, const TwistReduction&) = default;
};

/// T + [k]: f + k.
Fraction add_twist(const Fraction& f, Int k);

/// 1/T. Swaps 0/1 and 1/0.
Fraction invert(const Fraction& f);

/// -T. Fixes 0 and 1/0.
Fraction mirror(const Fraction& f);

/// Planar rotation -1/T.
Fraction rotate(const Fraction& f);

/// T * 1/[n]: p/q becomes p/(np + q).
Fraction bottom_twist(const Fraction& f, Int n);

/// Strips all bottom twists, leaving |p| > |q|. The reduced denominator is
/// q mod |p|, so the sign of the fraction is kept; |p| = 1 reduces to 1/0.
TwistReduction reduce_twists(const Fraction& f);

/// Reopens N(T) at the horizontal points of the first crossing of [a1]:
/// [-1, 1-a1, -a2, ..., -an] for positive terms, [1, -1-a1, -a2, ..., -an]
/// for negative ones. For a1 = +-1 the second term is 0 and the result is a
/// formal vector.
ContinuedFraction special_cut(const ContinuedFraction& cf);

}  // namespace ratknot
