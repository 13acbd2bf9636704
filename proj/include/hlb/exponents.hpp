#pragma once

#include "hlb/rational.hpp"

namespace hlb {

/// Optimal coefficient exponent 2mp/(mp+p-2m) for 2m <= p < inf, and its
/// p = inf limit 2m/(m+1). Throws DomainError for m < 2 or p < 2m.
Rational hl_exponent(int m, const ExtendedExponent& p);

/// Optimal coefficient exponent p/(p-m) in the regime m < p < 2m.
Rational hl_exponent_low(int m, const ExtendedExponent& p);

/// Dispatches on the regime of p. Throws DomainError for p <= m.
Rational exponent_for(int m, const ExtendedExponent& p);

/// Reciprocal of exponent_for: the outer exponent applied to the sum of
/// |a|^rho. Exact.
Rational outer_exponent_for(int m, const ExtendedExponent& p);

}  // namespace hlb
