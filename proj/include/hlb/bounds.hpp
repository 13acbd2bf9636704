#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hlb/rational.hpp"
#include "hlb/supnorm.hpp"

namespace hlb {

enum class BoundMethod { Main, Thm777, Quotient, UpperFactor, BhReference, RealReference, Best };

std::string to_string(BoundMethod method);
/// Throws ParseError for an unknown label.
BoundMethod parse_bound_method(std::string_view label);

/// A lower or upper bound on the polynomial Hardy-Littlewood constant
/// C(m, p). `certified` is true only when the value comes from exact closed
/// forms, never from a numerically estimated sup-norm.
struct BoundReport {
  int m = 2;
  ExtendedExponent p = ExtendedExponent::infinity();
  BoundMethod method = BoundMethod::Main;
  double value = 1.0;
  bool certified = false;
  std::map<std::string, double> parameters;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// 2^{m/p} for even m, 2^{(m-1)/p} for odd m, from the product witness
/// z1...zm. Needs finite p > m.
BoundReport lower_bound_main(int m, const ExtendedExponent& p);

/// Cutoff on c above which the Q_m witness quotient exceeds 1. Defined for
/// even m >= 4 and odd m >= 5 with finite p >= 2m; throws
/// DegenerateDomainError for m in {2, 3}, where the denominator vanishes.
double threshold_c(int m, const ExtendedExponent& p);

/// Q_m witness quotient at c = threshold_c(m, p) + eps.
BoundReport lower_bound_777(int m, const ExtendedExponent& p, double eps);

/// Evaluation of the chain L < M <= R behind lower_bound_777.
struct ChainCheck {
  double lhs = 0.0;     ///< L: upper norm bound of Q_m
  double middle = 0.0;  ///< M: l_2 norm of (2^{1/rho}, c)
  double rhs = 0.0;     ///< R: l_rho norm of (2^{1/rho}, c), the coefficient norm
  bool lhs_below_middle = false;
  bool middle_within_rhs = false;
  bool lhs_below_rhs = false;

  bool all() const { return lhs_below_middle && middle_within_rhs && lhs_below_rhs; }
};

ChainCheck verify_chain(int m, const ExtendedExponent& p, double c);

/// coefficient_norm(P, rho) / closed-form norm of a witness. A quotient
/// below 1 is still returned, with parameter "below_trivial" = 1.
BoundReport certified_quotient(const WitnessFamily& family, const ExtendedExponent& p);

/// m^m / (m!)^{1/rho} with rho = exponent_for(m, p).
double upper_bound_factor(int m, const ExtendedExponent& p);

/// cmult * upper_bound_factor(m, p). The multilinear constant cmult >= 1 is
/// user supplied.
BoundReport upper_bound(int m, const ExtendedExponent& p, double cmult);

/// Known lower bound for the p = inf (Bohnenblust-Hille) polynomial constant.
double bh_reference_lower(int m);

/// Known lower bound 2^{(m^2 p + 10m - p - 6m^2 - 4)/(4mp)} for real scalars,
/// 2m <= p < inf.
double real_reference_lower(int m, const ExtendedExponent& p);

/// Exact exponent of real_reference_lower.
Rational real_reference_exponent(int m, const ExtendedExponent& p);

/// Epsilon used when lower_bound_777 competes in best_lower_bound.
inline constexpr double kLargeEpsilon = 1e9;

/// Largest certified lower bound available at (m, p), never below the
/// trivial bound 1. The report carries the winning method.
BoundReport best_lower_bound(int m, const ExtendedExponent& p);

}  // namespace hlb
