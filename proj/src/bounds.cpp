#include "hlb/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "hlb/errors.hpp"
#include "hlb/exponents.hpp"

namespace hlb {
namespace {

constexpr std::array<std::pair<BoundMethod, std::string_view>, 7> kMethodLabels{{
    {BoundMethod::Main, "main"},
    {BoundMethod::Thm777, "thm777"},
    {BoundMethod::Quotient, "quotient"},
    {BoundMethod::UpperFactor, "upper-factor"},
    {BoundMethod::BhReference, "bh-reference"},
    {BoundMethod::RealReference, "real-reference"},
    {BoundMethod::Best, "best"},
}};

void require_degree(int m) {
  if (m < 2) throw DomainError("degree m must be >= 2, got " + std::to_string(m));
}

void require_finite_above_degree(int m, const ExtendedExponent& p) {
  require_degree(m);
  if (p.is_infinite()) throw DomainError("this bound needs finite p");
  if (p <= Rational(m))
    throw DomainError("no Hardy-Littlewood inequality for p <= m (m=" + std::to_string(m) + ", p=" +
                      p.to_string() + ")");
}

/// Number of padding variables the Q_m norm bound accounts for: m - 2 for
/// even m, m - 3 for odd m.
int padding_count(int m) { return m % 2 == 0 ? m - 2 : m - 3; }

void require_777_domain(int m, const ExtendedExponent& p) {
  require_degree(m);
  if (m == 2 || m == 3)
    throw DegenerateDomainError("threshold for m=" + std::to_string(m) +
                                " is degenerate: its denominator 1 - 2^0 vanishes (needs even m >= 4 or odd m >= 5)");
  if (p.is_infinite() || p < Rational(2 * m))
    throw DomainError("threshold needs finite p >= 2m (m=" + std::to_string(m) + ", p=" + p.to_string() + ")");
}

double pow2(const Rational& exponent) { return std::exp2(exponent.to_double()); }

/// (a^rho + b^rho)^{1/rho} for a, b >= 0, factored through the larger entry.
double two_norm_rho(double a, double b, double rho) {
  const double big = std::max(a, b);
  const double small = std::min(a, b);
  if (big == 0.0) return 0.0;
  const double s = small / big;
  if (rho == 2.0) return big * std::sqrt(1.0 + s * s);
  return big * std::pow(1.0 + std::pow(s, rho), 1.0 / rho);
}

}  // namespace

std::string to_string(BoundMethod method) {
  for (const auto& [m, label] : kMethodLabels)
    if (m == method) return std::string(label);
  return "?";
}

BoundMethod parse_bound_method(std::string_view label) {
  for (const auto& [m, l] : kMethodLabels)
    if (l == label) return m;
  throw ParseError("unknown bound method '" + std::string(label) + "'");
}

BoundReport lower_bound_main(int m, const ExtendedExponent& p) {
  require_finite_above_degree(m, p);
  const int even_part = m % 2 == 0 ? m : m - 1;
  BoundReport report;
  report.m = m;
  report.p = p;
  report.method = BoundMethod::Main;
  report.value = pow2(Rational(even_part) / p.value());
  report.certified = true;
  return report;
}

double threshold_c(int m, const ExtendedExponent& p) {
  require_777_domain(m, p);
  const Rational& q = p.value();
  const Rational mr(m);
  const int k = m % 2 == 0 ? 4 : 6;
  const Rational top = (Rational(2) * q + Rational(k) - Rational(2) * mr) / q;
  const Rational sub = (mr * q + q - Rational(2) * mr) / (mr * q);
  const Rational bottom = (Rational(2) * mr - Rational(k)) / q;
  // 1 - 2^{-x} = -expm1(-x ln 2) keeps precision for small x.
  const double denominator = -std::expm1(-bottom.to_double() * std::numbers::ln2);
  return std::sqrt((pow2(top) - pow2(sub)) / denominator);
}

BoundReport lower_bound_777(int m, const ExtendedExponent& p, double eps) {
  require_777_domain(m, p);
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("epsilon must be a positive finite number");
  const double threshold = threshold_c(m, p);
  const double c = threshold + eps;
  const double rho = hl_exponent(m, p).to_double();

  // (2 + c^rho)^{1/rho} / (2^{-k/p} sqrt(4 + c^2)) evaluated as
  // 2^{k/p} * (1 + 2 c^{-rho})^{1/rho} * c / hypot(2, c), which stays
  // accurate as c grows.
  const double numerator_ratio = std::exp(std::log1p(2.0 * std::pow(c, -rho)) / rho);
  const double value = pow2(Rational(padding_count(m)) / p.value()) * numerator_ratio * (c / std::hypot(2.0, c));

  BoundReport report;
  report.m = m;
  report.p = p;
  report.method = BoundMethod::Thm777;
  report.value = value;
  report.certified = true;
  report.parameters = {{"eps", eps}, {"c", c}, {"threshold", threshold}, {"rho", rho}};
  return report;
}

ChainCheck verify_chain(int m, const ExtendedExponent& p, double c) {
  require_777_domain(m, p);
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("c must be a finite non-negative number");
  const double rho = hl_exponent(m, p).to_double();
  const double anchor = std::exp2(1.0 / rho);  // 2^{(mp+p-2m)/(2mp)}

  ChainCheck out;
  out.lhs = pow2(-Rational(padding_count(m)) / p.value()) * std::hypot(2.0, c);
  out.middle = two_norm_rho(anchor, c, 2.0);
  out.rhs = two_norm_rho(anchor, c, rho);
  out.lhs_below_middle = out.lhs < out.middle;
  // The embedding l_rho into l_2 is non-strict; allow a few ulps of
  // rounding between the two evaluation paths.
  out.middle_within_rhs = out.middle <= out.rhs * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
  out.lhs_below_rhs = out.lhs < out.rhs;
  return out;
}

BoundReport certified_quotient(const WitnessFamily& family, const ExtendedExponent& p) {
  const int m = (family.kind == WitnessFamily::Kind::Qm || family.kind == WitnessFamily::Kind::Pm) ? family.m : 2;
  require_degree(m);
  const double rho = exponent_for(m, p).to_double();
  const NormBound bound = closed_form_norm(family, p);
  const HomogeneousPolynomial poly = family.polynomial();
  if (poly.is_zero() || bound.value <= 0.0) throw DomainError("quotient of the zero polynomial");

  BoundReport report;
  report.m = m;
  report.p = p;
  report.method = BoundMethod::Quotient;
  report.value = coefficient_norm(poly, rho) / bound.value;
  report.certified = true;
  report.parameters = {{"rho", rho}, {"norm_bound", bound.value}};
  if (family.kind != WitnessFamily::Kind::P2 && family.kind != WitnessFamily::Kind::Pm)
    report.parameters["c"] = family.c;
  if (report.value < 1.0) report.parameters["below_trivial"] = 1.0;
  return report;
}

double upper_bound_factor(int m, const ExtendedExponent& p) {
  const double outer = outer_exponent_for(m, p).to_double();
  return std::exp(m * std::log(static_cast<double>(m)) - outer * std::lgamma(m + 1.0));
}

BoundReport upper_bound(int m, const ExtendedExponent& p, double cmult) {
  if (!(cmult >= 1.0) || !std::isfinite(cmult)) throw DomainError("multilinear constant must be >= 1");
  BoundReport report;
  report.m = m;
  report.p = p;
  report.method = BoundMethod::UpperFactor;
  report.value = cmult * upper_bound_factor(m, p);
  report.certified = true;
  report.parameters = {{"cmult", cmult}};
  return report;
}

double bh_reference_lower(int m) {
  require_degree(m);
  const double base = 1.0 + std::exp2(1.0 - m);
  const double exponent = m % 2 == 0 ? 0.25 : (m - 1.0) / (4.0 * m);
  return std::pow(base, exponent);
}

Rational real_reference_exponent(int m, const ExtendedExponent& p) {
  require_degree(m);
  if (p.is_infinite() || p < Rational(2 * m))
    throw DomainError("real reference bound needs finite p >= 2m (m=" + std::to_string(m) + ", p=" +
                      p.to_string() + ")");
  const Rational& q = p.value();
  const Rational mr(m);
  return (mr * mr * q + Rational(10) * mr - q - Rational(6) * mr * mr - Rational(4)) / (Rational(4) * mr * q);
}

double real_reference_lower(int m, const ExtendedExponent& p) { return pow2(real_reference_exponent(m, p)); }

BoundReport best_lower_bound(int m, const ExtendedExponent& p) {
  require_degree(m);
  if (p <= Rational(m))
    throw DomainError("no Hardy-Littlewood inequality for p <= m (m=" + std::to_string(m) + ", p=" +
                      p.to_string() + ")");

  BoundReport best;
  best.m = m;
  best.p = p;
  if (p.is_infinite()) {
    best.method = BoundMethod::BhReference;
    best.value = bh_reference_lower(m);
    best.certified = true;
  } else {
    best = lower_bound_main(m, p);
    const bool has_777 = (m % 2 == 0 ? m >= 4 : m >= 5) && p >= Rational(2 * m);
    if (has_777) {
      BoundReport alt = lower_bound_777(m, p, kLargeEpsilon);
      if (alt.value > best.value) best = std::move(alt);
    }
  }
  if (best.value < 1.0) {
    best.value = 1.0;
    best.parameters["trivial"] = 1.0;
  }
  return best;
}

}  // namespace hlb
