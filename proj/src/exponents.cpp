#include "hlb/exponents.hpp"

#include <string>

#include "hlb/errors.hpp"

namespace hlb {
namespace {

void require_degree(int m) {
  if (m < 2) throw DomainError("degree m must be >= 2, got " + std::to_string(m));
}

}  // namespace

Rational hl_exponent(int m, const ExtendedExponent& p) {
  require_degree(m);
  if (p.is_infinite()) return Rational(2 * m, m + 1);
  if (p < Rational(2 * m))
    throw DomainError("hl_exponent needs p >= 2m (m=" + std::to_string(m) + ", p=" + p.to_string() +
                      "); use hl_exponent_low for m < p < 2m");
  const Rational& q = p.value();
  const Rational mr(m);
  return (Rational(2) * mr * q) / (mr * q + q - Rational(2) * mr);
}

Rational hl_exponent_low(int m, const ExtendedExponent& p) {
  require_degree(m);
  if (p.is_infinite() || p <= Rational(m) || p >= Rational(2 * m))
    throw DomainError("hl_exponent_low needs m < p < 2m (m=" + std::to_string(m) + ", p=" + p.to_string() +
                      ")");
  const Rational& q = p.value();
  return q / (q - Rational(m));
}

Rational exponent_for(int m, const ExtendedExponent& p) {
  require_degree(m);
  if (p <= Rational(m))
    throw DomainError("no Hardy-Littlewood inequality for p <= m (m=" + std::to_string(m) +
                      ", p=" + p.to_string() + ")");
  if (p >= Rational(2 * m)) return hl_exponent(m, p);
  return hl_exponent_low(m, p);
}

Rational outer_exponent_for(int m, const ExtendedExponent& p) { return Rational(1) / exponent_for(m, p); }

}  // namespace hlb
