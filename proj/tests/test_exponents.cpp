#include <doctest.h>

#include "hlb/errors.hpp"
#include "hlb/exponents.hpp"
#include "hlb/rational.hpp"

using hlb::ExtendedExponent;
using hlb::Rational;

namespace {

ExtendedExponent P(std::int64_t num, std::int64_t den = 1) { return ExtendedExponent::finite(Rational(num, den)); }

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), hlb::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), hlb::DomainError);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), std::overflow_error);
}

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("2.75") == Rational(11, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational(12, 7).to_string() == "12/7");
  CHECK_THROWS_AS(Rational::parse("1e3"), hlb::ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), hlb::ParseError);
  CHECK_THROWS_AS(Rational::parse("3/0"), hlb::ParseError);
  CHECK_THROWS_AS(Rational::parse("2."), hlb::ParseError);
}

TEST_CASE("extended exponent marks infinity explicitly") {
  const ExtendedExponent inf = ExtendedExponent::parse("inf");
  CHECK(inf.is_infinite());
  CHECK(inf > P(1000000));
  CHECK(inf.to_string() == "inf");
  CHECK(ExtendedExponent::parse("5/2") == P(5, 2));
  CHECK_THROWS_AS(inf.value(), hlb::DomainError);
  CHECK_THROWS_AS(ExtendedExponent::finite(Rational(1, 2)), hlb::DomainError);
}

TEST_CASE("hl_exponent examples") {
  CHECK(hlb::hl_exponent(2, P(4)) == Rational(2));
  CHECK(hlb::hl_exponent(3, ExtendedExponent::infinity()) == Rational(3, 2));
  // 2*3*12 / (36 + 12 - 6) = 72/42
  CHECK(hlb::hl_exponent(3, P(12)) == Rational(72, 42));
  CHECK_THROWS_AS(hlb::hl_exponent(3, P(5)), hlb::DomainError);
  CHECK_THROWS_AS(hlb::hl_exponent(1, P(8)), hlb::DomainError);
}

TEST_CASE("hl_exponent_low examples") {
  CHECK(hlb::hl_exponent_low(2, P(3)) == Rational(3));
  CHECK(hlb::hl_exponent_low(3, P(5)) == Rational(5, 2));
  CHECK(hlb::hl_exponent_low(3, P(4)) == Rational(4));
  CHECK_THROWS_AS(hlb::hl_exponent_low(3, P(6)), hlb::DomainError);
  CHECK_THROWS_AS(hlb::hl_exponent_low(3, P(3)), hlb::DomainError);
  CHECK_THROWS_AS(hlb::hl_exponent_low(3, ExtendedExponent::infinity()), hlb::DomainError);
}

TEST_CASE("exponent_for dispatches on the regime") {
  CHECK(hlb::exponent_for(2, P(4)) == Rational(2));
  CHECK(hlb::exponent_for(2, P(3)) == hlb::hl_exponent_low(2, P(3)));
  CHECK(hlb::exponent_for(4, P(7, 1)) == Rational(7, 3));
  CHECK_THROWS_AS(hlb::exponent_for(2, P(2)), hlb::DomainError);
  CHECK_THROWS_AS(hlb::exponent_for(3, P(5, 2)), hlb::DomainError);
}

TEST_CASE("exponent invariants over a rational grid") {
  for (int m = 2; m <= 9; ++m) {
    const Rational limit(2 * m, m + 1);
    CHECK(hlb::hl_exponent(m, P(2 * m)) == Rational(2));
    Rational previous = hlb::hl_exponent(m, P(2 * m));
    for (std::int64_t num = 4 * m + 1; num <= 400; num += 7) {
      const ExtendedExponent p = P(num, 2);
      const Rational rho = hlb::hl_exponent(m, p);
      // strictly decreasing, bounded below by the p = inf limit
      CHECK(rho < previous);
      CHECK(rho > limit);
      CHECK(rho <= Rational(2));
      // cross-multiplication reconstructs 2mp / (mp + p - 2m)
      const Rational& q = p.value();
      CHECK(rho * (Rational(m) * q + q - Rational(2 * m)) == Rational(2 * m) * q);
      previous = rho;
    }
    CHECK((previous - limit).to_double() < 0.05);
    for (std::int64_t num = 2 * m + 1; num < 4 * m; ++num) {
      const Rational low = hlb::hl_exponent_low(m, P(num, 2));
      CHECK(low > Rational(2));
      CHECK(low > hlb::hl_exponent(m, P(2 * m)));
    }
  }
}
