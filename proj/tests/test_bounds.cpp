#include <doctest.h>

#include <cmath>

#include "hlb/bounds.hpp"
#include "hlb/errors.hpp"
#include "hlb/random.hpp"

using hlb::BoundMethod;
using hlb::ExtendedExponent;
using hlb::Rational;
using hlb::WitnessFamily;

namespace {

ExtendedExponent P(std::int64_t p) { return ExtendedExponent::finite(Rational(p)); }
const ExtendedExponent kInf = ExtendedExponent::infinity();

// 50-digit reference evaluations (mpmath), truncated to 20 digits.
constexpr double kThreshold4_8 = 1.6817928305074290861;
constexpr double kThreshold5_10 = 2.0638861209507997328;
constexpr double kThreshold6_12 = 1.1852547269843012679;
constexpr double kThreshold4_12 = 2.2623374329794798756;
constexpr double k777_4_8_01 = 1.0099484721965570918;
constexpr double k777_4_8_1 = 1.0777268678194455623;
constexpr double k777_5_10_1 = 1.0594248658683929925;
constexpr double k777_4_12_1 = 1.0683345070012550295;
constexpr double k777_6_16_10 = 1.1829301260811259359;

}  // namespace

TEST_CASE("method labels round trip") {
  for (BoundMethod m : {BoundMethod::Main, BoundMethod::Thm777, BoundMethod::Quotient, BoundMethod::UpperFactor,
                        BoundMethod::BhReference, BoundMethod::RealReference, BoundMethod::Best})
    CHECK(hlb::parse_bound_method(hlb::to_string(m)) == m);
  CHECK_THROWS_AS(hlb::parse_bound_method("nope"), hlb::ParseError);
}

TEST_CASE("lower_bound_main") {
  const auto r = hlb::lower_bound_main(2, P(4));
  CHECK(std::abs(r.value - std::sqrt(2.0)) < 1e-12);
  CHECK(r.certified);
  CHECK(r.method == BoundMethod::Main);
  CHECK(hlb::lower_bound_main(3, P(6)).value == doctest::Approx(1.2599210498948731648).epsilon(1e-15));
  CHECK(hlb::lower_bound_main(5, P(10)).value == doctest::Approx(1.3195079107728942594).epsilon(1e-15));
  CHECK(hlb::lower_bound_main(4, P(1000000)).value == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(hlb::lower_bound_main(3, ExtendedExponent::finite(Rational(7, 2))).value > 1.0);
  CHECK_THROWS_AS(hlb::lower_bound_main(3, P(3)), hlb::DomainError);
  CHECK_THROWS_AS(hlb::lower_bound_main(3, kInf), hlb::DomainError);
  CHECK_THROWS_AS(hlb::lower_bound_main(1, P(4)), hlb::DomainError);
}

TEST_CASE("threshold_c against high-precision values") {
  CHECK(std::abs(hlb::threshold_c(4, P(8)) - kThreshold4_8) < 1e-13);
  CHECK(std::abs(hlb::threshold_c(5, P(10)) - kThreshold5_10) < 1e-13);
  CHECK(std::abs(hlb::threshold_c(6, P(12)) - kThreshold6_12) < 1e-13);
  CHECK(std::abs(hlb::threshold_c(4, P(12)) - kThreshold4_12) < 1e-13);
  CHECK(std::abs(hlb::threshold_c(4, P(8)) - 1.681793) < 1e-5);
  CHECK(std::abs(hlb::threshold_c(5, P(10)) - 2.063890) < 1e-5);
}

TEST_CASE("threshold_c degenerate and out-of-domain") {
  CHECK_THROWS_AS(hlb::threshold_c(2, P(4)), hlb::DegenerateDomainError);
  CHECK_THROWS_AS(hlb::threshold_c(3, P(6)), hlb::DegenerateDomainError);
  CHECK_THROWS_AS(hlb::threshold_c(4, P(7)), hlb::DomainError);
  CHECK_THROWS_AS(hlb::threshold_c(4, kInf), hlb::DomainError);
}

TEST_CASE("lower_bound_777 against high-precision values") {
  CHECK(hlb::lower_bound_777(4, P(8), 0.1).value == doctest::Approx(k777_4_8_01).epsilon(1e-13));
  CHECK(hlb::lower_bound_777(4, P(8), 1.0).value == doctest::Approx(k777_4_8_1).epsilon(1e-13));
  CHECK(hlb::lower_bound_777(5, P(10), 1.0).value == doctest::Approx(k777_5_10_1).epsilon(1e-13));
  CHECK(hlb::lower_bound_777(4, P(12), 1.0).value == doctest::Approx(k777_4_12_1).epsilon(1e-13));
  CHECK(hlb::lower_bound_777(6, P(16), 10.0).value == doctest::Approx(k777_6_16_10).epsilon(1e-13));

  const auto r = hlb::lower_bound_777(4, P(8), 0.1);
  CHECK(r.value > 1.0);
  CHECK(r.certified);
  CHECK(r.parameters.at("c") == doctest::Approx(kThreshold4_8 + 0.1));
  CHECK_THROWS_AS(hlb::lower_bound_777(4, P(8), 0.0), hlb::DomainError);
  CHECK_THROWS_AS(hlb::lower_bound_777(2, P(4), 1.0), hlb::DegenerateDomainError);
}

TEST_CASE("lower_bound_777 limits and dominance") {
  CHECK(std::abs(hlb::lower_bound_777(4, P(8), 1e9).value - std::exp2(0.25)) < 1e-4);
  CHECK(std::abs(hlb::lower_bound_777(5, P(10), 1e9).value - std::exp2(0.2)) < 1e-4);
  for (int m : {4, 5, 6, 7, 8}) {
    const int pad = m % 2 == 0 ? m - 2 : m - 3;
    for (int p : {2 * m, 2 * m + 4, 4 * m}) {
      const double main = hlb::lower_bound_main(m, P(p)).value;
      CHECK(std::abs(hlb::lower_bound_777(m, P(p), 1e9).value - std::exp2(static_cast<double>(pad) / p)) < 1e-4);
      for (double eps : {0.01, 1.0, 10.0, 100.0, 1e4}) {
        const double v = hlb::lower_bound_777(m, P(p), eps).value;
        CHECK(v > 1.0);
        CHECK(v < main);
      }
    }
  }
}

TEST_CASE("verify_chain") {
  const double t = hlb::threshold_c(4, P(8));
  CHECK(hlb::verify_chain(4, P(8), t + 0.1).all());
  const auto below = hlb::verify_chain(4, P(8), 0.5 * t);
  CHECK_FALSE(below.lhs_below_middle);
  CHECK(below.middle_within_rhs);

  hlb::RandomStream rng(2024);
  for (int m : {4, 5, 6, 7}) {
    for (int p : {2 * m, 2 * m + 4}) {
      const double threshold = hlb::threshold_c(m, P(p));
      for (int k = 0; k < 25; ++k) {
        CHECK(hlb::verify_chain(m, P(p), threshold + rng.uniform(1e-3, 50.0)).all());
        CHECK(hlb::verify_chain(m, P(p), rng.uniform(0.0, 2.0 * threshold)).middle_within_rhs);
      }
    }
  }
}

TEST_CASE("certified_quotient") {
  CHECK(hlb::certified_quotient(WitnessFamily::pm(4), P(8)).value == doctest::Approx(std::sqrt(2.0)));
  CHECK(hlb::certified_quotient(WitnessFamily::pm(3), P(6)).value == doctest::Approx(std::cbrt(2.0)));
  const auto q = hlb::certified_quotient(WitnessFamily::q2(0.0), P(4));
  CHECK(q.value == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(q.parameters.at("below_trivial") == 1.0);
  CHECK(q.certified);
  CHECK(hlb::certified_quotient(WitnessFamily::q2_tilde(3.0), kInf).value ==
        doctest::Approx(1.1064040651733462222).epsilon(1e-14));
  CHECK(hlb::certified_quotient(WitnessFamily::qm(4, 1.0), P(8)).value ==
        doctest::Approx(0.92115587031938141434).epsilon(1e-14));
  for (int m = 2; m <= 7; ++m)
    for (int p : {m + 1, 2 * m, 3 * m + 1})
      if (p >= 2)
        CHECK(hlb::certified_quotient(WitnessFamily::pm(m), P(p)).value ==
              doctest::Approx(hlb::lower_bound_main(m, P(p)).value).epsilon(1e-15));
}

TEST_CASE("upper bounds") {
  CHECK(hlb::upper_bound_factor(2, P(4)) == doctest::Approx(2.8284271247461900976).epsilon(1e-14));
  CHECK(hlb::upper_bound_factor(2, kInf) == doctest::Approx(2.3784142300054421334).epsilon(1e-14));
  CHECK(hlb::upper_bound_factor(2, P(3)) == doctest::Approx(3.1748021039363989495).epsilon(1e-14));
  CHECK(hlb::upper_bound_factor(3, P(6)) == doctest::Approx(11.022703842524301442).epsilon(1e-14));

  const double cmult = 3.1915 / std::pow(2.0, 1.5);
  CHECK(std::abs(hlb::upper_bound(2, P(4), cmult).value - 3.1915) < 1e-4);
  CHECK(hlb::upper_bound(3, P(7), 1.0).value == hlb::upper_bound_factor(3, P(7)));
  CHECK_THROWS_AS(hlb::upper_bound(2, P(4), 0.5), hlb::DomainError);
  for (int m = 2; m <= 6; ++m)
    for (int p = m + 1; p <= 4 * m; ++p)
      CHECK(hlb::upper_bound(m, P(p), 1.0).value >= hlb::lower_bound_main(m, P(p)).value);
}

TEST_CASE("reference formulas") {
  CHECK(std::abs(hlb::bh_reference_lower(2) - std::pow(1.5, 0.25)) < 1e-12);
  CHECK(hlb::bh_reference_lower(3) == doctest::Approx(1.0378908155562134373).epsilon(1e-14));
  CHECK(hlb::bh_reference_lower(200) == doctest::Approx(1.0).epsilon(1e-3));

  CHECK(hlb::real_reference_exponent(2, P(4)) == Rational(1, 8));
  CHECK(hlb::real_reference_lower(2, P(4)) == doctest::Approx(1.0905077326652576592).epsilon(1e-14));
  for (int m = 2; m <= 6; ++m)
    for (int p = 2 * m; p <= 4 * m; ++p)
      CHECK(hlb::real_reference_lower(m, P(p)) >= std::exp2(m / 16.0) * (1.0 - 1e-15));
  CHECK_THROWS_AS(hlb::real_reference_lower(3, P(5)), hlb::DomainError);
}

TEST_CASE("best_lower_bound") {
  const auto a = hlb::best_lower_bound(4, P(8));
  CHECK(a.method == BoundMethod::Main);
  CHECK(a.value == doctest::Approx(std::sqrt(2.0)));
  const auto b = hlb::best_lower_bound(2, P(4));
  CHECK(b.method == BoundMethod::Main);
  CHECK(b.value == doctest::Approx(std::sqrt(2.0)));
  const auto c = hlb::best_lower_bound(5, P(10));
  CHECK(c.method == BoundMethod::Main);
  CHECK(c.value == doctest::Approx(std::exp2(0.4)));
  const auto d = hlb::best_lower_bound(2, kInf);
  CHECK(d.method == BoundMethod::BhReference);
  CHECK(d.value >= 1.0);
  CHECK_THROWS_AS(hlb::best_lower_bound(3, P(2)), hlb::DomainError);
}
