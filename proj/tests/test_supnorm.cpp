#include <doctest.h>

#include <cmath>

#include "hlb/errors.hpp"
#include "hlb/supnorm.hpp"

using hlb::ExtendedExponent;
using hlb::NormBound;
using hlb::OptimizerConfig;
using hlb::WitnessFamily;

namespace {

ExtendedExponent P(std::int64_t p) { return ExtendedExponent::finite(hlb::Rational(p)); }
const ExtendedExponent kInf = ExtendedExponent::infinity();

}  // namespace

TEST_CASE("closed_form_norm examples") {
  const NormBound q = hlb::closed_form_norm(WitnessFamily::q2_tilde(0.0), kInf);
  CHECK(q.value == 2.0);
  CHECK(q.kind == NormBound::Kind::Exact);

  const NormBound p2 = hlb::closed_form_norm(WitnessFamily::p2(), P(4));
  CHECK(p2.value == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK(p2.kind == NormBound::Kind::Exact);

  const NormBound p4 = hlb::closed_form_norm(WitnessFamily::pm(4), P(8));
  CHECK(p4.value == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK(p4.kind == NormBound::Kind::Upper);

  // Odd m reuses the bound of m - 1.
  CHECK(hlb::closed_form_norm(WitnessFamily::pm(5), P(10)).value ==
        doctest::Approx(hlb::closed_form_norm(WitnessFamily::pm(4), P(10)).value));
  CHECK(hlb::closed_form_norm(WitnessFamily::qm(5, 2.0), P(10)).value ==
        doctest::Approx(hlb::closed_form_norm(WitnessFamily::qm(4, 2.0), P(10)).value));
  CHECK(hlb::closed_form_norm(WitnessFamily::qm(4, 3.0), P(8)).value ==
        doctest::Approx(std::sqrt(13.0) * std::exp2(-0.25)));
}

TEST_CASE("closed_form_norm domain errors") {
  CHECK_THROWS_AS(hlb::closed_form_norm(WitnessFamily::q2_tilde(1.0), P(4)), hlb::DomainError);
  CHECK_THROWS_AS(hlb::closed_form_norm(WitnessFamily::p2(), kInf), hlb::DomainError);
  CHECK_THROWS_AS(hlb::closed_form_norm(WitnessFamily::pm(3), ExtendedExponent::finite(hlb::Rational(3, 2))),
                  hlb::DomainError);
}

TEST_CASE("optimizer config validation") {
  CHECK_NOTHROW(OptimizerConfig{}.validate());
  CHECK_THROWS_AS((OptimizerConfig{.starts = 0}.validate()), hlb::DomainError);
  CHECK_THROWS_AS((OptimizerConfig{.max_iterations = 0}.validate()), hlb::DomainError);
  CHECK_THROWS_AS((OptimizerConfig{.gradient_tolerance = 0.0}.validate()), hlb::DomainError);
  CHECK_THROWS_AS((OptimizerConfig{.step_shrink = 1.0}.validate()), hlb::DomainError);
}

TEST_CASE("supnorm_search examples") {
  const auto p2 = hlb::supnorm_search(hlb::witness_Pm(2), P(4));
  CHECK(p2.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
  CHECK(p2.value <= std::sqrt(0.5) + 1e-9);

  const auto q = hlb::supnorm_search(hlb::witness_Q2(0.0), kInf);
  CHECK(std::abs(q.value - 2.0) < 1e-6);

  // Lagrange multipliers: max of r1 r2 r3 on sum r^6 = 1 is 3^{-1/2}.
  const auto p3 = hlb::supnorm_search(hlb::witness_Pm(3), P(6));
  CHECK(std::abs(p3.value - 0.57735026918962576) < 1e-6);
}

TEST_CASE("search results are feasible and consistent") {
  for (const ExtendedExponent& p : {P(3), P(4), P(7), kInf}) {
    const auto est = hlb::supnorm_search(hlb::witness_Qm(3, 1.5), p, {.starts = 8});
    CHECK(std::abs(hlb::lp_norm(est.maximizer, p) - 1.0) <= 1e-12);
    CHECK(est.value == doctest::Approx(std::abs(hlb::evaluate(hlb::witness_Qm(3, 1.5), est.maximizer))));
    CHECK(est.starts_used == 8);
  }
}

TEST_CASE("sharpness on Q2 tilde including negative c") {
  for (double c : {0.0, 1.0, 2.0, 5.0, -1.0, -3.5}) {
    const auto est = hlb::supnorm_search(hlb::witness_Q2(c), kInf);
    CHECK(std::abs(est.value - std::sqrt(4.0 + c * c)) < 1e-6);
  }
}

TEST_CASE("soundness against closed forms") {
  for (int m = 2; m <= 4; ++m) {
    for (double c : {0.0, 0.7, 3.0, 9.5}) {
      const ExtendedExponent p = P(2 * m);
      const auto est = hlb::supnorm_search(hlb::witness_Qm(m, c), p, {.starts = 8});
      CHECK(est.value <= hlb::closed_form_norm(WitnessFamily::qm(m, c), p).value + 1e-9);
    }
    const ExtendedExponent p = P(3 * m);
    const auto est = hlb::supnorm_search(hlb::witness_Pm(m), p, {.starts = 8});
    const double true_norm = std::pow(static_cast<double>(m), -static_cast<double>(m) / (3.0 * m));
    CHECK(std::abs(est.value - true_norm) < 1e-5);
    CHECK(est.value <= hlb::closed_form_norm(WitnessFamily::pm(m), p).value + 1e-9);
  }
}

TEST_CASE("monotone in p") {
  const auto poly = hlb::witness_Qm(3, 2.0);
  double previous = 0.0;
  for (const ExtendedExponent& p : {P(2), P(3), P(6), P(12), kInf}) {
    const double value = hlb::supnorm_search(poly, p, {.starts = 8}).value;
    CHECK(value + 1e-9 >= previous);
    previous = value;
  }
}

TEST_CASE("scale and permutation invariance") {
  const auto poly = hlb::witness_Qm(3, 1.2);
  const OptimizerConfig config{.starts = 8, .seed = 11};
  const double base = hlb::supnorm_search(poly, P(5), config).value;
  const hlb::Complex lambda{-2.5, 1.0};
  CHECK(std::abs(hlb::supnorm_search(poly.scaled(lambda), P(5), config).value - std::abs(lambda) * base) <= 1e-9);
  const std::vector<std::size_t> perm{2, 0, 1};
  CHECK(std::abs(hlb::supnorm_search(poly.permuted(perm), P(5), config).value - base) <= 1e-9);
}

TEST_CASE("deterministic under a fixed seed") {
  const auto poly = hlb::witness_Qm(4, 0.3);
  const OptimizerConfig config{.starts = 4, .seed = 99};
  const auto a = hlb::supnorm_search(poly, P(9), config);
  const auto b = hlb::supnorm_search(poly, P(9), config);
  CHECK(a.value == b.value);
  CHECK(a.maximizer == b.maximizer);
  CHECK(a.status == b.status);
}

TEST_CASE("one variable bypasses the optimizer") {
  const hlb::HomogeneousPolynomial poly(1, 4, {{{4}, hlb::Complex{3.0, -4.0}}});
  const auto est = hlb::supnorm_search(poly, P(3));
  CHECK(est.value == 5.0);
  CHECK(std::abs(hlb::lp_norm(est.maximizer, P(3)) - 1.0) <= 1e-12);
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(hlb::supnorm_search(hlb::HomogeneousPolynomial(2, 2), P(4)), hlb::DomainError);
}

TEST_CASE("lp_norm") {
  const std::vector<hlb::Complex> z{{3.0, 4.0}, {0.0, -12.0}};
  CHECK(hlb::lp_norm(z, P(2)) == doctest::Approx(13.0));
  CHECK(hlb::lp_norm(z, P(1)) == doctest::Approx(17.0));
  CHECK(hlb::lp_norm(z, kInf) == 12.0);
}
