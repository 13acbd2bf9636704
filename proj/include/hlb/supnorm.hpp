#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlb/polynomial.hpp"
#include "hlb/rational.hpp"

namespace hlb {

/// One member of the explicit witness families with known sup-norms.
struct WitnessFamily {
  enum class Kind {
    Q2Tilde,  ///< z1^2 - z2^2 + c z1 z2 on the polydisc (p = inf)
    Q2,       ///< same polynomial on l_p^2
    Qm,       ///< z3...zm * Q2(z1, z2) on l_p^m
    P2,       ///< z1 z2 on l_p^2
    Pm,       ///< z1...zm on l_p^m
  };

  Kind kind = Kind::Pm;
  int m = 2;
  double c = 0.0;

  static WitnessFamily q2_tilde(double c) { return {Kind::Q2Tilde, 2, c}; }
  static WitnessFamily q2(double c) { return {Kind::Q2, 2, c}; }
  static WitnessFamily qm(int m, double c) { return {Kind::Qm, m, c}; }
  static WitnessFamily p2() { return {Kind::P2, 2, 0.0}; }
  static WitnessFamily pm(int m) { return {Kind::Pm, m, 0.0}; }

  HomogeneousPolynomial polynomial() const;
  std::string label() const;
};

/// Closed-form sup-norm value of a witness family member.
struct NormBound {
  enum class Kind { Exact, Upper };

  double value = 0.0;
  Kind kind = Kind::Upper;
  std::string family;
};

/// Sup-norm over the unit ball of l_p from the closed forms. Q2Tilde needs
/// p = inf; every other family needs finite p >= 2. Throws DomainError on an
/// incompatible p.
NormBound closed_form_norm(const WitnessFamily& family, const ExtendedExponent& p);

struct OptimizerConfig {
  int starts = 32;
  int max_iterations = 5000;
  double gradient_tolerance = 1e-10;
  std::uint64_t seed = 0;
  double step_shrink = 0.5;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

/// Best feasible point found by supnorm_search. Its value is attained at a
/// point of the closed unit ball, so it never exceeds the true sup-norm.
struct NormEstimate {
  enum class Status { Converged, MaxIterations };

  double value = 0.0;
  std::vector<Complex> maximizer;
  Status status = Status::Converged;
  int starts_used = 0;
};

std::string to_string(NormEstimate::Status status);

/// l_p norm of a complex vector (max modulus for p = inf).
double lp_norm(std::span<const Complex> z, const ExtendedExponent& p);

/// Multi-start projected ascent of |P|^2 over the l_p unit sphere in
/// magnitude/phase coordinates. Deterministic for fixed inputs. Throws
/// DomainError for the zero polynomial or a non-finite evaluation.
NormEstimate supnorm_search(const HomogeneousPolynomial& poly, const ExtendedExponent& p,
                            const OptimizerConfig& config = {});

}  // namespace hlb
