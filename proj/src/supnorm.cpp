#include "hlb/supnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "hlb/errors.hpp"
#include "hlb/random.hpp"

namespace hlb {

HomogeneousPolynomial WitnessFamily::polynomial() const {
  switch (kind) {
    case Kind::Q2Tilde:
    case Kind::Q2:
      return witness_Q2(c);
    case Kind::Qm:
      return witness_Qm(m, c);
    case Kind::P2:
      return witness_Pm(2);
    case Kind::Pm:
      return witness_Pm(m);
  }
  throw DomainError("unknown witness family");
}

std::string WitnessFamily::label() const {
  switch (kind) {
    case Kind::Q2Tilde:
      return "Q2~";
    case Kind::Q2:
      return "Q2";
    case Kind::Qm:
      return "Q" + std::to_string(m);
    case Kind::P2:
      return "P2";
    case Kind::Pm:
      return "P" + std::to_string(m);
  }
  return "?";
}

NormBound closed_form_norm(const WitnessFamily& family, const ExtendedExponent& p) {
  const double q2_tilde = std::sqrt(4.0 + family.c * family.c);
  if (family.kind == WitnessFamily::Kind::Q2Tilde) {
    if (p.is_finite()) throw DomainError("Q2~ lives on the polydisc; closed form needs p = inf");
    return {q2_tilde, NormBound::Kind::Exact, family.label()};
  }
  if (p.is_infinite() || p < Rational(2))
    throw DomainError("closed form for " + family.label() + " needs finite p >= 2, got p = " + p.to_string());
  if ((family.kind == WitnessFamily::Kind::Qm || family.kind == WitnessFamily::Kind::Pm) && family.m < 2)
    throw DomainError("witness family needs m >= 2");

  const double pd = p.to_double();
  const int m = family.m;
  // Odd m pads with one more variable than the even bound uses.
  const int even_part = (m % 2 == 0) ? m : m - 1;
  switch (family.kind) {
    case WitnessFamily::Kind::Q2:
      return {q2_tilde, NormBound::Kind::Upper, family.label()};
    case WitnessFamily::Kind::P2:
      return {std::exp2(-2.0 / pd), NormBound::Kind::Exact, family.label()};
    case WitnessFamily::Kind::Pm:
      return {std::exp2(-even_part / pd), m == 2 ? NormBound::Kind::Exact : NormBound::Kind::Upper,
              family.label()};
    case WitnessFamily::Kind::Qm:
      return {std::exp2(-(even_part - 2) / pd) * q2_tilde, NormBound::Kind::Upper, family.label()};
    case WitnessFamily::Kind::Q2Tilde:
      break;
  }
  throw DomainError("unknown witness family");
}

void OptimizerConfig::validate() const {
  if (starts < 1) throw DomainError("optimizer starts must be positive");
  if (max_iterations < 1) throw DomainError("optimizer max_iterations must be positive");
  if (!(gradient_tolerance > 0.0)) throw DomainError("optimizer gradient_tolerance must be positive");
  if (!(step_shrink > 0.0 && step_shrink < 1.0)) throw DomainError("optimizer step_shrink must lie in (0, 1)");
}

std::string to_string(NormEstimate::Status status) {
  return status == NormEstimate::Status::Converged ? "converged" : "max-iterations";
}

namespace {

double magnitude_norm(std::span<const double> r, double p) {
  double big = 0.0;
  for (double x : r) big = std::max(big, x);
  if (std::isinf(p) || big == 0.0) return big;
  double sum = 0.0;
  for (double x : r) sum += std::pow(x / big, p);
  return big * std::pow(sum, 1.0 / p);
}

/// Ascent on f(r, theta) = |P(r e^{i theta})|^2 with the magnitudes kept on
/// the l_p unit sphere (p finite) or in the box [0, 1]^n (p = inf).
class SphereAscent {
public:
  SphereAscent(const HomogeneousPolynomial& poly, double p, const OptimizerConfig& config)
      : poly_(poly), p_(p), config_(config), n_(poly.dimension()), z_(n_), grad_(n_) {}

  struct Point {
    std::vector<double> r, theta;
    double f = 0.0;
  };

  struct Outcome {
    Point best;
    NormEstimate::Status status;
  };

  Outcome run(RandomStream& rng) {
    Point x = random_start(rng);
    std::vector<double> dr(n_), dtheta(n_), prev_dr, prev_dtheta;
    Point prev;
    double step = 1.0;
    for (int iter = 0; iter < config_.max_iterations; ++iter) {
      const double dnorm = ascent_direction(x, dr, dtheta);
      if (dnorm <= config_.gradient_tolerance) return {x, NormEstimate::Status::Converged};

      if (!prev_dr.empty()) step = barzilai_borwein(x, prev, dr, dtheta, prev_dr, prev_dtheta, step);

      bool accepted = false;
      Point trial;
      for (double t = step; t > 1e-18; t *= config_.step_shrink) {
        trial = moved(x, dr, dtheta, t);
        if (trial.f >= x.f + 1e-4 * t * dnorm * dnorm && trial.f > x.f) {
          step = t;
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        // Gradient stalled above tolerance: derivative-free polish.
        if (!coordinate_search(x)) return {x, NormEstimate::Status::Converged};
        prev_dr.clear();
        step = 1.0;
        continue;
      }
      prev = std::move(x);
      prev_dr = dr;
      prev_dtheta = dtheta;
      x = std::move(trial);
    }
    return {x, NormEstimate::Status::MaxIterations};
  }

  /// Exact re-projection of the magnitudes onto the closed unit ball.
  void make_feasible(Point& x) const {
    for (double& v : x.r) v = std::clamp(v, 0.0, std::isinf(p_) ? 1.0 : std::numeric_limits<double>::max());
    if (!std::isinf(p_)) {
      const double s = magnitude_norm(x.r, p_);
      for (double& v : x.r) v /= s;
      while (magnitude_norm(x.r, p_) > 1.0)
        for (double& v : x.r) v *= 1.0 - 4.0 * std::numeric_limits<double>::epsilon();
    }
  }

  std::vector<Complex> point(const Point& x) const {
    std::vector<Complex> z(n_);
    for (std::size_t j = 0; j < n_; ++j) z[j] = std::polar(x.r[j], x.theta[j]);
    return z;
  }

private:
  double objective(const Point& x) {
    for (std::size_t j = 0; j < n_; ++j) z_[j] = std::polar(x.r[j], x.theta[j]);
    const double f = std::norm(evaluate(poly_, z_));
    if (!std::isfinite(f)) throw DomainError("non-finite polynomial evaluation during sup-norm search");
    return f;
  }

  Point random_start(RandomStream& rng) {
    Point x;
    x.r.resize(n_);
    x.theta.resize(n_);
    const double shape = std::isinf(p_) ? 0.0 : 2.0 / p_;
    for (std::size_t j = 0; j < n_; ++j) {
      x.theta[j] = rng.uniform(-std::numbers::pi, std::numbers::pi);
      double g = std::abs(rng.gaussian());
      while (g == 0.0) g = std::abs(rng.gaussian());
      x.r[j] = std::pow(g, shape);
    }
    if (std::isinf(p_)) {
      for (double& v : x.r) v = 1.0;
    } else {
      make_feasible(x);
    }
    x.f = objective(x);
    return x;
  }

  /// Projected gradient of f in (r, theta). Returns its Euclidean norm.
  double ascent_direction(const Point& x, std::vector<double>& dr, std::vector<double>& dtheta) {
    for (std::size_t j = 0; j < n_; ++j) z_[j] = std::polar(x.r[j], x.theta[j]);
    const Complex value = evaluate_with_gradient(poly_, z_, grad_);
    for (std::size_t j = 0; j < n_; ++j) {
      // d|P|^2 = 2 Re(conj(P) dP/dz_j dz_j), dz_j/dr_j = e^{i theta_j},
      // dz_j/dtheta_j = i z_j.
      const Complex w = std::conj(value) * grad_[j];
      dr[j] = 2.0 * (w * std::polar(1.0, x.theta[j])).real();
      dtheta[j] = -2.0 * (w * z_[j]).imag();
    }
    if (std::isinf(p_)) {
      for (std::size_t j = 0; j < n_; ++j)
        if ((x.r[j] >= 1.0 && dr[j] > 0.0) || (x.r[j] <= 0.0 && dr[j] < 0.0)) dr[j] = 0.0;
    } else {
      // Remove the component along the sphere normal r_j^{p-1}.
      std::vector<double> normal(n_);
      for (std::size_t j = 0; j < n_; ++j) normal[j] = x.r[j] > 0.0 ? std::pow(x.r[j], p_ - 1.0) : 0.0;
      double gn = 0.0, nn = 0.0;
      for (std::size_t j = 0; j < n_; ++j) {
        gn += dr[j] * normal[j];
        nn += normal[j] * normal[j];
      }
      if (nn > 0.0)
        for (std::size_t j = 0; j < n_; ++j) dr[j] -= gn / nn * normal[j];
      for (std::size_t j = 0; j < n_; ++j)
        if (x.r[j] <= 0.0 && dr[j] < 0.0) dr[j] = 0.0;
    }
    double sq = 0.0;
    for (std::size_t j = 0; j < n_; ++j) sq += dr[j] * dr[j] + dtheta[j] * dtheta[j];
    return std::sqrt(sq);
  }

  Point moved(const Point& x, std::span<const double> dr, std::span<const double> dtheta, double t) {
    Point y;
    y.r.resize(n_);
    y.theta.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      y.r[j] = std::max(0.0, x.r[j] + t * dr[j]);
      y.theta[j] = std::remainder(x.theta[j] + t * dtheta[j], 2.0 * std::numbers::pi);
    }
    if (std::all_of(y.r.begin(), y.r.end(), [](double v) { return v == 0.0; })) {
      y.f = -1.0;
      return y;
    }
    make_feasible(y);
    y.f = objective(y);
    return y;
  }

  static double barzilai_borwein(const Point& x, const Point& prev, std::span<const double> dr,
                                 std::span<const double> dtheta, std::span<const double> prev_dr,
                                 std::span<const double> prev_dtheta, double fallback) {
    double ss = 0.0, sy = 0.0;
    for (std::size_t j = 0; j < dr.size(); ++j) {
      const double s_r = x.r[j] - prev.r[j];
      const double s_t = std::remainder(x.theta[j] - prev.theta[j], 2.0 * std::numbers::pi);
      // Ascent: the change of the negated gradient plays the role of y.
      const double y_r = prev_dr[j] - dr[j];
      const double y_t = prev_dtheta[j] - dtheta[j];
      ss += s_r * s_r + s_t * s_t;
      sy += s_r * y_r + s_t * y_t;
    }
    if (!(sy > 0.0) || ss == 0.0) return std::min(fallback * 2.0, 1e6);
    return std::clamp(ss / sy, 1e-10, 1e6);
  }

  bool coordinate_search(Point& x) {
    bool improved_any = false;
    for (double h = 1e-3; h > 1e-13; h *= config_.step_shrink) {
      bool improved = false;
      for (std::size_t j = 0; j < 2 * n_; ++j) {
        for (double sign : {1.0, -1.0}) {
          Point y = x;
          if (j < n_)
            y.r[j] = std::max(0.0, y.r[j] + sign * h);
          else
            y.theta[j - n_] += sign * h;
          if (std::all_of(y.r.begin(), y.r.end(), [](double v) { return v == 0.0; })) continue;
          make_feasible(y);
          y.f = objective(y);
          if (y.f > x.f) {
            x = std::move(y);
            improved = true;
          }
        }
      }
      if (improved) {
        improved_any = true;
        break;
      }
    }
    return improved_any;
  }

  const HomogeneousPolynomial& poly_;
  double p_;
  const OptimizerConfig& config_;
  std::size_t n_;
  std::vector<Complex> z_, grad_;
};

}  // namespace

double lp_norm(std::span<const Complex> z, const ExtendedExponent& p) {
  std::vector<double> r(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) r[j] = std::abs(z[j]);
  return magnitude_norm(r, p.to_double());
}

NormEstimate supnorm_search(const HomogeneousPolynomial& poly, const ExtendedExponent& p,
                            const OptimizerConfig& config) {
  config.validate();
  if (poly.is_zero()) throw DomainError("sup-norm search of the zero polynomial");

  const std::size_t n = poly.dimension();
  if (n == 1) {
    NormEstimate out;
    out.value = std::abs(poly.terms().begin()->second);
    out.maximizer = {Complex{1.0, 0.0}};
    out.starts_used = 0;
    return out;
  }

  // Normalizing the coefficients makes the iterates independent of the
  // polynomial's overall scale.
  const double scale = poly.max_abs_coefficient();
  const HomogeneousPolynomial normalized = poly.scaled(Complex{1.0 / scale, 0.0});
  const double pd = p.to_double();
  SphereAscent ascent(normalized, pd, config);
  const RandomStream root(config.seed);

  // Order-independent reduction: max value, ties broken by lower start index.
  std::optional<SphereAscent::Outcome> best;
  for (int s = 0; s < config.starts; ++s) {
    RandomStream rng = root.split(static_cast<std::uint64_t>(s));
    SphereAscent::Outcome outcome = ascent.run(rng);
    ascent.make_feasible(outcome.best);
    outcome.best.f = std::norm(evaluate(normalized, ascent.point(outcome.best)));
    if (!best || outcome.best.f > best->best.f) best = std::move(outcome);
  }

  NormEstimate out;
  out.maximizer = ascent.point(best->best);
  out.value = std::abs(evaluate(poly, out.maximizer));
  if (!std::isfinite(out.value)) throw DomainError("non-finite polynomial evaluation during sup-norm search");
  out.status = best->status;
  out.starts_used = config.starts;
  return out;
}

}  // namespace hlb
