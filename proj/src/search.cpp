#include "hlb/search.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hlb/bounds.hpp"
#include "hlb/errors.hpp"
#include "hlb/exponents.hpp"
#include "hlb/random.hpp"

namespace hlb {
namespace {

double q_quotient(int m, const ExtendedExponent& p, double c) {
  return certified_quotient(WitnessFamily::qm(m, c), p).value;
}

HomogeneousPolynomial default_start(std::size_t n, int m) {
  MultiIndex alpha(n, 0U);
  if (n >= static_cast<std::size_t>(m)) {
    std::fill_n(alpha.begin(), m, 1U);
  } else {
    std::fill(alpha.begin(), alpha.end(), 1U);
    alpha[0] = static_cast<unsigned>(m) - static_cast<unsigned>(n) + 1U;
  }
  return HomogeneousPolynomial(n, static_cast<unsigned>(m), {{alpha, Complex{1.0, 0.0}}});
}

}  // namespace

SearchResult optimize_c(int m, const ExtendedExponent& p, const SearchConfig& config) {
  if (!std::isfinite(config.c_min) || !std::isfinite(config.c_max) || !(config.c_min < config.c_max))
    throw DomainError("c range must satisfy c_min < c_max");
  if (config.grid_points < 1) throw DomainError("grid_points must be positive");
  if (config.refine_iterations < 0) throw DomainError("refine_iterations must be non-negative");
  if (m < 2) throw DomainError("Q-family needs m >= 2");
  if (p.is_infinite() || p < Rational(2 * m)) throw DomainError("optimize_c needs finite p >= 2m");

  const int points = std::max(config.grid_points, 2);
  const double width = (config.c_max - config.c_min) / (points - 1);
  const auto grid_c = [&](int i) { return i == points - 1 ? config.c_max : config.c_min + i * width; };

  double best_c = config.c_min;
  double best_value = -1.0;
  int best_cell = 0;
  const auto consider = [&](double c, double value) {
    if (value > best_value) {
      best_value = value;
      best_c = c;
    }
  };
  for (int i = 0; i < points; ++i) {
    const double c = grid_c(i);
    const double value = q_quotient(m, p, c);
    if (value > best_value) best_cell = i;
    consider(c, value);
  }

  // Golden-section maximization on the two cells around the grid optimum.
  double lo = grid_c(std::max(best_cell - 1, 0));
  double hi = grid_c(std::min(best_cell + 1, points - 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = q_quotient(m, p, x1);
  double f2 = q_quotient(m, p, x2);
  consider(x1, f1);
  consider(x2, f2);
  for (int it = 0; it < config.refine_iterations; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = q_quotient(m, p, x2);
      consider(x2, f2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = q_quotient(m, p, x1);
      consider(x1, f1);
    }
  }

  // Report exactly the quotient recomputed at the chosen c.
  const BoundReport report = certified_quotient(WitnessFamily::qm(m, best_c), p);
  SearchResult result;
  result.best_value = report.value;
  result.certified = true;
  result.witness = witness_Qm(m, best_c);
  result.parameters = {{"c", best_c}, {"rho", report.parameters.at("rho")}, {"norm_bound", report.parameters.at("norm_bound")}};
  return result;
}

SearchResult heuristic_witness_search(std::size_t n, int m, const ExtendedExponent& p, const SearchConfig& config,
                                      const std::optional<HomogeneousPolynomial>& start) {
  if (n < 2 || m < 2) throw DomainError("heuristic search needs n >= 2 and m >= 2");
  if (config.refine_iterations < 0) throw DomainError("refine_iterations must be non-negative");
  if (config.coefficient_count_limit < 1) throw DomainError("coefficient_count_limit must be positive");
  config.norm_config.validate();
  const double rho = exponent_for(m, p).to_double();

  HomogeneousPolynomial current = start.value_or(default_start(n, m));
  if (current.dimension() != n || current.degree() != static_cast<unsigned>(m))
    throw DomainError("start polynomial does not match (n, m)");
  if (current.is_zero()) throw DomainError("start polynomial is zero");
  if (current.terms().size() > static_cast<std::size_t>(config.coefficient_count_limit))
    throw DomainError("start polynomial has more terms than coefficient_count_limit");

  const RandomStream root(config.seed);
  const auto quotient = [&](const HomogeneousPolynomial& poly, std::uint64_t k) {
    OptimizerConfig inner = config.norm_config;
    inner.seed = mix64(config.seed ^ mix64(k));
    return coefficient_norm(poly, rho) / supnorm_search(poly, p, inner).value;
  };

  const std::vector<MultiIndex> indices = all_multi_indices(n, static_cast<unsigned>(m));
  double current_value = quotient(current, 0);
  const double start_value = current_value;
  double scale = 0.5 * current.max_abs_coefficient();
  int accepted = 0;

  for (int k = 0; k < config.refine_iterations; ++k) {
    RandomStream rng = root.split(static_cast<std::uint64_t>(k));
    MultiIndex alpha;
    if (current.terms().size() < static_cast<std::size_t>(config.coefficient_count_limit)) {
      alpha = indices[rng.below(indices.size())];
    } else {
      auto it = current.terms().begin();
      std::advance(it, static_cast<std::ptrdiff_t>(rng.below(current.terms().size())));
      alpha = it->first;
    }
    const Complex step{scale * rng.gaussian(), scale * rng.gaussian()};
    const HomogeneousPolynomial candidate = current.with_coefficient(alpha, current.coefficient(alpha) + step);
    if (candidate.is_zero()) {
      scale *= 0.9;
      continue;
    }
    const double value = quotient(candidate, static_cast<std::uint64_t>(k) + 1);
    if (value > current_value) {
      current = candidate;
      current_value = value;
      ++accepted;
    } else {
      scale *= 0.9;
    }
  }

  SearchResult result;
  result.best_value = current_value;
  result.certified = false;
  result.witness = current;
  result.parameters = {{"rho", rho},
                       {"start_value", start_value},
                       {"accepted", static_cast<double>(accepted)},
                       {"proposals", static_cast<double>(config.refine_iterations)}};
  return result;
}

}  // namespace hlb
