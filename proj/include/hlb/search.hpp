#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hlb/polynomial.hpp"
#include "hlb/rational.hpp"
#include "hlb/supnorm.hpp"

namespace hlb {

struct SearchConfig {
  double c_min = 0.0;
  double c_max = 100.0;
  int grid_points = 512;
  /// Golden-section steps for optimize_c; number of coefficient proposals
  /// for the heuristic search (0 evaluates the start only).
  int refine_iterations = 60;
  std::uint64_t seed = 0;
  int coefficient_count_limit = 8;
  /// Inner sup-norm estimator used by the heuristic search.
  OptimizerConfig norm_config{.starts = 8, .max_iterations = 2000};
};

struct SearchResult {
  double best_value = 0.0;
  bool certified = false;
  HomogeneousPolynomial witness{1, 1};
  std::map<std::string, double> parameters;
};

/// Maximizes the certified Q_m quotient over c in [c_min, c_max]: a uniform
/// grid scan followed by golden-section refinement around the best cell.
/// Needs finite p >= 2m.
SearchResult optimize_c(int m, const ExtendedExponent& p, const SearchConfig& config);

/// Random coordinate perturbation of the coefficients to enlarge
/// coefficient_norm(P, rho) / supnorm_search(P, p). The denominator is only a
/// lower estimate of the true norm, so results are never certified.
/// Starts from `start` when given, otherwise from z1...zm (padded to n).
SearchResult heuristic_witness_search(std::size_t n, int m, const ExtendedExponent& p,
                                      const SearchConfig& config,
                                      const std::optional<HomogeneousPolynomial>& start = std::nullopt);

}  // namespace hlb
