#include "hlb/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hlb/errors.hpp"

namespace hlb {

unsigned degree_of(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0U); }

HomogeneousPolynomial::HomogeneousPolynomial(std::size_t dimension, unsigned degree)
    : n_(dimension), m_(degree) {
  if (n_ < 1) throw DomainError("polynomial dimension must be >= 1");
  if (m_ < 1) throw DomainError("polynomial degree must be >= 1");
}

HomogeneousPolynomial::HomogeneousPolynomial(std::size_t dimension, unsigned degree,
                                             const std::vector<std::pair<MultiIndex, Complex>>& terms)
    : HomogeneousPolynomial(dimension, degree) {
  for (const auto& [alpha, value] : terms) {
    check_index(alpha);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
      throw DomainError("non-finite polynomial coefficient");
    if (terms_.count(alpha) != 0) throw DomainError("duplicate multi-index in polynomial terms");
    // Keep the slot so later duplicates are detected; zeros are erased below.
    terms_.emplace(alpha, value);
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{}; });
}

void HomogeneousPolynomial::check_index(const MultiIndex& alpha) const {
  if (alpha.size() != n_)
    throw DomainError("multi-index length " + std::to_string(alpha.size()) + " does not match dimension " +
                      std::to_string(n_));
  if (degree_of(alpha) != m_)
    throw DomainError("multi-index degree " + std::to_string(degree_of(alpha)) + " does not match degree " +
                      std::to_string(m_));
}

Complex HomogeneousPolynomial::coefficient(const MultiIndex& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex{} : it->second;
}

HomogeneousPolynomial HomogeneousPolynomial::with_coefficient(const MultiIndex& alpha, Complex value) const {
  check_index(alpha);
  HomogeneousPolynomial out = *this;
  if (value == Complex{})
    out.terms_.erase(alpha);
  else
    out.terms_[alpha] = value;
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(Complex lambda) const {
  HomogeneousPolynomial out(n_, m_);
  if (lambda == Complex{}) return out;
  for (const auto& [alpha, a] : terms_) out.terms_.emplace(alpha, lambda * a);
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::permuted(std::span<const std::size_t> permutation) const {
  if (permutation.size() != n_) throw DomainError("permutation length does not match dimension");
  std::vector<bool> seen(n_, false);
  for (std::size_t k : permutation) {
    if (k >= n_ || seen[k]) throw DomainError("not a permutation");
    seen[k] = true;
  }
  HomogeneousPolynomial out(n_, m_);
  for (const auto& [alpha, a] : terms_) {
    MultiIndex beta(n_);
    for (std::size_t j = 0; j < n_; ++j) beta[j] = alpha[permutation[j]];
    out.terms_.emplace(std::move(beta), a);
  }
  return out;
}

double HomogeneousPolynomial::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& [alpha, a] : terms_) best = std::max(best, std::abs(a));
  return best;
}

Complex integer_power(Complex z, unsigned k) {
  Complex result{1.0, 0.0};
  while (k != 0) {
    if (k & 1U) result *= z;
    k >>= 1U;
    if (k != 0) z *= z;
  }
  return result;
}

Complex evaluate(const HomogeneousPolynomial& poly, std::span<const Complex> z) {
  if (z.size() != poly.dimension())
    throw DomainError("point has length " + std::to_string(z.size()) + ", polynomial dimension is " +
                      std::to_string(poly.dimension()));
  Complex sum{};
  for (const auto& [alpha, a] : poly.terms()) {
    Complex monomial = a;
    for (std::size_t j = 0; j < alpha.size(); ++j)
      if (alpha[j] != 0) monomial *= integer_power(z[j], alpha[j]);
    sum += monomial;
  }
  return sum;
}

Complex evaluate_with_gradient(const HomogeneousPolynomial& poly, std::span<const Complex> z,
                               std::span<Complex> gradient) {
  const std::size_t n = poly.dimension();
  if (z.size() != n || gradient.size() != n) throw DomainError("point/gradient length does not match dimension");
  std::fill(gradient.begin(), gradient.end(), Complex{});

  // factor[j] = z_j^alpha_j; prefix/suffix products give the product over
  // all k != j without dividing by a possibly zero coordinate.
  std::vector<Complex> factor(n), prefix(n + 1), suffix(n + 1);
  Complex sum{};
  for (const auto& [alpha, a] : poly.terms()) {
    for (std::size_t j = 0; j < n; ++j) factor[j] = integer_power(z[j], alpha[j]);
    prefix[0] = Complex{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * factor[j];
    suffix[n] = Complex{1.0, 0.0};
    for (std::size_t j = n; j-- > 0;) suffix[j] = suffix[j + 1] * factor[j];
    sum += a * prefix[n];
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha[j] == 0) continue;
      const Complex dj = static_cast<double>(alpha[j]) * integer_power(z[j], alpha[j] - 1);
      gradient[j] += a * dj * prefix[j] * suffix[j + 1];
    }
  }
  return sum;
}

std::vector<Complex> complex_gradient(const HomogeneousPolynomial& poly, std::span<const Complex> z) {
  std::vector<Complex> gradient(poly.dimension());
  if (z.size() != poly.dimension())
    throw DomainError("point has length " + std::to_string(z.size()) + ", polynomial dimension is " +
                      std::to_string(poly.dimension()));
  evaluate_with_gradient(poly, z, gradient);
  return gradient;
}

double coefficient_norm(const HomogeneousPolynomial& poly, double rho) {
  if (!(rho >= 1.0)) throw DomainError("coefficient norm exponent must be >= 1");
  if (poly.is_zero()) return 0.0;
  if (std::isinf(rho)) return poly.max_abs_coefficient();
  // Scale by the largest modulus so |a|^rho cannot overflow or underflow.
  const double scale = poly.max_abs_coefficient();
  double sum = 0.0;
  for (const auto& [alpha, a] : poly.terms()) sum += std::pow(std::abs(a) / scale, rho);
  return scale * std::pow(sum, 1.0 / rho);
}

HomogeneousPolynomial witness_Q2(double c) { return witness_Qm(2, c); }

HomogeneousPolynomial witness_Qm(int m, double c) {
  if (m < 2) throw DomainError("witness Q_m needs m >= 2");
  const auto padded = [m](unsigned a1, unsigned a2) {
    MultiIndex alpha(static_cast<std::size_t>(m), 1U);
    alpha[0] = a1;
    alpha[1] = a2;
    return alpha;
  };
  return HomogeneousPolynomial(static_cast<std::size_t>(m), static_cast<unsigned>(m),
                               {{padded(2, 0), Complex{1.0, 0.0}},
                                {padded(0, 2), Complex{-1.0, 0.0}},
                                {padded(1, 1), Complex{c, 0.0}}});
}

HomogeneousPolynomial witness_Pm(int m) {
  if (m < 2) throw DomainError("witness P_m needs m >= 2");
  return HomogeneousPolynomial(static_cast<std::size_t>(m), static_cast<unsigned>(m),
                               {{MultiIndex(static_cast<std::size_t>(m), 1U), Complex{1.0, 0.0}}});
}

std::vector<MultiIndex> all_multi_indices(std::size_t n, unsigned m) {
  std::vector<MultiIndex> out;
  MultiIndex current(n, 0U);
  // Recursive fill in lexicographic order: first coordinate varies slowest
  // from 0 upwards.
  auto fill = [&](auto&& self, std::size_t j, unsigned remaining) -> void {
    if (j + 1 == n) {
      current[j] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      current[j] = k;
      self(self, j + 1, remaining - k);
    }
  };
  if (n > 0) fill(fill, 0, m);
  return out;
}

}  // namespace hlb
