#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace hlb {

using Complex = std::complex<double>;

/// Exponent vector alpha of a monomial z^alpha. Ordered lexicographically.
using MultiIndex = std::vector<unsigned>;

unsigned degree_of(const MultiIndex& alpha);

/// Complex homogeneous polynomial sum_{|alpha| = m} a_alpha z^alpha in n
/// variables, stored sparsely. Immutable once built; terms iterate in
/// lexicographic order of their multi-index.
class HomogeneousPolynomial {
public:
  using TermMap = std::map<MultiIndex, Complex>;

  /// Zero polynomial. Throws DomainError for n < 1 or m < 1.
  HomogeneousPolynomial(std::size_t dimension, unsigned degree);

  /// Validates every multi-index (length n, degree m, no duplicates) and
  /// drops zero coefficients.
  HomogeneousPolynomial(std::size_t dimension, unsigned degree,
                        const std::vector<std::pair<MultiIndex, Complex>>& terms);

  std::size_t dimension() const { return n_; }
  unsigned degree() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of z^alpha (zero when absent).
  Complex coefficient(const MultiIndex& alpha) const;

  /// Copy with one coefficient replaced (removed if zero).
  HomogeneousPolynomial with_coefficient(const MultiIndex& alpha, Complex value) const;

  /// Copy with every coefficient multiplied by lambda.
  HomogeneousPolynomial scaled(Complex lambda) const;

  /// Copy with variables relabeled: variable j of the result is variable
  /// permutation[j] of this polynomial.
  HomogeneousPolynomial permuted(std::span<const std::size_t> permutation) const;

  /// Largest |a_alpha| (0 for the zero polynomial).
  double max_abs_coefficient() const;

  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

private:
  void check_index(const MultiIndex& alpha) const;

  std::size_t n_;
  unsigned m_;
  TermMap terms_;
};

/// z^k by repeated squaring.
Complex integer_power(Complex z, unsigned k);

/// P(z). Throws DomainError when z.size() != n.
Complex evaluate(const HomogeneousPolynomial& poly, std::span<const Complex> z);

/// Value and holomorphic gradient dP/dz_j in one pass.
Complex evaluate_with_gradient(const HomogeneousPolynomial& poly, std::span<const Complex> z,
                               std::span<Complex> gradient);

std::vector<Complex> complex_gradient(const HomogeneousPolynomial& poly, std::span<const Complex> z);

/// (sum |a_alpha|^rho)^(1/rho). Throws DomainError for rho < 1.
double coefficient_norm(const HomogeneousPolynomial& poly, double rho);

/// z1^2 - z2^2 + c z1 z2.
HomogeneousPolynomial witness_Q2(double c);

/// z3 ... zm * Q2(z1, z2) in m variables.
HomogeneousPolynomial witness_Qm(int m, double c);

/// z1 z2 ... zm.
HomogeneousPolynomial witness_Pm(int m);

/// Every multi-index of length n and degree m, lexicographically ordered.
std::vector<MultiIndex> all_multi_indices(std::size_t n, unsigned m);

}  // namespace hlb
