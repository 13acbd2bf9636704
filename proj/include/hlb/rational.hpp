#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hlb {

/// Exact rational number over 64-bit integers, always stored reduced with a
/// positive denominator. Arithmetic throws std::overflow_error instead of
/// wrapping.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  /// Accepts "7", "-3", "5/2", "2.75". Decimals are converted exactly.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// The index p of an l_p space: a finite rational p >= 1, or infinity.
class ExtendedExponent {
public:
  /// Throws DomainError if value < 1.
  static ExtendedExponent finite(Rational value);
  static ExtendedExponent infinity() { return ExtendedExponent{}; }

  /// Accepts "inf", "infinity" or anything Rational::parse accepts.
  static ExtendedExponent parse(std::string_view text);

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws DomainError when infinite.
  const Rational& value() const;

  /// +inf for the infinity marker.
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const ExtendedExponent& a, const ExtendedExponent& b) = default;
  friend std::strong_ordering operator<=>(const ExtendedExponent& a, const ExtendedExponent& b);
  friend std::strong_ordering operator<=>(const ExtendedExponent& a, const Rational& b);
  friend bool operator==(const ExtendedExponent& a, const Rational& b);

private:
  ExtendedExponent() = default;
  explicit ExtendedExponent(Rational value) : value_(value) {}

  std::optional<Rational> value_;
};

}  // namespace hlb
