#include "hlb/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hlb/errors.hpp"

namespace hlb {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
  return out;
}

std::int64_t parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ParseError("malformed integer '" + std::string(text) + "'");
  std::int64_t value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed number '" + std::string(text) + "'");
    value = checked_add(checked_mul(value, 10), text[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  if (denominator < 0) {
    if (numerator == std::numeric_limits<std::int64_t>::min() ||
        denominator == std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("rational overflow");
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t d = parse_integer(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), d);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_of("+-") != std::string_view::npos)
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    digits += frac;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale = checked_mul(scale, 10);
    if (digits == "-" || digits == "+") throw ParseError("malformed decimal '" + std::string(text) + "'");
    return Rational(parse_integer(digits), scale);
  }
  return Rational(parse_integer(text));
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
  return Rational(-num_, den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t lhs = checked_mul(a.num_, b.den_ / g);
  const std::int64_t rhs = checked_mul(b.num_, a.den_ / g);
  return Rational(checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const std::int64_t n1 = g1 == 0 ? a.num_ : a.num_ / g1;
  const std::int64_t d2 = g1 == 0 ? b.den_ : b.den_ / g1;
  const std::int64_t n2 = g2 == 0 ? b.num_ : b.num_ / g2;
  const std::int64_t d1 = g2 == 0 ? a.den_ : a.den_ / g2;
  return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __extension__ const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __extension__ const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtendedExponent ExtendedExponent::finite(Rational value) {
  if (value < Rational(1)) throw DomainError("l_p index must be >= 1, got " + value.to_string());
  return ExtendedExponent(value);
}

ExtendedExponent ExtendedExponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") return infinity();
  return finite(Rational::parse(text));
}

const Rational& ExtendedExponent::value() const {
  if (!value_) throw DomainError("p = inf has no finite value");
  return *value_;
}

double ExtendedExponent::to_double() const {
  return value_ ? value_->to_double() : std::numeric_limits<double>::infinity();
}

std::string ExtendedExponent::to_string() const { return value_ ? value_->to_string() : "inf"; }

std::strong_ordering operator<=>(const ExtendedExponent& a, const ExtendedExponent& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.value_ <=> *b.value_;
}

std::strong_ordering operator<=>(const ExtendedExponent& a, const Rational& b) {
  if (a.is_infinite()) return std::strong_ordering::greater;
  return *a.value_ <=> b;
}

bool operator==(const ExtendedExponent& a, const Rational& b) { return a.is_finite() && *a.value_ == b; }

}  // namespace hlb
