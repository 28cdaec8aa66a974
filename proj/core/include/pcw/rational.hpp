#ifndef PCW_RATIONAL_HPP
#define PCW_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pcw {

/// Exact rational number on 64-bit integers. All weight and distance
/// comparisons on the q-ary symmetric channel go through this type so that
/// equality cases are decided exactly, never by floating point.
///
/// Invariants: denominator > 0, gcd(|num|, den) == 1. Arithmetic throws
/// std::overflow_error if a result does not fit in 64 bits.
class Rational {
 public:
  Rational() = default;

  Rational(std::int64_t numerator, std::int64_t denominator = 1) {
    if (denominator == 0) {
      throw std::domain_error("Rational: zero denominator");
    }
    if (denominator < 0) {
      numerator = checked_negate(numerator);
      denominator = checked_negate(denominator);
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = (g == 0) ? 0 : numerator / g;
    den_ = (g == 0) ? 1 : denominator / g;
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const { return Rational(checked_negate(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const Wide n = Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_;
    return from_wide(n, Wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    const Wide n = Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_;
    return from_wide(n, Wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) noexcept {
    return !(a == b);
  }
  // Cross products fit in 128 bits, so ordering is exact.
  friend bool operator<(const Rational& a, const Rational& b) noexcept {
    return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using Wide = __int128;

  static std::int64_t checked_negate(std::int64_t v) {
    if (v == INT64_MIN) throw std::overflow_error("Rational: negate overflow");
    return -v;
  }

  static Rational from_wide(Wide numerator, Wide denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    const Wide g = wide_gcd(numerator < 0 ? -numerator : numerator, denominator);
    if (g != 0) {
      numerator /= g;
      denominator /= g;
    }
    if (numerator > INT64_MAX || numerator < INT64_MIN || denominator > INT64_MAX) {
      throw std::overflow_error("Rational: result does not fit in 64 bits");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = denominator == 0 ? 1 : static_cast<std::int64_t>(denominator);
    return r;
  }

  static Wide wide_gcd(Wide a, Wide b) noexcept {
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace pcw

#endif  // PCW_RATIONAL_HPP
