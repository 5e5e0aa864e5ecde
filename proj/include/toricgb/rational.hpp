#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "toricgb/integer.hpp"

namespace toricgb {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Integer n) : num_(std::move(n)) {}  // NOLINT
  template <std::integral I>
  Rational(I n) : num_(n) {}  // NOLINT
  /// Throws std::domain_error on a zero denominator.
  Rational(Integer n, Integer d);

  /// Accepts "p" or "p/q".
  static Rational parse(std::string_view text);

  [[nodiscard]] const Integer& num() const noexcept { return num_; }
  [[nodiscard]] const Integer& den() const noexcept { return den_; }
  [[nodiscard]] int sign() const noexcept { return num_.sign(); }
  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
  [[nodiscard]] bool is_integer() const noexcept { return den_.is_one(); }
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace toricgb
