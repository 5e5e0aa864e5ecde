#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace toricgb {

/// Exact integer of unbounded size.
///
/// Values that fit in 64 bits live inline; anything larger is promoted to a
/// GMP integer. The representation is canonical: `big_` is set iff the value
/// does not fit an `int64_t`. Arithmetic never wraps.
class Integer {
 public:
  Integer() noexcept = default;

  template <std::signed_integral I>
  Integer(I v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT

  template <std::unsigned_integral U>
  Integer(U v) {  // NOLINT
    if (v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(U), 0, 0, &v);
      assign(z);
    }
  }

  explicit Integer(const mpz_class& z) { assign(z); }

  Integer(const Integer& other)
      : small_(other.small_),
        big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other) {
    if (this != &other) {
      small_ = other.small_;
      big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] std::int64_t small_value() const noexcept { return small_; }
  [[nodiscard]] mpz_class to_mpz() const;
  [[nodiscard]] bool fits_int64() const noexcept { return !big_; }
  /// Throws std::overflow_error when the value does not fit.
  [[nodiscard]] std::int64_t to_int64() const;
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && small_ == 1; }

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  /// Truncating division, like the built-in operator. Throws std::domain_error on zero.
  Integer& operator/=(const Integer& rhs);
  Integer& operator%=(const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
  Integer operator-() const;

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  void assign(const mpz_class& z);
  void assign(mpz_class&& z);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& a);
/// Nonnegative greatest common divisor; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
/// Floor division and the matching nonnegative-for-positive-divisor remainder.
Integer floor_div(const Integer& a, const Integer& b);
/// Division known to be exact.
Integer divexact(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& a);

}  // namespace toricgb

template <>
struct std::hash<toricgb::Integer> {
  std::size_t operator()(const toricgb::Integer& a) const noexcept { return a.hash(); }
};
