#include "toricgb/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace toricgb {

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_one()) normalize();
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
    if (!den_.is_one()) normalize();
    return *this;
  }
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (num_.is_zero()) return *this;
  if (rhs.num_.is_zero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  // Cross-cancel first so intermediate products stay small.
  Integer g1 = gcd(num_, rhs.den_);
  Integer g2 = gcd(rhs.num_, den_);
  num_ = divexact(num_, g1) * divexact(rhs.num_, g2);
  den_ = divexact(den_, g2) * divexact(rhs.den_, g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_.is_zero()) throw std::domain_error("rational division by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace toricgb
