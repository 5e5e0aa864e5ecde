#include "toricgb/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace toricgb {

namespace {

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

static_assert(sizeof(long) == sizeof(std::int64_t), "expects LP64");

}  // namespace

void Integer::assign(const mpz_class& z) {
  if (fits(z)) {
    small_ = z.get_si();
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(z);
  }
}

void Integer::assign(mpz_class&& z) {
  if (fits(z)) {
    small_ = z.get_si();
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(std::move(z));
  }
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

mpz_class Integer::to_mpz() const {
  if (big_) return *big_;
  return mpz_class(static_cast<long>(small_));
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return small_;
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str();
  return std::to_string(small_);
}

int Integer::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(mpz_class(to_mpz() + rhs.to_mpz()));
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(mpz_class(to_mpz() - rhs.to_mpz()));
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(mpz_class(to_mpz() * rhs.to_mpz()));
  return *this;
}

Integer& Integer::operator/=(const Integer& rhs) {
  if (rhs.is_zero()) throw std::domain_error("integer division by zero");
  if (!big_ && !rhs.big_ &&
      !(small_ == std::numeric_limits<std::int64_t>::min() && rhs.small_ == -1)) {
    small_ /= rhs.small_;
    return *this;
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), to_mpz().get_mpz_t(), rhs.to_mpz().get_mpz_t());
  assign(std::move(q));
  return *this;
}

Integer& Integer::operator%=(const Integer& rhs) {
  if (rhs.is_zero()) throw std::domain_error("integer division by zero");
  if (!big_ && !rhs.big_) {
    small_ = (rhs.small_ == -1) ? 0 : small_ % rhs.small_;
    return *this;
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), rhs.to_mpz().get_mpz_t());
  assign(std::move(r));
  return *this;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
  return false;  // canonical form: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c;
  if (a.big_ && b.big_) {
    c = cmp(*a.big_, *b.big_);
  } else if (a.big_) {
    c = sgn(*a.big_);
  } else {
    c = -sgn(*b.big_);
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  std::size_t h = static_cast<std::size_t>(sgn(*big_));
  const mpz_srcptr p = big_->get_mpz_t();
  for (std::size_t i = 0; i < mpz_size(p); ++i) {
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i)));
  }
  return h;
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    std::uint64_t x = a.small_value() < 0 ? 0 - static_cast<std::uint64_t>(a.small_value())
                                          : static_cast<std::uint64_t>(a.small_value());
    std::uint64_t y = b.small_value() < 0 ? 0 - static_cast<std::uint64_t>(b.small_value())
                                          : static_cast<std::uint64_t>(b.small_value());
    while (y != 0) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (a.is_small() && b.is_small() &&
      !(a.small_value() == std::numeric_limits<std::int64_t>::min() && b.small_value() == -1)) {
    std::int64_t q = a.small_value() / b.small_value();
    std::int64_t r = a.small_value() % b.small_value();
    if (r != 0 && ((r < 0) != (b.small_value() < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer divexact(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && b.small_value() != -1) {
    return Integer(a.small_value() / b.small_value());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

}  // namespace toricgb
