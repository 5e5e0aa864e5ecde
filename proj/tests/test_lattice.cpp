#include <gtest/gtest.h>

#include <functional>
#include <limits>

#include "test_seed.hpp"
#include "toricgb/families.hpp"
#include "toricgb/integer.hpp"
#include "toricgb/lattice.hpp"
#include "toricgb/rational.hpp"

using namespace toricgb;
using toricgb::testing::make_rng;

TEST(Integer, PromotesOnOverflow) {
  Integer big = std::numeric_limits<std::int64_t>::max();
  Integer sum = big + Integer(1);
  EXPECT_FALSE(sum.fits_int64());
  EXPECT_EQ(sum.to_string(), "9223372036854775808");
  EXPECT_EQ(sum - Integer(1), big);
  EXPECT_TRUE((sum - Integer(1)).is_small());
  EXPECT_THROW((void)sum.to_int64(), std::overflow_error);
  Integer sq = big * big;
  EXPECT_EQ(divexact(sq, big), big);
}

TEST(Integer, ParseAndGcd) {
  EXPECT_EQ(Integer::parse("-123456789012345678901234567890").to_string(), "-123456789012345678901234567890");
  EXPECT_THROW(Integer::parse("12x"), std::invalid_argument);
  EXPECT_EQ(gcd(Integer(12), Integer(-18)), Integer(6));
  EXPECT_EQ(gcd(Integer(0), Integer(0)), Integer(0));
  EXPECT_THROW(Integer(1) / Integer(0), std::domain_error);
}

TEST(Rational, NormalizesSignAndTerms) {
  Rational q(Integer(4), Integer(-6));
  EXPECT_EQ(q.num(), Integer(-2));
  EXPECT_EQ(q.den(), Integer(3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_TRUE((Rational(1, 2) * Rational(2)).is_integer());
}

TEST(Matvec, FamilyExamples) {
  IntMatrix s6 = scroll_matrix(Partition({7}));
  EXPECT_EQ(matvec(s6, {1, -1, 1, -1, -1, 0, 1}), IntVector({0, 0}));
  EXPECT_EQ(matvec(s6, {1, 0, 1, 0, 0, 0, 1}), IntVector({11, 3}));
  EXPECT_EQ(matvec(s6, IntVector(7)), IntVector(2));
  EXPECT_THROW(matvec(s6, IntVector(3)), DimensionMismatch);
}

TEST(KernelLatticeBasis, Examples) {
  auto b = kernel_lattice_basis(IntMatrix{{1, 2}});
  ASSERT_EQ(b.size(), 1U);
  EXPECT_TRUE(b[0] == IntVector({2, -1}) || b[0] == IntVector({-2, 1}));

  EXPECT_TRUE(kernel_lattice_basis(identity_matrix(3)).empty());

  auto c = kernel_lattice_basis(IntMatrix{{1, 1, 1}});
  ASSERT_EQ(c.size(), 2U);
  for (const auto& v : c) EXPECT_TRUE(matvec(IntMatrix{{1, 1, 1}}, v).is_zero());
}

namespace {

/// Exact solve of sum_i c_i basis_i = v; returns whether an integral c exists.
bool in_integer_span(const std::vector<IntVector>& basis, const IntVector& v) {
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i][j] = Rational(basis[j][i]);
    t[i][k] = Rational(v[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t p = row;
    while (p < n && t[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(t[p], t[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || t[i][col].is_zero()) continue;
      Rational f = t[i][col] / t[row][col];
      for (std::size_t j = col; j <= k; ++j) t[i][j] -= f * t[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (!t[i][k].is_zero()) return false;
  }
  for (std::size_t i = 0; i < row; ++i) {
    if (!(t[i][k] / t[i][pivots[i]]).is_integer()) return false;
  }
  return true;
}

void for_each_box_vector(std::size_t n, int radius, const std::function<void(const IntVector&)>& f) {
  IntVector v(n);
  for (auto& x : v) x = -radius;
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == Integer(radius)) v[i++] = -radius;
    if (i == n) return;
    v[i] += Integer(1);
  }
}

}  // namespace

TEST(KernelLatticeBasis, SaturatedOnRandomMatrices) {
  auto rng = make_rng(1);
  std::uniform_int_distribution<std::size_t> rows(1, 3);
  std::uniform_int_distribution<std::size_t> cols(2, 5);
  for (int t = 0; t < 12; ++t) {
    IntMatrix a = toricgb::testing::random_matrix(rng, rows(rng), cols(rng), -3, 3);
    auto basis = kernel_lattice_basis(a);
    EXPECT_EQ(basis.size(), a.cols() - rank(a)) << a;
    for (const auto& b : basis) EXPECT_TRUE(matvec(a, b).is_zero()) << a;
    for_each_box_vector(a.cols(), 4, [&](const IntVector& v) {
      if (matvec(a, v).is_zero()) {
        EXPECT_TRUE(in_integer_span(basis, v)) << a << v;
      }
    });
  }
}

TEST(KernelLatticeBasis, SaturatedOnSixColumns) {
  IntMatrix a{{1, -2, 3, 0, 2, -1}, {0, 2, -2, 3, 1, 1}};
  auto basis = kernel_lattice_basis(a);
  ASSERT_EQ(basis.size(), 4U);
  for_each_box_vector(6, 4, [&](const IntVector& v) {
    if (matvec(a, v).is_zero()) {
      EXPECT_TRUE(in_integer_span(basis, v)) << v;
    }
  });
}

TEST(SignedVector, PartsAndCanonicalSign) {
  auto rng = make_rng(2);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int t = 0; t < 200; ++t) {
    IntVector v(6);
    for (auto& x : v) x = dist(rng);
    SignedVector u(v);
    EXPECT_EQ(u.plus() - u.minus(), v);
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_TRUE(u.plus()[i].is_zero() || u.minus()[i].is_zero());
      EXPECT_GE(u.plus()[i].sign(), 0);
      EXPECT_GE(u.minus()[i].sign(), 0);
    }
    EXPECT_TRUE(u.canonical().is_canonical());
    EXPECT_TRUE(u.canonical() == u || u.canonical() == u.negated());
  }
  EXPECT_EQ(SignedVector({0, -2, 1}).canonical(), SignedVector({0, 2, -1}));
}

TEST(ConformalLeq, Examples) {
  EXPECT_TRUE(conformal_leq({1, -1, 0}, {2, -1, 1}));
  EXPECT_FALSE(conformal_leq({1, 1}, {1, -1}));
  SignedVector u{3, 0, -2};
  EXPECT_TRUE(conformal_leq(u, u));
}

TEST(ConformalLeq, PartialOrderOnRandomSamples) {
  auto rng = make_rng(3);
  std::uniform_int_distribution<int> dist(-2, 2);
  std::vector<SignedVector> vs;
  for (int t = 0; t < 60; ++t) {
    IntVector v(4);
    for (auto& x : v) x = dist(rng);
    vs.emplace_back(v);
  }
  for (const auto& a : vs) {
    EXPECT_TRUE(conformal_leq(a, a));
    for (const auto& b : vs) {
      if (conformal_leq(a, b) && conformal_leq(b, a)) {
        EXPECT_EQ(a, b);
      }
      for (const auto& c : vs) {
        if (conformal_leq(a, b) && conformal_leq(b, c)) {
          EXPECT_TRUE(conformal_leq(a, c));
        }
      }
    }
  }
}

TEST(BlockType, Examples) {
  const std::vector<std::size_t> two{2, 2};
  EXPECT_EQ(block_type({1, -1, 0, 0}, two), 1U);
  EXPECT_EQ(block_type(IntVector(4), two), 0U);
  const std::vector<std::size_t> one{7};
  EXPECT_EQ(block_type({1, -1, 1, -1, -1, 0, 1}, one), 1U);
  EXPECT_THROW(block_type({1, 0, 0}, two), std::invalid_argument);
}

TEST(CanonicalLess, NormThenLex) {
  EXPECT_TRUE(canonical_less({0, 1, -1}, {1, -2, 1}));
  EXPECT_TRUE(canonical_less({0, 1, -1}, {1, -1, 0}));
  EXPECT_FALSE(canonical_less({1, -1, 0}, {1, -1, 0}));
}
