#include <gtest/gtest.h>

#include <algorithm>

#include "test_seed.hpp"
#include "toricgb/families.hpp"
#include "toricgb/fiber.hpp"
#include "toricgb/oracle.hpp"

using namespace toricgb;

namespace {

const IntMatrix& curve6() {
  static const IntMatrix a = scroll_matrix(Partition({7}));
  return a;
}

}  // namespace

TEST(EnumerateFiber, CurveExample) {
  Fiber f = enumerate_fiber(curve6(), {11, 3});
  EXPECT_EQ(f.size(), 8U);
  EXPECT_EQ(f.size(), oracle::count_curve_fiber(11, 3, 7));
  for (const IntVector& p : {IntVector{1, 0, 1, 0, 0, 0, 1}, IntVector{0, 1, 0, 1, 1, 0, 0},
                             IntVector{1, 0, 0, 0, 2, 0, 0}, IntVector{0, 2, 0, 0, 0, 0, 1},
                             IntVector{0, 0, 1, 2, 0, 0, 0}}) {
    EXPECT_TRUE(f.contains(p)) << p;
  }
  EXPECT_TRUE(std::is_sorted(f.points.begin(), f.points.end()));
  EXPECT_TRUE(std::adjacent_find(f.points.begin(), f.points.end()) == f.points.end());
  for (const auto& p : f.points) EXPECT_EQ(matvec(curve6(), p), IntVector({11, 3}));
}

TEST(EnumerateFiber, TinyRightHandSides) {
  Fiber one = enumerate_fiber(curve6(), {1, 1});
  EXPECT_EQ(one.points, (std::vector<IntVector>{{1, 0, 0, 0, 0, 0, 0}}));
  EXPECT_TRUE(enumerate_fiber(curve6(), {0, 1}).points.empty());
  EXPECT_EQ(enumerate_fiber(curve6(), {0, 0}).points, (std::vector<IntVector>{IntVector(7)}));
}

TEST(EnumerateFiber, RejectsBadInput) {
  EXPECT_THROW(enumerate_fiber(IntMatrix{{1, 0}, {1, 0}}, {1, 1}), PreconditionError);
  EXPECT_THROW(enumerate_fiber(IntMatrix{{1, -1}}, {1}), PreconditionError);
  EXPECT_THROW(enumerate_fiber(IntMatrix{{1, 1}}, {-1}), PreconditionError);
  EXPECT_THROW(enumerate_fiber(IntMatrix{{1, 1}}, {1, 1}), DimensionMismatch);
}

TEST(EnumerateFiber, CurveCountsMatchPartitionCounter) {
  for (std::size_t m = 1; m <= 7; ++m) {
    IntMatrix a = scroll_matrix(Partition({m}));
    for (std::size_t d = 0; d <= 4; ++d) {
      for (std::size_t w = 0; w <= 15; ++w) {
        EXPECT_EQ(enumerate_fiber(a, {Integer(w), Integer(d)}).size(), oracle::count_curve_fiber(w, d, m))
            << "w=" << w << " d=" << d << " m=" << m;
      }
    }
  }
}

TEST(EnumerateFiber, MatchesBoxSearch) {
  auto rng = toricgb::testing::make_rng(30);
  std::uniform_int_distribution<int> rhs(0, 6);
  for (int t = 0; t < 40; ++t) {
    IntMatrix a = toricgb::testing::random_fiber_matrix(rng, 2, 4, 3);
    IntVector b{rhs(rng), rhs(rng)};
    EXPECT_EQ(enumerate_fiber(a, b).points, oracle::fiber_by_box(a, b)) << a << b;
  }
}

TEST(IsVertex, Examples) {
  IntMatrix a = scroll_matrix(Partition({6, 5}));
  SignedVector g{1, -1, 0, 0, 1, -1, 1, -2, 0, 0, 1};
  Fiber f = enumerate_fiber(a, matvec(a, g.plus()));
  EXPECT_FALSE(is_vertex(g.plus(), f));

  Fiber two = enumerate_fiber(IntMatrix{{1, 2, 3}, {1, 1, 1}}, {4, 2});
  ASSERT_EQ(two.size(), 2U);
  for (const auto& p : two.points) EXPECT_TRUE(is_vertex(p, two));

  Fiber single = enumerate_fiber(curve6(), {1, 1});
  EXPECT_TRUE(is_vertex(single.points[0], single));
  EXPECT_THROW(is_vertex({0, 1, 0, 0, 0, 0, 0}, single), std::invalid_argument);
}

TEST(UgbMember, Examples) {
  EXPECT_FALSE(ugb_member({1, -1, 1, -1, -1, 0, 1}, curve6()));
  EXPECT_TRUE(ugb_member({1, -2, 1}, IntMatrix{{1, 2, 3}, {1, 1, 1}}));
  EXPECT_FALSE(ugb_member({1, 2, 1, -2, -3, 0, 1}, h_matrix(Partition({4, 3}))));
}

TEST(UgbTest, StagesAndCertificates) {
  UgbResult r = ugb_test({1, 2, 1, -2, -3, 0, 1}, h_matrix(Partition({4, 3})));
  EXPECT_EQ(r.stage, UgbStage::PlusNotVertex);
  Rational total;
  for (const auto& c : r.coefficients) {
    EXPECT_GT(c.sign(), 0);
    total += c;
  }
  EXPECT_EQ(total, Rational(1));

  UgbOptions full;
  full.restrict_to_support = false;
  UgbResult s = ugb_test({1, -1, 1, -1, -1, 0, 1}, curve6(), full);
  EXPECT_EQ(s.stage, UgbStage::NotEdge);
  EXPECT_EQ(s.fiber_size, 8U);
  IntVector sum(7);
  const IntVector minus = SignedVector{1, -1, 1, -1, -1, 0, 1}.minus();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    ASSERT_TRUE(s.coefficients[i].is_integer());
    sum += s.coefficients[i].num() * (s.points[i] - minus);
  }
  EXPECT_EQ(sum, IntVector({1, -1, 1, -1, -1, 0, 1}));
}

TEST(UgbMember, Preconditions) {
  EXPECT_THROW(ugb_member({1, 1, 1}, IntMatrix{{1, 2, 3}, {1, 1, 1}}), PreconditionError);
  EXPECT_THROW(ugb_member({0, 0, 0}, IntMatrix{{1, 2, 3}, {1, 1, 1}}), PreconditionError);
  EXPECT_THROW(ugb_member({1, -1, 0}, IntMatrix{{1, 1, 0}}), PreconditionError);
}

TEST(UgbMember, OnlyGraverElementsPass) {
  IntMatrix a = scroll_matrix(Partition({4, 3}));
  auto kernel = oracle::enumerate_kernel_bounded({a, 6});
  auto primitive = oracle::filter_primitive(kernel);
  for (const auto& u : kernel) {
    if (ugb_member(u, a)) {
      EXPECT_TRUE(std::find(primitive.begin(), primitive.end(), u) != primitive.end()) << u.base();
    }
  }
}

TEST(UgbTest, SupportRestrictionDoesNotChangeAnswer) {
  for (const IntMatrix& a : {scroll_matrix(Partition({7})), h_matrix(Partition({6, 2})), h_matrix(Partition({4, 3})),
                             scroll_matrix(Partition({4, 4}))}) {
    UgbOptions full;
    full.restrict_to_support = false;
    const GraverBasis g_a = graver_basis(a);
    for (const auto& g : g_a.elements()) {
      EXPECT_EQ(ugb_test(g, a).member, ugb_test(g, a, full).member) << a << g.base();
    }
  }
}

TEST(UgbTest, ProjectionInvariance) {
  auto rng = toricgb::testing::make_rng(31);
  auto rep = toricgb::testing::check_projection_invariance(rng, 25);
  EXPECT_EQ(rep.checked, 25U);
  for (const auto& f : rep.failures) ADD_FAILURE() << f;
}

TEST(RestrictSupport, Examples) {
  IntMatrix a{{1, 2, 3, 4}, {5, 6, 7, 8}};
  const std::vector<std::size_t> sigma{1, 2};
  Restriction r = restrict_support({0, 2, -1, 0}, a, sigma);
  EXPECT_EQ(r.u, SignedVector({2, -1}));
  EXPECT_EQ(r.a, (IntMatrix{{2, 3}, {6, 7}}));

  const std::vector<std::size_t> all{0, 1, 2, 3};
  Restriction id = restrict_support({1, 0, -1, 2}, a, all);
  EXPECT_EQ(id.a, a);
  EXPECT_EQ(id.u, SignedVector({1, 0, -1, 2}));

  EXPECT_THROW(restrict_support({1, 2, -1, 0}, a, sigma), std::invalid_argument);
}

TEST(RestrictSupport, BlockOfTwoCurves) {
  IntMatrix a = scroll_matrix(Partition({7, 7}));
  IntVector u(14);
  const std::vector<int> g{1, -1, 1, -1, -1, 0, 1};
  for (std::size_t i = 0; i < 7; ++i) u[i] = g[i];
  std::vector<std::size_t> block{0, 1, 2, 3, 4, 5, 6};
  Restriction r = restrict_support(SignedVector(u), a, block, true);
  EXPECT_EQ(r.a, curve6());
  EXPECT_EQ(r.u, SignedVector({1, -1, 1, -1, -1, 0, 1}));
  EXPECT_FALSE(ugb_member(SignedVector(u), a));
}

TEST(FiberCache, StoresUntilBudget) {
  FiberCache cache(10);
  const std::vector<std::size_t> cols{0, 1, 2, 3, 4, 5, 6};
  auto f = cache.insert(cols, {11, 3}, enumerate_fiber(curve6(), {11, 3}));
  EXPECT_EQ(f->size(), 8U);
  EXPECT_EQ(cache.find(cols, {11, 3}), f);
  cache.insert(cols, {12, 3}, enumerate_fiber(curve6(), {12, 3}));
  EXPECT_EQ(cache.size(), 1U);
  EXPECT_EQ(cache.find(cols, {12, 3}), nullptr);
}
