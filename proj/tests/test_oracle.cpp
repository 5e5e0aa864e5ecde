#include <gtest/gtest.h>

#include <algorithm>

#include "test_seed.hpp"
#include "toricgb/families.hpp"
#include "toricgb/oracle.hpp"

using namespace toricgb;
using namespace toricgb::oracle;

TEST(EnumerateKernelBounded, Examples) {
  EXPECT_EQ(enumerate_kernel_bounded({IntMatrix{{1, 2}}, 3}), (std::vector<SignedVector>{{2, -1}}));
  EXPECT_EQ(enumerate_kernel_bounded({IntMatrix{{1, 1, 1}}, 2}),
            (std::vector<SignedVector>{{0, 1, -1}, {1, -1, 0}, {1, 0, -1}}));
  const IntMatrix s6 = scroll_matrix(Partition({7}));
  const SignedVector g{1, -1, 1, -1, -1, 0, 1};
  auto five = enumerate_kernel_bounded({s6, 5});
  auto six = enumerate_kernel_bounded({s6, 6});
  EXPECT_TRUE(std::find(five.begin(), five.end(), g) == five.end());
  EXPECT_TRUE(std::find(six.begin(), six.end(), g) != six.end());
}

TEST(FilterPrimitive, Examples) {
  EXPECT_EQ(filter_primitive({{2, -1}, {4, -2}}), (std::vector<SignedVector>{{2, -1}}));
  const std::vector<SignedVector> flat{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
  EXPECT_EQ(filter_primitive(flat), flat);
  auto g = filter_primitive(enumerate_kernel_bounded({IntMatrix{{1, 2, 3}}, 5}));
  Integer top = 0;
  for (const auto& v : g) top = std::max(top, v.one_norm());
  EXPECT_EQ(top, Integer(5));
}

TEST(CountCurveFiber, Examples) {
  EXPECT_EQ(count_curve_fiber(11, 3, 7), 8U);
  EXPECT_EQ(count_curve_fiber(1, 1, 7), 1U);
  EXPECT_EQ(count_curve_fiber(0, 1, 7), 0U);
  EXPECT_EQ(count_curve_fiber(0, 0, 7), 1U);
}

TEST(FiberByBox, Small) {
  EXPECT_EQ(fiber_by_box(IntMatrix{{1, 2, 3}, {1, 1, 1}}, {4, 2}), (std::vector<IntVector>{{0, 2, 0}, {1, 0, 1}}));
}

TEST(Oracle, AgreesWithEngineOnFamilies) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (const IntMatrix& a : {scroll_matrix(p), h_matrix(p)}) {
        GraverBasis g = graver_basis(a);
        const auto bound = static_cast<std::size_t>(max_one_norm(g).to_int64());
        if (bound > 10) continue;
        EXPECT_EQ(filter_primitive(enumerate_kernel_bounded({a, std::max<std::size_t>(bound, 1)})), g.elements())
            << a;
      }
    }
  }
}
