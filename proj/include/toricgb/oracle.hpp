#pragma once

#include <cstddef>
#include <vector>

#include "toricgb/lattice.hpp"

namespace toricgb::oracle {

/// Brute-force reference implementations. They depend only on the core
/// vector and matrix types.

struct BoundedEnumSpec {
  IntMatrix matrix;
  std::size_t norm_bound = 1;
};

/// Every nonzero u with A u = 0 and |u|_1 <= norm_bound, canonical sign,
/// sorted by 1-norm then lexicographically.
std::vector<SignedVector> enumerate_kernel_bounded(const BoundedEnumSpec& spec);

/// Drops every vector that lies conformally above a different input or its
/// negation. Output keeps input order.
std::vector<SignedVector> filter_primitive(const std::vector<SignedVector>& vs);

/// Number of multisets of `degree` integers from [1, max_part] summing to `weight`.
std::size_t count_curve_fiber(std::size_t weight, std::size_t degree, std::size_t max_part);

/// Whether {x >= 0 : a x = b} is nonempty, decided by trying every column
/// subset as a basis. Exponential in the column count.
bool feasible_by_bases(const RatMatrix& a, const std::vector<Rational>& b);

/// Every nonnegative integer solution of A u = b, by exhaustive search over
/// the box 0 <= u_i <= max(b). Sorted lexicographically.
std::vector<IntVector> fiber_by_box(const IntMatrix& a, const IntVector& b);

}  // namespace toricgb::oracle
