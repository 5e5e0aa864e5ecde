#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toricgb/deadline.hpp"
#include "toricgb/lattice.hpp"
#include "toricgb/rational.hpp"

namespace toricgb {

/// Input outside the domain of an operation, e.g. a matrix whose fibers are
/// not finite.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All nonnegative integer solutions of matrix * u = rhs, sorted.
struct Fiber {
  IntMatrix matrix;
  IntVector rhs;
  std::vector<IntVector> points;

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
  [[nodiscard]] bool contains(const IntVector& u) const;
};

/// Throws PreconditionError when A has a negative entry or a zero column, or
/// when b has a negative entry.
void check_fiber_matrix(const IntMatrix& a);

Fiber enumerate_fiber(const IntMatrix& a, const IntVector& b, const Deadline& deadline = {});

/// u is not a convex combination of the other fiber points.
/// Throws std::invalid_argument when u is not in the fiber.
bool is_vertex(const IntVector& u, const Fiber& f);

/// Thread-safe memo of fibers keyed by column subset and right-hand side.
/// Only valid for a single matrix. Stops storing once the total number of
/// cached points would exceed max_points.
class FiberCache {
 public:
  explicit FiberCache(std::size_t max_points = std::size_t{1} << 20) : max_points_(max_points) {}

  std::shared_ptr<const Fiber> find(const std::vector<std::size_t>& cols, const IntVector& b) const;
  std::shared_ptr<const Fiber> insert(std::vector<std::size_t> cols, IntVector b, Fiber f);
  [[nodiscard]] std::size_t size() const;

 private:
  using Key = std::pair<std::vector<std::size_t>, IntVector>;
  std::size_t max_points_;
  std::size_t points_ = 0;
  mutable std::mutex mu_;
  std::map<Key, std::shared_ptr<const Fiber>> map_;
};

struct UgbOptions {
  /// Work in the face spanned by supp(u); equivalent and usually far smaller.
  bool restrict_to_support = true;
  FiberCache* cache = nullptr;
  Deadline deadline{};
};

enum class UgbStage { Member, PlusNotVertex, MinusNotVertex, NotEdge };

const char* to_string(UgbStage s);

/// Outcome of the fiber test for one kernel vector. For a failure the
/// certificate lists fiber points with positive coefficients: a convex
/// combination equal to the failing endpoint, or a nonnegative combination of
/// (v - u-) equal to u.
struct UgbResult {
  bool member = false;
  UgbStage stage = UgbStage::Member;
  std::size_t fiber_size = 0;
  /// Columns of the matrix the points live in (all columns unless restricted).
  std::vector<std::size_t> columns;
  std::vector<IntVector> points;
  std::vector<Rational> coefficients;
};

UgbResult ugb_test(const SignedVector& u, const IntMatrix& a, const UgbOptions& options = {});

/// Requires A u = 0, u != 0 and A a valid fiber matrix; throws
/// PreconditionError otherwise.
bool ugb_member(const SignedVector& u, const IntMatrix& a);

struct Restriction {
  SignedVector u;
  IntMatrix a;
};

/// Coordinates of u and columns of A indexed by sigma (ascending). Throws
/// std::invalid_argument if u is nonzero outside sigma.
Restriction restrict_support(const SignedVector& u, const IntMatrix& a, std::span<const std::size_t> sigma,
                             bool drop_zero_rows = false);

}  // namespace toricgb
