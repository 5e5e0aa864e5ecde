#pragma once

#include <cstddef>
#include <vector>

#include "toricgb/deadline.hpp"
#include "toricgb/lattice.hpp"

namespace toricgb {

enum class GraverEngine {
  /// Lift one coordinate at a time from a projection whose Graver basis is
  /// known, completing by increasing norm. Default.
  ProjectAndLift,
  /// Normal-form completion over the whole kernel lattice, started from a
  /// lattice basis and its negation.
  Completion,
};

struct GraverOptions {
  GraverEngine engine = GraverEngine::ProjectAndLift;
  /// Reduce to one representative per class of columns equal up to sign,
  /// then expand. Does not change the result.
  bool fold_repeated_columns = true;
  Deadline deadline{};
};

/// Graver basis of an integer matrix: one canonical representative (first
/// nonzero entry positive) per +-pair, ordered by 1-norm then lexicographically.
class GraverBasis {
 public:
  GraverBasis() = default;
  /// Canonicalizes signs and sorts; does not check primitivity.
  GraverBasis(IntMatrix matrix, std::vector<SignedVector> elements);

  [[nodiscard]] const IntMatrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] const std::vector<SignedVector>& elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
  /// Elements followed by their negations.
  [[nodiscard]] std::vector<SignedVector> full_set() const;
  /// Membership of u or -u.
  [[nodiscard]] bool contains(const SignedVector& u) const;

 private:
  IntMatrix matrix_;
  std::vector<SignedVector> elements_;
};

GraverBasis graver_basis(const IntMatrix& a, const GraverOptions& options = {});

/// Largest 1-norm over the basis; 0 when empty.
Integer max_one_norm(const GraverBasis& g);

/// Whether u lies in the Graver basis of A. Requires A u = 0 and u != 0;
/// throws std::invalid_argument otherwise.
bool is_primitive(const SignedVector& u, const IntMatrix& a);
bool is_primitive(const SignedVector& u, const GraverBasis& g);

}  // namespace toricgb
