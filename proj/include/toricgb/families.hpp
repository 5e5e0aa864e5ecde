#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toricgb/lattice.hpp"

namespace toricgb {

/// Nonincreasing sequence of positive parts n1 >= n2 >= ... >= nc >= 1, c >= 1.
class Partition {
 public:
  /// Throws std::invalid_argument unless the parts form a valid partition.
  explicit Partition(std::vector<std::size_t> parts);

  [[nodiscard]] const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  [[nodiscard]] std::size_t num_parts() const noexcept { return parts_.size(); }
  [[nodiscard]] std::size_t total() const noexcept;
  [[nodiscard]] std::size_t operator[](std::size_t i) const { return parts_[i]; }
  /// "6,2"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

/// Scroll label S(m1, ..., mc): degrees m1 >= ... >= mc >= 0. S(m) has
/// partition (m1 + 1, ..., mc + 1).
class ScrollLabel {
 public:
  explicit ScrollLabel(std::vector<std::size_t> degrees);
  static ScrollLabel from_partition(const Partition& p);

  [[nodiscard]] const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  [[nodiscard]] Partition partition() const;
  /// "S(4,3,2)"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ScrollLabel&, const ScrollLabel&) = default;

 private:
  std::vector<std::size_t> degrees_;
};

/// Parses a comma-separated list of nonnegative integers, e.g. "5,2,2".
std::vector<std::size_t> parse_parts(std::string_view text);

/// Scroll matrix: row 0 is (1..n1 | 1..n2 | ...), row i the indicator of block i.
IntMatrix scroll_matrix(const Partition& p);

/// Row 0 all ones, row i carries (1..ni) on block i.
IntMatrix h_matrix(const Partition& p);

/// N-fold block matrix [A, B]^(N): B repeated across the top row of blocks
/// and A on the block diagonal. Requires A.cols() == B.cols() and n >= 1.
IntMatrix nfold_matrix(const IntMatrix& a, const IntMatrix& b, std::size_t n);

/// small is dominated by big: small has no more parts than big and each of
/// its parts is bounded by the corresponding part of big.
bool dominates(const Partition& big, const Partition& small);
bool dominates(const ScrollLabel& big, const ScrollLabel& small);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(std::size_t n);

}  // namespace toricgb
