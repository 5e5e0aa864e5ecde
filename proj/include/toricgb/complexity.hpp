#pragma once

#include <cstddef>

#include "toricgb/graver.hpp"

namespace toricgb {

struct ComplexityReport {
  IntMatrix c;
  IntMatrix d;
  /// Number of canonical representatives in G(C); the formula uses twice as many columns.
  std::size_t graver_of_c_size = 0;
  std::size_t inner_graver_size = 0;
  Integer complexity = 0;
};

/// g(C, D) = max 1-norm over G(D * G(C)), where the columns of D * G(C) are
/// D g for every g in G(C) and its negation, duplicates kept.
/// Throws DimensionMismatch unless C and D have equal column counts.
ComplexityReport graver_complexity(const IntMatrix& c, const IntMatrix& d, const GraverOptions& options = {});

enum class Family { S, H };

/// Type bound for the block pair of a family with blocks of size m: 2m - 3
/// for S, 4m - 7 for H. Throws std::invalid_argument if m < 2.
std::size_t type_bound_for_family(Family family, std::size_t m);

}  // namespace toricgb
