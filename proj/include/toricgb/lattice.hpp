#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricgb/integer.hpp"
#include "toricgb/rational.hpp"

namespace toricgb {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Fixed-length vector of exact integers.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : entries_(n) {}
  IntVector(std::initializer_list<Integer> xs) : entries_(xs) {}
  explicit IntVector(std::vector<Integer> xs) : entries_(std::move(xs)) {}

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
  [[nodiscard]] auto end() const noexcept { return entries_.end(); }
  [[nodiscard]] auto begin() noexcept { return entries_.begin(); }
  [[nodiscard]] auto end() noexcept { return entries_.end(); }
  [[nodiscard]] const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntVector& operator+=(const IntVector& rhs);
  IntVector& operator-=(const IntVector& rhs);
  IntVector& operator*=(const Integer& k);
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& k, IntVector a) { return a *= k; }
  IntVector operator-() const;

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] Integer one_norm() const;
  /// gcd of all entries; 0 for the zero vector.
  [[nodiscard]] Integer content() const;
  /// Indices of nonzero entries, ascending.
  [[nodiscard]] std::vector<std::size_t> support() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;
  /// Plain lexicographic order on the entries.
  friend auto operator<=>(const IntVector& a, const IntVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntVector& v);

/// Kernel vector u together with its disjointly supported parts u+ and u-.
class SignedVector {
 public:
  SignedVector() = default;
  explicit SignedVector(IntVector base) : base_(std::move(base)) {}
  SignedVector(std::initializer_list<Integer> xs) : base_(xs) {}

  [[nodiscard]] const IntVector& base() const noexcept { return base_; }
  [[nodiscard]] std::size_t size() const noexcept { return base_.size(); }
  const Integer& operator[](std::size_t i) const { return base_[i]; }

  /// Componentwise max(u, 0).
  [[nodiscard]] IntVector plus() const;
  /// Componentwise max(-u, 0).
  [[nodiscard]] IntVector minus() const;

  [[nodiscard]] SignedVector negated() const { return SignedVector(-base_); }
  /// True when the first nonzero entry is positive (or the vector is zero).
  [[nodiscard]] bool is_canonical() const noexcept;
  /// The representative of {u, -u} whose first nonzero entry is positive.
  [[nodiscard]] SignedVector canonical() const;
  [[nodiscard]] Integer one_norm() const { return base_.one_norm(); }
  [[nodiscard]] bool is_zero() const noexcept { return base_.is_zero(); }

  friend bool operator==(const SignedVector&, const SignedVector&) = default;

 private:
  IntVector base_;
};

/// Canonical ordering for reported vector sets: 1-norm, then lexicographic.
bool canonical_less(const SignedVector& a, const SignedVector& b);

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data has wrong length");
  }
  /// Row-wise literal; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

/// Matrix built from rows given as vectors; all must have `cols` entries.
IntMatrix matrix_from_rows(const std::vector<IntVector>& rows, std::size_t cols);
IntVector column(const IntMatrix& a, std::size_t c);
IntMatrix identity_matrix(std::size_t n);
/// Submatrix of the listed columns, in the listed order.
IntMatrix select_columns(const IntMatrix& a, std::span<const std::size_t> cols);
/// Removes every all-zero row.
IntMatrix drop_zero_rows(const IntMatrix& a);

/// Exact product A u. Throws DimensionMismatch unless u.size() == A.cols().
IntVector matvec(const IntMatrix& a, const IntVector& u);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// Basis of the integer kernel lattice {u in Z^n : A u = 0}.
///
/// Computed by column-style Hermite elimination of A while tracking the
/// unimodular transform; the transform columns that end up under zero columns
/// of the echelon form span the kernel exactly. Pivots are chosen by smallest
/// absolute value, then lowest index.
std::vector<IntVector> kernel_lattice_basis(const IntMatrix& a);

/// v is conformally below u: v+ <= u+ and v- <= u- componentwise.
bool conformal_leq(const SignedVector& v, const SignedVector& u);

/// Number of blocks holding a nonzero entry of u. Blocks are consecutive runs
/// of the given sizes, which must add up to u.size().
std::size_t block_type(const IntVector& u, std::span<const std::size_t> block_sizes);

}  // namespace toricgb
