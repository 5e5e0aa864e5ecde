#include "toricgb/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <utility>

namespace toricgb {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": lengths " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
}

}  // namespace

IntVector& IntVector::operator+=(const IntVector& rhs) {
  require_same_size(size(), rhs.size(), "vector addition");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& rhs) {
  require_same_size(size(), rhs.size(), "vector subtraction");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

IntVector& IntVector::operator*=(const Integer& k) {
  for (auto& x : entries_) x *= k;
  return *this;
}

IntVector IntVector::operator-() const {
  IntVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = -entries_[i];
  return r;
}

bool IntVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x.is_zero(); });
}

Integer IntVector::one_norm() const {
  Integer s = 0;
  for (const auto& x : entries_) s += abs(x);
  return s;
}

Integer IntVector::content() const {
  Integer g = 0;
  for (const auto& x : entries_) {
    if (!x.is_zero()) g = gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

std::vector<std::size_t> IntVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!entries_[i].is_zero()) s.push_back(i);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

IntVector SignedVector::plus() const {
  IntVector r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (base_[i].sign() > 0) r[i] = base_[i];
  }
  return r;
}

IntVector SignedVector::minus() const {
  IntVector r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (base_[i].sign() < 0) r[i] = -base_[i];
  }
  return r;
}

bool SignedVector::is_canonical() const noexcept {
  for (const auto& x : base_) {
    if (int s = x.sign(); s != 0) return s > 0;
  }
  return true;
}

SignedVector SignedVector::canonical() const { return is_canonical() ? *this : negated(); }

bool canonical_less(const SignedVector& a, const SignedVector& b) {
  auto na = a.one_norm();
  auto nb = b.one_norm();
  if (na != nb) return na < nb;
  return a.base() < b.base();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) os << ' ';
      os << a(r, c);
    }
    os << '\n';
  }
  return os;
}

IntMatrix matrix_from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector column(const IntMatrix& a, std::size_t c) {
  IntVector v(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) v[r] = a(r, c);
  return v;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix select_columns(const IntMatrix& a, std::span<const std::size_t> cols) {
  IntMatrix m(a.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= a.cols()) throw DimensionMismatch("column index out of range");
    for (std::size_t r = 0; r < a.rows(); ++r) m(r, j) = a(r, cols[j]);
  }
  return m;
}

IntMatrix drop_zero_rows(const IntMatrix& a) {
  std::vector<IntVector> keep;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return !x.is_zero(); })) {
      keep.emplace_back(std::vector<Integer>(row.begin(), row.end()));
    }
  }
  return matrix_from_rows(keep, a.cols());
}

IntVector matvec(const IntMatrix& a, const IntVector& u) {
  require_same_size(a.cols(), u.size(), "matvec");
  IntVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!u[j].is_zero() && !a(i, j).is_zero()) s += a(i, j) * u[j];
    }
    r[i] = std::move(s);
  }
  return r;
}

std::size_t rank(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = Rational(a(r, c));
  }
  std::size_t rk = 0;
  for (std::size_t c = 0; c < a.cols() && rk < a.rows(); ++c) {
    std::size_t p = rk;
    while (p < a.rows() && m[p][c].is_zero()) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rk]);
    for (std::size_t r = rk + 1; r < a.rows(); ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[rk][c];
      for (std::size_t k = c; k < a.cols(); ++k) m[r][k] -= f * m[rk][k];
    }
    ++rk;
  }
  return rk;
}

std::vector<IntVector> kernel_lattice_basis(const IntMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  // Columns of the working matrix, each extended by the matching column of the
  // unimodular transform U (initially the identity).
  std::vector<std::vector<Integer>> cols(n, std::vector<Integer>(d + n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < d; ++r) cols[c][r] = a(r, c);
    cols[c][d + c] = 1;
  }

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < d && pivot < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = pivot; c < n; ++c) {
        if (cols[c][r].is_zero()) continue;
        if (best == n || abs(cols[c][r]) < abs(cols[best][r])) best = c;
      }
      if (best == n) break;  // row already eliminated
      std::swap(cols[pivot], cols[best]);
      bool done = true;
      for (std::size_t c = pivot + 1; c < n; ++c) {
        if (cols[c][r].is_zero()) continue;
        Integer q = cols[c][r] / cols[pivot][r];
        for (std::size_t k = r; k < d + n; ++k) {
          if (!cols[pivot][k].is_zero()) cols[c][k] -= q * cols[pivot][k];
        }
        if (!cols[c][r].is_zero()) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }

  std::vector<IntVector> basis;
  for (std::size_t c = pivot; c < n; ++c) {
    basis.emplace_back(std::vector<Integer>(cols[c].begin() + static_cast<std::ptrdiff_t>(d),
                                            cols[c].end()));
  }
  return basis;
}

bool conformal_leq(const SignedVector& v, const SignedVector& u) {
  require_same_size(v.size(), u.size(), "conformal_leq");
  for (std::size_t i = 0; i < v.size(); ++i) {
    int sv = v[i].sign();
    if (sv == 0) continue;
    if (sv != u[i].sign()) return false;
    if (abs(v[i]) > abs(u[i])) return false;
  }
  return true;
}

std::size_t block_type(const IntVector& u, std::span<const std::size_t> block_sizes) {
  std::size_t total = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
  require_same_size(total, u.size(), "block_type");
  std::size_t type = 0;
  std::size_t start = 0;
  for (std::size_t size : block_sizes) {
    for (std::size_t i = start; i < start + size; ++i) {
      if (!u[i].is_zero()) {
        ++type;
        break;
      }
    }
    start += size;
  }
  return type;
}

}  // namespace toricgb
