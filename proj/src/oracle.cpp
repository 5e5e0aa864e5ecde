#include "toricgb/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace toricgb::oracle {

namespace {

struct KernelSearch {
  const IntMatrix& a;
  std::size_t n;
  std::size_t d;
  std::vector<std::int64_t> entries;
  std::vector<std::int64_t> tail_max;  // per row and start column: max |a| over columns >= start
  std::vector<std::int64_t> u;
  std::vector<std::int64_t> acc;
  std::vector<SignedVector> out;

  explicit KernelSearch(const IntMatrix& m)
      : a(m), n(m.cols()), d(m.rows()), entries(d * n), tail_max(d * (n + 1), 0), u(n), acc(d) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = m(r, c).to_int64();
      for (std::size_t c = n; c-- > 0;) {
        tail_max[r * (n + 1) + c] = std::max(tail_max[r * (n + 1) + c + 1], std::abs(entries[r * n + c]));
      }
    }
  }

  void go(std::size_t i, std::int64_t left, bool leading) {
    for (std::size_t r = 0; r < d; ++r) {
      if (std::abs(acc[r]) > left * tail_max[r * (n + 1) + i]) return;
    }
    if (i == n) {
      if (leading) return;
      std::vector<Integer> e(u.begin(), u.end());
      out.emplace_back(IntVector(std::move(e)));
      return;
    }
    std::int64_t lo = leading ? 0 : -left;
    for (std::int64_t v = lo; v <= left; ++v) {
      u[i] = v;
      for (std::size_t r = 0; r < d; ++r) acc[r] += v * entries[r * n + i];
      go(i + 1, left - std::abs(v), leading && v == 0);
      for (std::size_t r = 0; r < d; ++r) acc[r] -= v * entries[r * n + i];
    }
    u[i] = 0;
  }
};

}  // namespace

std::vector<SignedVector> enumerate_kernel_bounded(const BoundedEnumSpec& spec) {
  if (spec.norm_bound < 1) throw std::invalid_argument("norm bound must be at least 1");
  KernelSearch ks(spec.matrix);
  ks.go(0, static_cast<std::int64_t>(spec.norm_bound), true);
  std::sort(ks.out.begin(), ks.out.end(), canonical_less);
  return std::move(ks.out);
}

std::vector<SignedVector> filter_primitive(const std::vector<SignedVector>& vs) {
  std::vector<SignedVector> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < vs.size() && keep; ++j) {
      for (const SignedVector& w : {vs[j], vs[j].negated()}) {
        if (w != vs[i] && conformal_leq(w, vs[i])) keep = false;
      }
    }
    if (keep) out.push_back(vs[i]);
  }
  return out;
}

std::size_t count_curve_fiber(std::size_t weight, std::size_t degree, std::size_t max_part) {
  // ways[k][w]: multisets of k parts from the values seen so far, summing to w.
  std::vector<std::vector<std::size_t>> ways(degree + 1, std::vector<std::size_t>(weight + 1, 0));
  ways[0][0] = 1;
  for (std::size_t p = 1; p <= max_part; ++p) {
    for (std::size_t k = 1; k <= degree; ++k) {
      for (std::size_t w = p; w <= weight; ++w) ways[k][w] += ways[k - 1][w - p];
    }
  }
  return ways[degree][weight];
}

namespace {

/// Solves a_S x = b for the columns in S if they are independent and the
/// system is consistent.
bool nonnegative_basic_solution(const RatMatrix& a, const std::vector<Rational>& b,
                                const std::vector<std::size_t>& cols) {
  const std::size_t m = a.rows();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i][j] = a(i, cols[j]);
    t[i][k] = b[i];
  }
  std::size_t row = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t p = row;
    while (p < m && t[p][j].is_zero()) ++p;
    if (p == m) return false;
    std::swap(t[p], t[row]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][j].is_zero()) continue;
      Rational f = t[i][j] / t[row][j];
      for (std::size_t c = j; c <= k; ++c) t[i][c] -= f * t[row][c];
    }
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (!t[i][k].is_zero()) return false;
  }
  for (std::size_t j = 0; j < k; ++j) {
    if ((t[j][k] / t[j][j]).sign() < 0) return false;
  }
  return true;
}

}  // namespace

bool feasible_by_bases(const RatMatrix& a, const std::vector<Rational>& b) {
  const std::size_t k = a.cols();
  if (k > 20) throw std::invalid_argument("feasible_by_bases: too many columns");
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::uint32_t{1} << j)) cols.push_back(j);
    }
    if (cols.size() > a.rows()) continue;
    if (nonnegative_basic_solution(a, b, cols)) return true;
  }
  return false;
}

std::vector<IntVector> fiber_by_box(const IntMatrix& a, const IntVector& b) {
  Integer top = 0;
  for (const auto& x : b) top = std::max(top, x);
  const std::int64_t cap = top.to_int64();
  const std::size_t n = a.cols();
  std::vector<IntVector> out;
  std::vector<Integer> u(n, Integer(0));
  for (;;) {
    IntVector v(u);
    if (matvec(a, v) == b) out.push_back(v);
    std::size_t i = n;
    while (i > 0 && u[i - 1] == Integer(cap)) u[--i] = 0;
    if (i == 0) break;
    u[i - 1] += 1;
  }
  return out;
}

}  // namespace toricgb::oracle
