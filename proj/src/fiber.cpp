#include "toricgb/fiber.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#include "toricgb/ratlp.hpp"

namespace toricgb {

bool Fiber::contains(const IntVector& u) const { return std::binary_search(points.begin(), points.end(), u); }

void check_fiber_matrix(const IntMatrix& a) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    bool positive = false;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      int s = a(r, c).sign();
      if (s < 0) throw PreconditionError("fiber matrix has a negative entry in column " + std::to_string(c));
      positive |= s > 0;
    }
    if (!positive) throw PreconditionError("fiber matrix has a zero column " + std::to_string(c));
  }
}

namespace {

class FiberSearch {
 public:
  FiberSearch(const IntMatrix& a, const IntVector& b, const Deadline& deadline)
      : d_(a.rows()), n_(a.cols()), a_(d_ * n_), res_(d_), x_(n_), last_(d_, -1), deadline_(deadline) {
    for (std::size_t r = 0; r < d_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        a_[r * n_ + c] = a(r, c).to_int64();
        if (a_[r * n_ + c] > 0) last_[r] = static_cast<std::ptrdiff_t>(c);
      }
      res_[r] = b[r].to_int64();
    }
  }

  std::vector<IntVector> run() {
    for (std::size_t r = 0; r < d_; ++r) {
      if (res_[r] > 0 && last_[r] < 0) return {};
    }
    descend(0);
    return std::move(out_);
  }

 private:
  [[nodiscard]] std::int64_t entry(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  void descend(std::size_t i) {
    if (++ticks_ % 4096 == 0) deadline_.check();
    if (i == n_) {
      std::vector<Integer> e(x_.begin(), x_.end());
      out_.emplace_back(std::move(e));
      return;
    }
    std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    for (std::size_t r = 0; r < d_; ++r) {
      if (entry(r, i) > 0) cap = std::min(cap, res_[r] / entry(r, i));
    }
    for (std::int64_t v = 0; v <= cap; ++v) {
      x_[i] = v;
      if (v > 0) {
        for (std::size_t r = 0; r < d_; ++r) res_[r] -= entry(r, i);
      }
      bool alive = true;
      for (std::size_t r = 0; r < d_ && alive; ++r) {
        alive = res_[r] == 0 || last_[r] > static_cast<std::ptrdiff_t>(i);
      }
      if (alive) descend(i + 1);
    }
    for (std::size_t r = 0; r < d_; ++r) res_[r] += cap * entry(r, i);
    x_[i] = 0;
  }

  std::size_t d_;
  std::size_t n_;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> res_;
  std::vector<std::int64_t> x_;
  std::vector<std::ptrdiff_t> last_;
  const Deadline& deadline_;
  std::uint64_t ticks_ = 0;
  std::vector<IntVector> out_;
};

struct Combination {
  std::vector<IntVector> points;
  std::vector<Rational> coefficients;
};

/// Nonnegative combination of the given vectors equal to target, optionally
/// with coefficients summing to one.
std::optional<std::vector<Rational>> combine(const std::vector<IntVector>& vs, const IntVector& target,
                                             bool convex) {
  const std::size_t n = target.size();
  LPProblem p;
  p.a = RatMatrix(n + (convex ? 1 : 0), vs.size());
  p.rhs.resize(p.a.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) p.a(i, j) = Rational(vs[j][i]);
    p.rhs[i] = Rational(target[i]);
  }
  if (convex) {
    for (std::size_t j = 0; j < vs.size(); ++j) p.a(n, j) = 1;
    p.rhs[n] = 1;
  }
  auto cert = solve_feasibility(p);
  if (auto* f = std::get_if<Feasible>(&cert)) return std::move(f->x);
  return std::nullopt;
}

std::optional<Combination> vertex_failure(const IntVector& u, const Fiber& f) {
  std::vector<IntVector> others;
  for (const auto& v : f.points) {
    if (v != u) others.push_back(v);
  }
  auto lambda = combine(others, u, true);
  if (!lambda) return std::nullopt;
  Combination c;
  for (std::size_t j = 0; j < others.size(); ++j) {
    if (!(*lambda)[j].is_zero()) {
      c.points.push_back(others[j]);
      c.coefficients.push_back((*lambda)[j]);
    }
  }
  return c;
}

}  // namespace

Fiber enumerate_fiber(const IntMatrix& a, const IntVector& b, const Deadline& deadline) {
  check_fiber_matrix(a);
  if (b.size() != a.rows()) throw DimensionMismatch("fiber right-hand side length differs from row count");
  for (const auto& x : b) {
    if (x.sign() < 0) throw PreconditionError("fiber right-hand side has a negative entry");
  }
  Fiber f{a, b, {}};
  f.points = FiberSearch(a, b, deadline).run();
  return f;
}

bool is_vertex(const IntVector& u, const Fiber& f) {
  if (!f.contains(u)) throw std::invalid_argument("is_vertex: point not in fiber");
  return !vertex_failure(u, f).has_value();
}

std::shared_ptr<const Fiber> FiberCache::find(const std::vector<std::size_t>& cols, const IntVector& b) const {
  std::lock_guard lock(mu_);
  auto it = map_.find(Key{cols, b});
  return it == map_.end() ? nullptr : it->second;
}

std::shared_ptr<const Fiber> FiberCache::insert(std::vector<std::size_t> cols, IntVector b, Fiber f) {
  auto ptr = std::make_shared<const Fiber>(std::move(f));
  std::lock_guard lock(mu_);
  if (points_ + ptr->size() > max_points_) return ptr;
  auto [it, fresh] = map_.emplace(Key{std::move(cols), std::move(b)}, ptr);
  if (fresh) points_ += ptr->size();
  return it->second;
}

std::size_t FiberCache::size() const {
  std::lock_guard lock(mu_);
  return map_.size();
}

const char* to_string(UgbStage s) {
  switch (s) {
    case UgbStage::Member: return "member";
    case UgbStage::PlusNotVertex: return "u+ not a vertex";
    case UgbStage::MinusNotVertex: return "u- not a vertex";
    case UgbStage::NotEdge: return "not an edge";
  }
  return "?";
}

Restriction restrict_support(const SignedVector& u, const IntMatrix& a, std::span<const std::size_t> sigma,
                             bool drop_zero_rows_flag) {
  if (u.size() != a.cols()) throw DimensionMismatch("restrict_support: vector length differs from column count");
  std::vector<bool> keep(u.size(), false);
  for (std::size_t c : sigma) {
    if (c >= u.size()) throw std::invalid_argument("restrict_support: column index out of range");
    keep[c] = true;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!keep[i] && !u[i].is_zero()) throw std::invalid_argument("restrict_support: support not contained in sigma");
  }
  std::vector<Integer> e;
  for (std::size_t c : sigma) e.push_back(u[c]);
  IntMatrix sub = select_columns(a, sigma);
  if (drop_zero_rows_flag) sub = drop_zero_rows(sub);
  return {SignedVector(IntVector(std::move(e))), std::move(sub)};
}

UgbResult ugb_test(const SignedVector& u, const IntMatrix& a, const UgbOptions& options) {
  check_fiber_matrix(a);
  if (u.size() != a.cols()) throw DimensionMismatch("ugb_test: vector length differs from column count");
  if (u.is_zero()) throw PreconditionError("ugb_test: zero vector");
  if (!matvec(a, u.base()).is_zero()) throw PreconditionError("ugb_test: vector not in the kernel");

  UgbResult result;
  if (options.restrict_to_support) {
    result.columns = u.base().support();
  } else {
    for (std::size_t i = 0; i < u.size(); ++i) result.columns.push_back(i);
  }
  Restriction r = restrict_support(u, a, result.columns);
  const IntVector plus = r.u.plus();
  const IntVector minus = r.u.minus();
  IntVector b = matvec(r.a, plus);

  std::shared_ptr<const Fiber> fiber = options.cache ? options.cache->find(result.columns, b) : nullptr;
  if (!fiber) {
    Fiber f = enumerate_fiber(r.a, b, options.deadline);
    fiber = options.cache ? options.cache->insert(result.columns, b, std::move(f))
                          : std::make_shared<const Fiber>(std::move(f));
  }
  result.fiber_size = fiber->size();
  options.deadline.check();

  auto fail = [&](UgbStage stage, Combination c) {
    result.member = false;
    result.stage = stage;
    result.points = std::move(c.points);
    result.coefficients = std::move(c.coefficients);
    return result;
  };
  if (auto c = vertex_failure(plus, *fiber)) return fail(UgbStage::PlusNotVertex, std::move(*c));
  if (auto c = vertex_failure(minus, *fiber)) return fail(UgbStage::MinusNotVertex, std::move(*c));

  std::vector<IntVector> interior;
  std::vector<IntVector> dirs;
  for (const auto& v : fiber->points) {
    if (v == plus || v == minus) continue;
    interior.push_back(v);
    dirs.push_back(v - minus);
  }
  if (auto lambda = combine(dirs, r.u.base(), false)) {
    Combination c;
    for (std::size_t j = 0; j < interior.size(); ++j) {
      if (!(*lambda)[j].is_zero()) {
        c.points.push_back(interior[j]);
        c.coefficients.push_back((*lambda)[j]);
      }
    }
    return fail(UgbStage::NotEdge, std::move(c));
  }
  result.member = true;
  result.stage = UgbStage::Member;
  return result;
}

bool ugb_member(const SignedVector& u, const IntMatrix& a) { return ugb_test(u, a).member; }

}  // namespace toricgb
