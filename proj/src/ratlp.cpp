#include "toricgb/ratlp.hpp"

#include <stdexcept>

namespace toricgb {

namespace {

void check_shape(const LPProblem& p) {
  if (p.rhs.size() != p.a.rows()) throw DimensionMismatch("LP right-hand side length differs from row count");
}

/// Dense phase-I tableau. Columns: k structural, m artificial, then rhs.
class Tableau {
 public:
  Tableau(const LPProblem& p, std::vector<int>& flip) : m_(p.a.rows()), k_(p.a.cols()), w_(k_ + m_ + 1) {
    t_.assign(m_ * w_, Rational{});
    cost_.assign(w_, Rational{});
    basis_.resize(m_);
    flip.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.rhs[i].sign() < 0) flip[i] = -1;
      for (std::size_t j = 0; j < k_; ++j) at(i, j) = flip[i] < 0 ? -p.a(i, j) : p.a(i, j);
      at(i, k_ + i) = 1;
      at(i, w_ - 1) = flip[i] < 0 ? -p.rhs[i] : p.rhs[i];
      basis_[i] = k_ + i;
    }
    // Reduced costs of minimizing the artificial sum with artificials basic.
    for (std::size_t j = 0; j < w_; ++j) {
      if (j >= k_ && j < k_ + m_) continue;
      for (std::size_t i = 0; i < m_; ++i) cost_[j] -= at(i, j);
    }
  }

  void solve() {
    for (;;) {
      std::size_t enter = k_;
      for (std::size_t j = 0; j < k_; ++j) {
        if (cost_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == k_) return;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, enter).sign() <= 0) continue;
        Rational ratio = at(i, w_ - 1) / at(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      // Phase I is bounded below by zero, so a pivot row always exists.
      if (leave == m_) throw std::logic_error("phase-I simplex found an unbounded direction");
      pivot(leave, enter);
    }
  }

  [[nodiscard]] bool optimal_zero() const { return cost_[w_ - 1].is_zero(); }

  [[nodiscard]] std::vector<Rational> primal() const {
    std::vector<Rational> x(k_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < k_) x[basis_[i]] = at(i, w_ - 1);
    }
    return x;
  }

  /// Phase-I duals c_B B^{-1}, read off the artificial columns.
  [[nodiscard]] std::vector<Rational> duals() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = Rational(1) - cost_[k_ + i];
    return y;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) { return t_[i * w_ + j]; }
  [[nodiscard]] const Rational& at(std::size_t i, std::size_t j) const { return t_[i * w_ + j]; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = Rational(1) / at(r, c);
    for (std::size_t j = 0; j < w_; ++j) {
      if (!at(r, j).is_zero()) at(r, j) *= inv;
    }
    auto eliminate = [&](auto&& row) {
      Rational f = row(c);
      if (f.is_zero()) return;
      for (std::size_t j = 0; j < w_; ++j) {
        if (!at(r, j).is_zero()) row(j) -= f * at(r, j);
      }
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate([&](std::size_t j) -> Rational& { return at(i, j); });
    }
    eliminate([&](std::size_t j) -> Rational& { return cost_[j]; });
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t k_;
  std::size_t w_;
  std::vector<Rational> t_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
};

void scale_to_integers(std::vector<Rational>& y) {
  Integer l = 1;
  for (const auto& q : y) l = divexact(l * q.den(), gcd(l, q.den()));
  Integer g = 0;
  for (auto& q : y) {
    q *= Rational(l);
    g = gcd(g, q.num());
  }
  if (g.is_zero() || g.is_one()) return;
  for (auto& q : y) q = Rational(divexact(q.num(), g));
}

}  // namespace

bool verify(const LPProblem& p, const LPCertificate& c) {
  check_shape(p);
  const std::size_t m = p.a.rows();
  const std::size_t k = p.a.cols();
  if (const auto* f = std::get_if<Feasible>(&c)) {
    if (f->x.size() != k) return false;
    for (const auto& v : f->x) {
      if (v.sign() < 0) return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
      Rational s;
      for (std::size_t j = 0; j < k; ++j) {
        if (!f->x[j].is_zero()) s += p.a(i, j) * f->x[j];
      }
      if (s != p.rhs[i]) return false;
    }
    return true;
  }
  const auto& y = std::get<Infeasible>(c).y;
  if (y.size() != m) return false;
  for (std::size_t j = 0; j < k; ++j) {
    Rational s;
    for (std::size_t i = 0; i < m; ++i) {
      if (!y[i].is_zero()) s += y[i] * p.a(i, j);
    }
    if (s.sign() < 0) return false;
  }
  Rational s;
  for (std::size_t i = 0; i < m; ++i) s += y[i] * p.rhs[i];
  return s.sign() < 0;
}

LPCertificate solve_feasibility(const LPProblem& p) {
  check_shape(p);
  std::vector<int> flip;
  Tableau t(p, flip);
  t.solve();
  LPCertificate out;
  if (t.optimal_zero()) {
    out = Feasible{t.primal()};
  } else {
    std::vector<Rational> y = t.duals();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = flip[i] < 0 ? y[i] : -y[i];
    scale_to_integers(y);
    out = Infeasible{std::move(y)};
  }
  if (!verify(p, out)) throw std::logic_error("LP certificate failed its self-check");
  return out;
}

}  // namespace toricgb
