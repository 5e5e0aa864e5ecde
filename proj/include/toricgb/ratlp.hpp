#pragma once

#include <variant>
#include <vector>

#include "toricgb/lattice.hpp"
#include "toricgb/rational.hpp"

namespace toricgb {

/// Feasibility question: is there x >= 0 with a x = rhs?
struct LPProblem {
  RatMatrix a;
  std::vector<Rational> rhs;
};

struct Feasible {
  std::vector<Rational> x;
};

/// Farkas witness: y^T a >= 0 and y^T rhs < 0.
struct Infeasible {
  std::vector<Rational> y;
};

using LPCertificate = std::variant<Feasible, Infeasible>;

/// Phase-I simplex over exact rationals with Bland's rule. Every returned
/// certificate has been checked by substitution; a failed check throws
/// std::logic_error. Farkas witnesses are scaled to coprime integers.
LPCertificate solve_feasibility(const LPProblem& p);

/// Exact check of the certificate against the problem.
bool verify(const LPProblem& p, const LPCertificate& c);

inline bool is_feasible(const LPCertificate& c) { return std::holds_alternative<Feasible>(c); }

}  // namespace toricgb
