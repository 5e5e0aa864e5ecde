#include "toricgb/complexity.hpp"

#include <stdexcept>

namespace toricgb {

ComplexityReport graver_complexity(const IntMatrix& c, const IntMatrix& d, const GraverOptions& options) {
  if (c.cols() != d.cols()) throw DimensionMismatch("graver_complexity: C and D differ in column count");
  ComplexityReport rep{c, d, 0, 0, 0};
  GraverBasis gc = graver_basis(c, options);
  rep.graver_of_c_size = gc.size();
  if (gc.empty()) return rep;

  std::vector<SignedVector> cols = gc.full_set();
  IntMatrix inner(d.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    IntVector dg = matvec(d, cols[j].base());
    for (std::size_t r = 0; r < d.rows(); ++r) inner(r, j) = dg[r];
  }
  GraverBasis g = graver_basis(inner, options);
  rep.inner_graver_size = g.size();
  rep.complexity = max_one_norm(g);
  return rep;
}

std::size_t type_bound_for_family(Family family, std::size_t m) {
  if (m < 2) throw std::invalid_argument("type_bound_for_family: m must be at least 2");
  return family == Family::S ? 2 * m - 3 : 4 * m - 7;
}

}  // namespace toricgb
