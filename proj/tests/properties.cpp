#include "properties.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toricgb/families.hpp"
#include "toricgb/fiber.hpp"
#include "toricgb/oracle.hpp"

namespace toricgb::testing {

void PropertyReport::fail(std::string what) {
  if (failures.size() < 5) failures.push_back(std::move(what));
}

namespace {

std::string str(const IntVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(const IntMatrix& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = dist(rng);
  }
  return a;
}

IntMatrix random_fiber_matrix(Rng& rng, std::size_t rows, std::size_t cols, int hi) {
  std::uniform_int_distribution<int> dist(0, hi);
  IntMatrix a(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    bool positive = false;
    while (!positive) {
      for (std::size_t r = 0; r < rows; ++r) {
        a(r, c) = dist(rng);
        positive |= a(r, c).sign() > 0;
      }
    }
  }
  return a;
}

PropertyReport check_graver_invariants(const GraverBasis& g) {
  PropertyReport rep;
  const auto& es = g.elements();
  for (const auto& e : es) {
    ++rep.checked;
    if (e.is_zero()) rep.fail("zero element");
    if (!e.is_canonical()) rep.fail("non-canonical element " + str(e.base()));
    if (!matvec(g.matrix(), e.base()).is_zero()) rep.fail("not in kernel: " + str(e.base()));
    if (!e.base().content().is_one()) rep.fail("content not 1: " + str(e.base()));
  }
  std::vector<Integer> norms;
  norms.reserve(es.size());
  for (const auto& e : es) norms.push_back(e.one_norm());
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j || norms[j] > norms[i]) continue;
      if (conformal_leq(es[j], es[i]) || conformal_leq(es[j].negated(), es[i])) {
        rep.fail("not minimal: " + str(es[j].base()) + " below " + str(es[i].base()));
      }
    }
  }
  for (std::size_t i = 1; i < es.size(); ++i) {
    if (!canonical_less(es[i - 1], es[i])) rep.fail("elements not strictly sorted");
  }
  return rep;
}

PropertyReport check_oracle_equivalence(Rng& rng, std::size_t count, std::size_t bound) {
  PropertyReport rep;
  std::uniform_int_distribution<std::size_t> rows(1, 2);
  std::uniform_int_distribution<std::size_t> cols(2, 5);
  std::size_t attempts = 0;
  while (rep.checked < count && attempts < 50 * count) {
    ++attempts;
    IntMatrix a = random_fiber_matrix(rng, rows(rng), cols(rng), 4);
    GraverBasis g = graver_basis(a);
    if (max_one_norm(g) > Integer(bound)) continue;
    ++rep.checked;
    auto inv = check_graver_invariants(g);
    for (auto& f : inv.failures) rep.fail(f);
    auto expected = oracle::filter_primitive(oracle::enumerate_kernel_bounded({a, bound}));
    if (expected != g.elements()) {
      rep.fail("oracle mismatch for\n" + str(a) + "engine " + std::to_string(g.size()) + " oracle " +
               std::to_string(expected.size()));
    }
    GraverOptions co;
    co.engine = GraverEngine::Completion;
    if (graver_basis(a, co).elements() != g.elements()) rep.fail("engines disagree for\n" + str(a));
  }
  return rep;
}

PropertyReport check_lp_soundness(Rng& rng, std::size_t count) {
  PropertyReport rep;
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (std::size_t t = 0; t < count; ++t) {
    LPProblem p;
    const std::size_t m = dim(rng);
    const std::size_t k = dim(rng);
    p.a = RatMatrix(m, k);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j) p.a(i, j) = Rational(entry(rng), den(rng));
      p.rhs.emplace_back(entry(rng), den(rng));
    }
    LPCertificate c = solve_feasibility(p);
    ++rep.checked;
    if (!verify(p, c)) rep.fail("certificate does not verify, instance " + std::to_string(t));
    if (is_feasible(c) != oracle::feasible_by_bases(p.a, p.rhs)) {
      rep.fail("feasibility disagrees with basis enumeration, instance " + std::to_string(t));
    }
  }
  return rep;
}

PropertyReport check_projection_invariance(Rng& rng, std::size_t count) {
  PropertyReport rep;
  const std::vector<FamilyCase> cases = {
      FamilyCase::scroll({6}),       FamilyCase::scroll({3, 3}),  FamilyCase::scroll({5, 1}),
      FamilyCase::scroll({2, 2, 1}), FamilyCase::h({7}),          FamilyCase::h({6, 2}),
      FamilyCase::h({4, 3}),         FamilyCase::h({3, 3}),       FamilyCase::h({4, 2, 1}),
  };
  std::map<std::size_t, GraverBasis> bases;
  std::uniform_int_distribution<std::size_t> pick_case(0, cases.size() - 1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t ci = pick_case(rng);
    const IntMatrix a = cases[ci].matrix();
    auto it = bases.find(ci);
    if (it == bases.end()) it = bases.emplace(ci, graver_basis(a)).first;
    const auto& es = it->second.elements();
    const SignedVector& g = es[std::uniform_int_distribution<std::size_t>(0, es.size() - 1)(rng)];

    std::vector<std::size_t> sigma;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!g[c].is_zero() || coin(rng)) sigma.push_back(c);
    }
    Restriction r = restrict_support(g, a, sigma);
    UgbOptions full;
    full.restrict_to_support = false;
    const bool whole = ugb_test(g, a, full).member;
    const bool part = ugb_test(r.u, r.a, full).member;
    ++rep.checked;
    if (whole != part) {
      rep.fail(cases[ci].label() + ": fiber test differs after restriction for " + str(g.base()));
    }
    if (!is_primitive(r.u, r.a)) rep.fail(cases[ci].label() + ": restriction not primitive " + str(g.base()));
  }
  return rep;
}

}  // namespace toricgb::testing
