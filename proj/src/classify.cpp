#include "toricgb/classify.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace toricgb {

FamilyCase FamilyCase::scroll(std::vector<std::size_t> degrees) {
  return {Family::S, ScrollLabel(std::move(degrees)).partition()};
}

FamilyCase FamilyCase::h(std::vector<std::size_t> parts) { return {Family::H, Partition(std::move(parts))}; }

std::string FamilyCase::label() const {
  if (family == Family::S) return ScrollLabel::from_partition(partition).to_string();
  return "H(" + partition.to_string() + ")";
}

IntMatrix FamilyCase::matrix() const {
  return family == Family::S ? scroll_matrix(partition) : h_matrix(partition);
}

const char* to_string(Family f) { return f == Family::S ? "S" : "H"; }

std::vector<FamilyCase> minimal_counterexamples(Family f) {
  if (f == Family::S) {
    return {FamilyCase::scroll({6}), FamilyCase::scroll({5, 4}), FamilyCase::scroll({4, 3, 2})};
  }
  return {FamilyCase::h({7}), FamilyCase::h({6, 2}), FamilyCase::h({4, 3})};
}

bool predict(const FamilyCase& c) {
  for (const auto& m : minimal_counterexamples(c.family)) {
    if (dominates(c.partition, m.partition)) return false;
  }
  return true;
}

EqualityResult check_equality(const IntMatrix& a, const EqualityOptions& options) {
  check_fiber_matrix(a);
  GraverOptions go;
  go.deadline = options.deadline;
  GraverBasis g = graver_basis(a, go);
  FiberCache cache;
  UgbOptions uo;
  uo.restrict_to_support = options.restrict_to_support;
  uo.cache = &cache;
  uo.deadline = options.deadline;

  const auto& elems = g.elements();
  std::vector<char> member(elems.size(), 1);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (!stop) {
      std::size_t i = next++;
      if (i >= elems.size()) return;
      try {
        member[i] = ugb_test(elems[i], a, uo).member ? 1 : 0;
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(elems.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  EqualityResult r;
  r.graver_size = elems.size();
  r.fibers = cache.size();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!member[i]) r.witnesses.push_back(elems[i]);
  }
  r.equal = r.witnesses.empty();
  return r;
}

bool check_certificate(const SignedVector& g, const IntMatrix& a, const Certificate& c) {
  const std::size_t n = a.cols();
  if (g.size() != n || c.stage == UgbStage::Member) return false;
  if (c.points.empty() || c.points.size() != c.coefficients.size()) return false;
  const IntVector plus = g.plus();
  const IntVector minus = g.minus();
  const IntVector b = matvec(a, plus);
  for (const auto& v : c.points) {
    if (v.size() != n) return false;
    for (const auto& x : v) {
      if (x.sign() < 0) return false;
    }
    if (matvec(a, v) != b) return false;
  }
  for (const auto& q : c.coefficients) {
    if (q.sign() <= 0) return false;
  }

  std::vector<Rational> sum(n);
  Rational weight;
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    const IntVector& v = c.points[k];
    weight += c.coefficients[k];
    for (std::size_t i = 0; i < n; ++i) {
      Integer x = c.stage == UgbStage::NotEdge ? v[i] - minus[i] : v[i];
      sum[i] += c.coefficients[k] * Rational(x);
    }
  }
  auto equals = [&](const IntVector& t) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sum[i] != Rational(t[i])) return false;
    }
    return true;
  };
  switch (c.stage) {
    case UgbStage::PlusNotVertex:
      for (const auto& v : c.points) {
        if (v == plus) return false;
      }
      return weight == Rational(1) && equals(plus);
    case UgbStage::MinusNotVertex:
      for (const auto& v : c.points) {
        if (v == minus) return false;
      }
      return weight == Rational(1) && equals(minus);
    case UgbStage::NotEdge:
      for (const auto& v : c.points) {
        if (v == plus || v == minus) return false;
      }
      return equals(g.base());
    case UgbStage::Member:
      break;
  }
  return false;
}

namespace {

struct PublishedCase {
  std::string id;
  FamilyCase which;
  SignedVector witness;
  Certificate printed;
  std::optional<Certificate> amended;
};

IntVector iv(std::initializer_list<Integer> xs) { return IntVector(xs); }

std::vector<PublishedCase> published_cases() {
  const Rational half(1, 2);
  Certificate curve{UgbStage::NotEdge,
                    {iv({1, 0, 0, 0, 2, 0, 0}), iv({0, 2, 0, 0, 0, 0, 1}), iv({0, 0, 1, 2, 0, 0, 0})},
                    {1, 1, 1}};
  std::vector<PublishedCase> out;
  out.push_back({"S6", FamilyCase::scroll({6}), {1, -1, 1, -1, -1, 0, 1}, curve, std::nullopt});
  out.push_back({"S54",
                 FamilyCase::scroll({5, 4}),
                 {1, -1, 0, 0, 1, -1, 1, -2, 0, 0, 1},
                 {UgbStage::PlusNotVertex,
                  {iv({0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0}), iv({2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2})},
                  {half, half}},
                 std::nullopt});
  out.push_back({"S432",
                 FamilyCase::scroll({4, 3, 2}),
                 {-1, 0, 0, 0, 1, 1, -1, 1, -1, 1, 0, -1},
                 {UgbStage::NotEdge,
                  {iv({0, 0, 0, 0, 1, 0, 2, 0, 0, 1, 0, 0}), iv({1, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0, 0}),
                   iv({0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 1}), iv({1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1})},
                  {half, half, half, half}},
                 std::nullopt});
  out.push_back({"H7", FamilyCase::h({7}), {1, -1, 1, -1, -1, 0, 1}, curve, std::nullopt});
  out.push_back({"H62",
                 FamilyCase::h({6, 2}),
                 {-1, 1, -1, -1, 0, 1, 2, -1},
                 {UgbStage::NotEdge,
                  {iv({0, 0, 0, 2, 2, 0, 0, 0}), iv({2, 0, 0, 0, 0, 1, 0, 1}), iv({0, 1, 2, 0, 0, 0, 1, 0, 0})},
                  {1, 1, 1}},
                 Certificate{UgbStage::NotEdge,
                             {iv({0, 0, 0, 2, 0, 0, 2, 0}), iv({2, 0, 0, 0, 0, 1, 0, 1}),
                              iv({0, 1, 2, 0, 0, 0, 0, 1})},
                             {1, 1, 1}}});
  out.push_back({"H43",
                 FamilyCase::h({4, 3}),
                 {1, 2, 1, -2, -3, 0, 1},
                 {UgbStage::PlusNotVertex, {iv({2, 0, 2, 0, 0, 0, 1}), iv({0, 4, 0, 0, 0, 0, 1})}, {half, half}},
                 std::nullopt});
  return out;
}

}  // namespace

std::vector<std::string> counterexample_ids() {
  std::vector<std::string> ids;
  for (const auto& c : published_cases()) ids.push_back(c.id);
  return ids;
}

CounterexampleReport verify_counterexample(const std::string& id) {
  for (auto& pc : published_cases()) {
    if (pc.id != id) continue;
    CounterexampleReport r;
    r.id = pc.id;
    r.which = pc.which;
    r.witness = pc.witness;
    IntMatrix a = pc.which.matrix();
    if (!matvec(a, pc.witness.base()).is_zero()) return r;
    r.in_graver = graver_basis(a).contains(pc.witness);

    UgbOptions uo;
    uo.restrict_to_support = false;
    UgbResult u = ugb_test(pc.witness, a, uo);
    r.ugb_member = u.member;
    r.fiber_size = u.fiber_size;
    if (!u.member) {
      r.certificate = {u.stage, std::move(u.points), std::move(u.coefficients)};
      r.certificate_valid = check_certificate(pc.witness, a, r.certificate);
    }
    r.printed = pc.printed;
    r.printed_valid = check_certificate(pc.witness, a, r.printed);
    if (pc.amended) {
      r.amended = pc.amended;
      r.amended_valid = check_certificate(pc.witness, a, *pc.amended);
    }
    return r;
  }
  throw std::invalid_argument("unknown counterexample case '" + id + "'");
}

std::vector<CounterexampleReport> verify_counterexamples() {
  std::vector<CounterexampleReport> out;
  for (const auto& id : counterexample_ids()) out.push_back(verify_counterexample(id));
  return out;
}

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "PASS";
    case CaseStatus::Fail: return "FAIL";
    case CaseStatus::Skipped: return "SKIPPED(timeout)";
  }
  return "?";
}

std::vector<FamilyCase> equality_cases(Budget budget) {
  std::vector<FamilyCase> cs = {FamilyCase::scroll({2}),    FamilyCase::scroll({5}),    FamilyCase::h({6}),
                                FamilyCase::scroll({3, 3}), FamilyCase::h({3, 3}),      FamilyCase::h({2, 2}),
                                FamilyCase::scroll({4, 4})};
  if (budget == Budget::Small) return cs;
  std::vector<std::size_t> twos8(9, 2);
  twos8[0] = 5;
  std::vector<std::size_t> ones7(9, 1);
  ones7[0] = 5;
  ones7[1] = 3;
  std::vector<std::size_t> twos12(13, 2);
  twos12[0] = 5;
  std::vector<FamilyCase> ext = {FamilyCase::scroll({3, 3, 3}),
                                 FamilyCase::h({3, 3, 3}),
                                 FamilyCase::scroll({3, 3, 3, 3, 3}),
                                 FamilyCase::h({3, 3, 3, 3, 3}),
                                 FamilyCase::scroll({4, 4, 1, 1, 1, 1, 1}),
                                 FamilyCase::scroll(twos8),
                                 FamilyCase::scroll(ones7),
                                 FamilyCase::h(twos12)};
  cs.insert(cs.end(), ext.begin(), ext.end());
  return cs;
}

EqualityCaseReport run_equality_case(const FamilyCase& c, std::optional<std::chrono::seconds> case_limit,
                                     unsigned jobs) {
  EqualityCaseReport rep;
  rep.which = c;
  EqualityOptions eo;
  eo.jobs = jobs;
  if (case_limit) eo.deadline = Deadline::after(*case_limit);
  auto t0 = std::chrono::steady_clock::now();
  try {
    rep.result = check_equality(c.matrix(), eo);
    rep.status = rep.result.equal ? CaseStatus::Pass : CaseStatus::Fail;
  } catch (const TimeoutError&) {
    rep.status = CaseStatus::Skipped;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<EqualityCaseReport> verify_equality_cases(Budget budget, std::optional<std::chrono::seconds> case_limit,
                                                      unsigned jobs) {
  std::vector<EqualityCaseReport> out;
  for (const auto& c : equality_cases(budget)) out.push_back(run_equality_case(c, case_limit, jobs));
  return out;
}

BlockReduction reduce_by_type(const SignedVector& g, const IntMatrix& a, std::span<const std::size_t> block_sizes) {
  if (g.size() != a.cols()) throw DimensionMismatch("reduce_by_type: vector length differs from column count");
  block_type(g.base(), block_sizes);
  std::vector<std::size_t> sigma;
  BlockReduction r;
  std::size_t start = 0;
  for (std::size_t blk = 0; blk < block_sizes.size(); ++blk) {
    bool active = false;
    for (std::size_t i = start; i < start + block_sizes[blk]; ++i) active |= !g[i].is_zero();
    if (active) {
      for (std::size_t i = start; i < start + block_sizes[blk]; ++i) sigma.push_back(i);
      r.block_sizes.push_back(block_sizes[blk]);
      r.kept_blocks.push_back(blk);
    }
    start += block_sizes[blk];
  }
  Restriction res = restrict_support(g, a, sigma, true);
  r.u = std::move(res.u);
  r.a = std::move(res.a);
  return r;
}

std::vector<ClassificationResult> classification_sweep(std::size_t max_n, unsigned jobs) {
  std::vector<ClassificationResult> out;
  for (Family f : {Family::S, Family::H}) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& p : partitions_of(n)) {
        ClassificationResult r;
        r.which = FamilyCase{f, p};
        r.predicted_equal = predict(r.which);
        EqualityOptions eo;
        eo.jobs = jobs;
        EqualityResult e = check_equality(r.which.matrix(), eo);
        r.computed_equal = e.equal;
        r.witnesses = std::move(e.witnesses);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<std::pair<FamilyCase, FamilyCase>> monotonicity_violations(const std::vector<ClassificationResult>& r) {
  std::vector<std::pair<FamilyCase, FamilyCase>> out;
  for (const auto& big : r) {
    if (!big.computed_equal) continue;
    for (const auto& small : r) {
      if (small.which.family != big.which.family || small.computed_equal) continue;
      if (dominates(big.which.partition, small.which.partition)) out.emplace_back(big.which, small.which);
    }
  }
  return out;
}

}  // namespace toricgb
