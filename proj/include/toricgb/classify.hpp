#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricgb/complexity.hpp"
#include "toricgb/deadline.hpp"
#include "toricgb/families.hpp"
#include "toricgb/fiber.hpp"
#include "toricgb/graver.hpp"

namespace toricgb {

/// A member of one of the two matrix families. S cases are labeled by
/// scroll degrees, H cases by partition parts; both store the partition.
struct FamilyCase {
  Family family = Family::S;
  Partition partition{std::vector<std::size_t>{1}};

  static FamilyCase scroll(std::vector<std::size_t> degrees);
  static FamilyCase h(std::vector<std::size_t> parts);

  /// "S(4,3,2)", "H(6,2)"
  [[nodiscard]] std::string label() const;
  [[nodiscard]] IntMatrix matrix() const;
  [[nodiscard]] const std::vector<std::size_t>& block_sizes() const { return partition.parts(); }

  friend bool operator==(const FamilyCase&, const FamilyCase&) = default;
};

const char* to_string(Family f);

/// Dominance-minimal cases where the two bases differ.
std::vector<FamilyCase> minimal_counterexamples(Family f);

/// True when the bases are predicted equal: the case dominates none of the
/// family's minimal counterexamples.
bool predict(const FamilyCase& c);

struct EqualityOptions {
  unsigned jobs = 1;
  bool restrict_to_support = true;
  Deadline deadline{};
};

struct EqualityResult {
  bool equal = true;
  /// Graver elements outside the universal Groebner basis, canonical order.
  std::vector<SignedVector> witnesses;
  std::size_t graver_size = 0;
  std::size_t fibers = 0;
};

/// Runs the fiber test on every canonical Graver element of A.
EqualityResult check_equality(const IntMatrix& a, const EqualityOptions& options = {});

/// Certificate that a kernel vector g fails the fiber test: points of the
/// fiber of A g+ and coefficients as described by UgbResult.
struct Certificate {
  UgbStage stage = UgbStage::NotEdge;
  std::vector<IntVector> points;
  std::vector<Rational> coefficients;
};

/// Exact check of a failure certificate for g against A: every point is a
/// nonnegative solution in the fiber, every coefficient positive, and the
/// combination identity holds.
bool check_certificate(const SignedVector& g, const IntMatrix& a, const Certificate& c);

struct CounterexampleReport {
  std::string id;
  FamilyCase which;
  SignedVector witness;
  bool in_graver = false;
  bool ugb_member = true;
  std::size_t fiber_size = 0;
  Certificate certificate;
  bool certificate_valid = false;
  /// The published certificate, checked as given.
  Certificate printed;
  bool printed_valid = false;
  /// A corrected certificate for cases whose published one does not check.
  std::optional<Certificate> amended;
  bool amended_valid = false;

  [[nodiscard]] bool passed() const { return in_graver && !ugb_member && certificate_valid; }
};

/// Case ids: S6, S54, S432, H7, H62, H43.
std::vector<std::string> counterexample_ids();
CounterexampleReport verify_counterexample(const std::string& id);
std::vector<CounterexampleReport> verify_counterexamples();

enum class Budget { Small, Extended };
enum class CaseStatus { Pass, Fail, Skipped };
const char* to_string(CaseStatus s);

struct EqualityCaseReport {
  FamilyCase which;
  CaseStatus status = CaseStatus::Fail;
  EqualityResult result;
  double seconds = 0;
};

std::vector<FamilyCase> equality_cases(Budget budget);

/// Every case is expected equal. A case that exceeds case_limit (if set) is
/// reported as Skipped.
EqualityCaseReport run_equality_case(const FamilyCase& c, std::optional<std::chrono::seconds> case_limit,
                                     unsigned jobs = 1);
std::vector<EqualityCaseReport> verify_equality_cases(Budget budget, std::optional<std::chrono::seconds> case_limit,
                                                      unsigned jobs = 1);

struct BlockReduction {
  SignedVector u;
  IntMatrix a;
  std::vector<std::size_t> block_sizes;
  /// Indices of the blocks that survive.
  std::vector<std::size_t> kept_blocks;
};

/// Drops the blocks on which g vanishes, the matching columns of A, and the
/// rows of A that become zero.
BlockReduction reduce_by_type(const SignedVector& g, const IntMatrix& a, std::span<const std::size_t> block_sizes);

struct ClassificationResult {
  FamilyCase which;
  bool predicted_equal = true;
  bool computed_equal = true;
  std::vector<SignedVector> witnesses;

  [[nodiscard]] bool agrees() const { return predicted_equal == computed_equal; }
};

/// Both families, every partition of 1..max_n, in order S then H.
std::vector<ClassificationResult> classification_sweep(std::size_t max_n, unsigned jobs = 1);

/// Pairs (big, small) of the same family where big is computed equal and
/// dominates small, but small is not.
std::vector<std::pair<FamilyCase, FamilyCase>> monotonicity_violations(const std::vector<ClassificationResult>& r);

}  // namespace toricgb
