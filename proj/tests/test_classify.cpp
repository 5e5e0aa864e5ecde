#include <gtest/gtest.h>

#include <algorithm>

#include "test_seed.hpp"
#include "toricgb/classify.hpp"

using namespace toricgb;

TEST(Predict, Examples) {
  EXPECT_TRUE(predict(FamilyCase::scroll({5})));
  EXPECT_FALSE(predict(FamilyCase::scroll({6})));
  EXPECT_TRUE(predict(FamilyCase::h({3, 3, 3})));
  EXPECT_FALSE(predict(FamilyCase::h({6, 2, 1})));
  EXPECT_FALSE(predict(FamilyCase::scroll({5, 4, 4})));
  EXPECT_TRUE(predict(FamilyCase::scroll({5, 3, 1, 1})));
}

TEST(FamilyCase, Labels) {
  EXPECT_EQ(FamilyCase::scroll({4, 3, 2}).label(), "S(4,3,2)");
  EXPECT_EQ(FamilyCase::scroll({4, 3, 2}).block_sizes(), (std::vector<std::size_t>{5, 4, 3}));
  EXPECT_EQ(FamilyCase::h({6, 2}).label(), "H(6,2)");
  EXPECT_EQ(minimal_counterexamples(Family::H).size(), 3U);
}

TEST(CheckEquality, SmallScroll) {
  EqualityResult r = check_equality(IntMatrix{{1, 2, 3}, {1, 1, 1}});
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_EQ(r.graver_size, 1U);
}

TEST(CheckEquality, CurveHasWitness) {
  EqualityResult r = check_equality(FamilyCase::scroll({6}).matrix());
  EXPECT_FALSE(r.equal);
  EXPECT_TRUE(std::find(r.witnesses.begin(), r.witnesses.end(), SignedVector{1, -1, 1, -1, -1, 0, 1}) !=
              r.witnesses.end());
}

TEST(CheckEquality, WitnessesArePrimitiveNonMembers) {
  for (const FamilyCase& c : {FamilyCase::h({2, 2}), FamilyCase::h({6, 2}), FamilyCase::scroll({6, 0})}) {
    const IntMatrix a = c.matrix();
    EqualityResult r = check_equality(a);
    EXPECT_EQ(r.equal, r.witnesses.empty());
    EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end(), canonical_less));
    for (const auto& w : r.witnesses) {
      EXPECT_TRUE(is_primitive(w, a)) << c.label();
      EXPECT_FALSE(ugb_member(w, a)) << c.label();
    }
  }
}

TEST(CheckEquality, ThreadCountDoesNotChangeResult) {
  const IntMatrix a = FamilyCase::h({6, 2}).matrix();
  EqualityOptions one;
  EqualityOptions four;
  four.jobs = 4;
  EXPECT_EQ(check_equality(a, one).witnesses, check_equality(a, four).witnesses);
}

TEST(VerifyCounterexamples, AllPass) {
  auto reports = verify_counterexamples();
  ASSERT_EQ(reports.size(), 6U);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.in_graver) << r.id;
    EXPECT_FALSE(r.ugb_member) << r.id;
    EXPECT_TRUE(r.certificate_valid) << r.id;
  }
}

TEST(VerifyCounterexamples, PrintedCertificates) {
  for (const auto& id : {"S6", "S54", "S432", "H7", "H43"}) {
    EXPECT_TRUE(verify_counterexample(id).printed_valid) << id;
  }
  CounterexampleReport h62 = verify_counterexample("H62");
  EXPECT_FALSE(h62.printed_valid);
  ASSERT_TRUE(h62.amended.has_value());
  EXPECT_TRUE(h62.amended_valid);
  EXPECT_EQ(h62.witness, SignedVector({-1, 1, -1, -1, 0, 1, 2, -1}));
  EXPECT_THROW(verify_counterexample("S7"), std::invalid_argument);
}

TEST(VerifyCounterexamples, RecomputedCurveCertificate) {
  CounterexampleReport r = verify_counterexample("S6");
  EXPECT_EQ(r.certificate.stage, UgbStage::NotEdge);
  EXPECT_EQ(r.certificate.coefficients, (std::vector<Rational>{1, 1, 1}));
  CounterexampleReport h = verify_counterexample("H43");
  EXPECT_EQ(h.certificate.stage, UgbStage::PlusNotVertex);
}

TEST(CheckCertificate, RejectsTamperedData) {
  CounterexampleReport r = verify_counterexample("H43");
  const IntMatrix a = r.which.matrix();
  Certificate c = r.certificate;
  ASSERT_TRUE(check_certificate(r.witness, a, c));
  c.coefficients.front() += Rational(1, 7);
  EXPECT_FALSE(check_certificate(r.witness, a, c));
  c = r.certificate;
  c.points.front()[0] += Integer(1);
  EXPECT_FALSE(check_certificate(r.witness, a, c));
}

TEST(EqualityCases, SmallBudget) {
  for (const auto& rep : verify_equality_cases(Budget::Small, std::nullopt)) {
    EXPECT_EQ(rep.status, CaseStatus::Pass) << rep.which.label();
  }
}

TEST(EqualityCases, TimeoutIsSkipped) {
  EqualityCaseReport r = run_equality_case(FamilyCase::scroll({5, 2, 2, 2, 2, 2, 2, 2, 2}), std::chrono::seconds(0));
  EXPECT_EQ(r.status, CaseStatus::Skipped);
  EXPECT_STREQ(to_string(r.status), "SKIPPED(timeout)");
}

TEST(ReduceByType, DropsZeroBlocks) {
  FamilyCase big = FamilyCase::scroll({2, 2, 2, 2, 2});
  const IntMatrix a = big.matrix();
  IntVector u(15);
  const std::vector<int> g{1, -1, 0, 0, -1, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    u[3 + i] = g[i];
    u[9 + i] = g[3 + i];
  }
  ASSERT_TRUE(matvec(a, u).is_zero());
  BlockReduction r = reduce_by_type(SignedVector(u), a, big.block_sizes());
  EXPECT_EQ(r.kept_blocks, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(r.a, FamilyCase::scroll({2, 2}).matrix());
  EXPECT_EQ(r.u, SignedVector({1, -1, 0, 0, -1, 1}));
  EXPECT_EQ(ugb_member(r.u, r.a), ugb_member(SignedVector(u), a));

  SignedVector full{1, -2, 1, 1, -2, 1};
  BlockReduction same = reduce_by_type(full, FamilyCase::scroll({2, 2}).matrix(), std::vector<std::size_t>{3, 3});
  EXPECT_EQ(same.u, full);
  EXPECT_EQ(same.a, FamilyCase::scroll({2, 2}).matrix());
}

TEST(ReduceByType, ManyBlockElementsShrinkToFive) {
  FamilyCase c = FamilyCase::scroll({2, 2, 2, 2, 2, 2});
  GraverBasis g = graver_basis(c.matrix());
  for (const auto& e : g.elements()) {
    BlockReduction r = reduce_by_type(e, c.matrix(), c.block_sizes());
    EXPECT_LE(r.kept_blocks.size(), 5U) << e.base();
  }
}

TEST(ClassificationSweep, AgreesUpToSix) {
  auto results = classification_sweep(6);
  for (const auto& r : results) EXPECT_TRUE(r.agrees()) << r.which.label();
  EXPECT_TRUE(monotonicity_violations(results).empty());
}
