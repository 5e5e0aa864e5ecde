#include "verify_paper.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace toricgb::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string vec_str(const IntVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

class Run {
 public:
  explicit Run(const VerifyOptions& o) : opt_(o) {
    summary_["budget"] = o.budget == Budget::Small ? "small" : "extended";
    summary_["cases"] = Json::array();
  }

  void section(const std::string& title) { text_ << "\n[" << title << "]\n"; }

  void record(Json rec, bool ok, double seconds) {
    failed_ |= !ok;
    if (!rec.contains("status")) rec["status"] = verdict(ok);
    if (opt_.timings) rec["time"] = seconds;
    summary_["cases"].push_back(std::move(rec));
  }

  void line(const std::string& s, double seconds) {
    text_ << s;
    if (opt_.timings) text_ << "  (" << std::fixed << std::setprecision(3) << seconds << "s)";
    text_ << '\n';
  }
  std::ostream& text() { return text_; }
  void fail() { failed_ = true; }

  bool finish() {
    text_ << "\noverall " << verdict(!failed_) << '\n';
    summary_["passed"] = !failed_;
    std::cout << text_.str();
    if (!opt_.out_dir.empty()) {
      std::filesystem::create_directories(opt_.out_dir);
      std::ofstream(std::filesystem::path(opt_.out_dir) / "report.txt") << text_.str();
      std::ofstream(std::filesystem::path(opt_.out_dir) / "summary.json") << summary_.dump(2) << '\n';
    }
    return !failed_;
  }

 private:
  const VerifyOptions& opt_;
  std::ostringstream text_;
  Json summary_;
  bool failed_ = false;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_certificate(std::ostream& os, const Certificate& c) {
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    os << "    " << c.coefficients[k] << " * " << c.points[k] << '\n';
  }
}

void counterexample(Run& run, const std::string& id) {
  auto t0 = std::chrono::steady_clock::now();
  CounterexampleReport r = verify_counterexample(id);
  double s = since(t0);
  std::ostringstream head;
  head << r.id << ' ' << r.which.label() << ' ' << verdict(r.passed()) << "  g=" << r.witness.base()
       << "  in Graver basis: " << yes_no(r.in_graver) << "  UGB member: " << yes_no(r.ugb_member);
  run.line(head.str(), s);
  auto& os = run.text();
  if (!r.ugb_member) {
    os << "  recomputed certificate (" << to_string(r.certificate.stage) << ", fiber of " << r.fiber_size
       << " points): " << (r.certificate_valid ? "verified" : "INVALID") << '\n';
    write_certificate(os, r.certificate);
  }
  os << "  published certificate: " << (r.printed_valid ? "verified" : "does not check") << '\n';
  if (r.amended) {
    os << "  amended certificate: " << (r.amended_valid ? "verified" : "does not check") << '\n';
    write_certificate(os, *r.amended);
  }
  Json rec;
  rec["section"] = "counterexample";
  rec["id"] = r.id;
  rec["family"] = to_string(r.which.family);
  rec["label"] = r.which.label();
  rec["predicted"] = predict(r.which);
  rec["computed"] = r.ugb_member;
  rec["witnesses"] = r.ugb_member ? 0 : 1;
  rec["witness"] = vec_str(r.witness.base());
  rec["failure"] = to_string(r.certificate.stage);
  rec["certificate_verified"] = r.certificate_valid;
  rec["published_certificate_verified"] = r.printed_valid;
  if (r.amended) rec["amended_certificate_verified"] = r.amended_valid;
  run.record(std::move(rec), r.passed(), s);
}

void equality(Run& run, const FamilyCase& c, bool guarded, const VerifyOptions& o) {
  auto limit = guarded ? std::optional<std::chrono::seconds>(o.case_limit) : std::nullopt;
  EqualityCaseReport r = run_equality_case(c, limit, o.jobs);
  std::ostringstream head;
  head << c.label() << ' ' << to_string(r.status) << "  Graver elements: " << r.result.graver_size
       << "  non-UGB: " << r.result.witnesses.size();
  run.line(head.str(), r.seconds);
  for (const auto& w : r.result.witnesses) run.text() << "    witness " << w.base() << '\n';
  Json rec;
  rec["section"] = "equality";
  rec["family"] = to_string(c.family);
  rec["label"] = c.label();
  rec["predicted"] = predict(c);
  rec["computed"] = r.status == CaseStatus::Skipped ? Json(nullptr) : Json(r.result.equal);
  rec["graver_size"] = r.result.graver_size;
  rec["witnesses"] = r.result.witnesses.size();
  rec["status"] = to_string(r.status);
  run.record(std::move(rec), r.status != CaseStatus::Fail, r.seconds);
}

IntMatrix row_matrix(std::size_t m, bool ramp) {
  IntMatrix a(1, m);
  for (std::size_t i = 0; i < m; ++i) a(0, i) = ramp ? static_cast<std::int64_t>(i + 1) : 1;
  return a;
}

void complexity(Run& run) {
  for (std::size_t m = 3; m <= 6; ++m) {
    auto t0 = std::chrono::steady_clock::now();
    ComplexityReport r = graver_complexity(row_matrix(m, false), row_matrix(m, true));
    Integer want(static_cast<std::int64_t>(type_bound_for_family(Family::S, m)));
    bool ok = r.complexity == want;
    double s = since(t0);
    std::ostringstream os;
    os << "g(C,D) C=(1..1) D=(1.." << m << ") = " << r.complexity << "  expected " << want << "  " << verdict(ok);
    run.line(os.str(), s);
    Json rec{{"section", "complexity"}, {"pair", "S"}, {"m", m}, {"value", r.complexity.to_string()},
             {"expected", want.to_string()}};
    run.record(std::move(rec), ok, s);
  }
  for (std::size_t m = 3; m <= 4; ++m) {
    auto t0 = std::chrono::steady_clock::now();
    ComplexityReport r = graver_complexity(row_matrix(m, true), row_matrix(m, false));
    Integer bound(static_cast<std::int64_t>(type_bound_for_family(Family::H, m)));
    bool ok = r.complexity <= bound;
    double s = since(t0);
    std::ostringstream os;
    os << "g(D,C) C=(1..1) D=(1.." << m << ") = " << r.complexity << "  bound " << bound << "  " << verdict(ok);
    run.line(os.str(), s);
    Json rec{{"section", "complexity"}, {"pair", "H"}, {"m", m}, {"value", r.complexity.to_string()},
             {"bound", bound.to_string()}};
    run.record(std::move(rec), ok, s);
  }
}

void norms(Run& run) {
  for (std::size_t m = 3; m <= 7; ++m) {
    auto t0 = std::chrono::steady_clock::now();
    Integer got = max_one_norm(graver_basis(row_matrix(m, true)));
    Integer want(static_cast<std::int64_t>(2 * m - 1));
    bool ok = got == want;
    double s = since(t0);
    std::ostringstream os;
    os << "max 1-norm of G(1.." << m << ") = " << got << "  expected " << want << "  " << verdict(ok);
    run.line(os.str(), s);
    run.record(Json{{"section", "norm"}, {"m", m}, {"value", got.to_string()}, {"expected", want.to_string()}}, ok, s);
  }
}

void sweep(Run& run, const VerifyOptions& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto results = classification_sweep(8, o.jobs);
  for (const auto& r : results) {
    run.text() << r.which.label() << "  predicted " << (r.predicted_equal ? "equal" : "unequal") << "  computed "
               << (r.computed_equal ? "equal" : "unequal") << "  non-UGB: " << r.witnesses.size() << "  "
               << verdict(r.agrees()) << '\n';
    Json rec{{"section", "classification"}, {"family", to_string(r.which.family)}, {"label", r.which.label()},
             {"predicted", r.predicted_equal}, {"computed", r.computed_equal}, {"witnesses", r.witnesses.size()}};
    run.record(std::move(rec), r.agrees(), 0);
  }
  auto bad = monotonicity_violations(results);
  for (const auto& [big, small] : bad) {
    run.text() << "  dominance violated: " << big.label() << " equal but " << small.label() << " unequal\n";
  }
  run.line(std::string("dominance monotonicity ") + verdict(bad.empty()), since(t0));
  run.record(Json{{"section", "monotonicity"}, {"violations", bad.size()}}, bad.empty(), since(t0));
}

}  // namespace

bool verify_paper(const VerifyOptions& o) {
  Run run(o);
  run.text() << "verify-paper budget=" << (o.budget == Budget::Small ? "small" : "extended") << '\n';
  if (o.only) {
    auto ids = counterexample_ids();
    if (std::find(ids.begin(), ids.end(), *o.only) != ids.end()) {
      run.section("counterexamples");
      counterexample(run, *o.only);
      return run.finish();
    }
    for (const auto& c : equality_cases(Budget::Extended)) {
      if (c.label() == *o.only) {
        run.section("equality");
        equality(run, c, true, o);
        return run.finish();
      }
    }
    throw std::invalid_argument("unknown case '" + *o.only + "'");
  }

  run.section("counterexamples");
  for (const auto& id : counterexample_ids()) counterexample(run, id);
  run.section("equality");
  const auto small = equality_cases(Budget::Small);
  for (const auto& c : equality_cases(o.budget)) {
    bool guarded = std::find(small.begin(), small.end(), c) == small.end();
    equality(run, c, guarded, o);
  }
  run.section("complexity");
  complexity(run);
  run.section("norms");
  norms(run);
  run.section("classification n<=8");
  sweep(run, o);
  return run.finish();
}

}  // namespace toricgb::cli
