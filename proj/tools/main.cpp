#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "toricgb/classify.hpp"
#include "toricgb/complexity.hpp"
#include "toricgb/fiber.hpp"
#include "toricgb/formats.hpp"
#include "toricgb/graver.hpp"
#include "toricgb/oracle.hpp"
#include "verify_paper.hpp"

namespace {

using namespace toricgb;

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kPrecondition = 3 };

constexpr const char* kTimeoutEnv = "TORICGB_CASE_TIMEOUT";

/// Writes to the named file, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ParseError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

IntMatrix read_input(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  return read_matrix_file(path);
}

std::chrono::seconds case_limit_from_env() {
  const char* v = std::getenv(kTimeoutEnv);
  if (!v || !*v) return std::chrono::seconds(1800);
  try {
    long long s = std::stoll(v);
    if (s <= 0) throw std::invalid_argument(v);
    return std::chrono::seconds(s);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(kTimeoutEnv) + " must be a positive number of seconds");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graver bases and universal Groebner bases of integer matrices"};
  app.require_subcommand(1);

  std::string family;
  std::string label;
  std::string partition;
  std::string out_path;
  auto* matrix = app.add_subcommand("matrix", "Write the matrix of an S or H family member");
  matrix->add_option("--family", family, "S or H")->required()->check(CLI::IsMember({"S", "H"}));
  auto* label_opt = matrix->add_option("--label", label, "S: scroll degrees, H: partition parts (e.g. 4,3,2)");
  auto* part_opt = matrix->add_option("--partition", partition, "block sizes (e.g. 5,4,3)");
  label_opt->excludes(part_opt);
  matrix->add_option("-o,--output", out_path, "output file (default stdout)");

  std::string in_path;
  std::string engine = "lift";
  auto* graver = app.add_subcommand("graver", "Graver basis of a matrix file");
  graver->add_option("input", in_path, "matrix file, or - for stdin")->required();
  graver->add_option("-o,--output", out_path, "output file (default stdout)");
  graver->add_option("--engine", engine, "lift or completion")->check(CLI::IsMember({"lift", "completion"}));

  unsigned jobs = 1;
  auto* ugb = app.add_subcommand("ugb", "Universal Groebner basis elements among the Graver basis");
  ugb->add_option("input", in_path, "matrix file, or - for stdin")->required();
  ugb->add_option("-o,--output", out_path, "output file (default stdout)");
  ugb->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string c_path;
  std::string d_path;
  auto* complexity = app.add_subcommand("complexity", "Graver complexity g(C, D)");
  complexity->add_option("C", c_path, "matrix file for C")->required();
  complexity->add_option("D", d_path, "matrix file for D")->required();

  cli::VerifyOptions vo;
  std::string budget = "small";
  std::string only;
  auto* verify = app.add_subcommand("verify-paper", "Run the built-in reproduction checks");
  verify->add_option("--budget", budget, "small or extended")->check(CLI::IsMember({"small", "extended"}));
  verify->add_option("--case", only, "run a single case: S6, S54, S432, H7, H62, H43 or an equality label");
  verify->add_option("--out-dir", vo.out_dir, "directory for report.txt and summary.json");
  verify->add_option("-j,--jobs", vo.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", vo.timings, "include wall-clock times in the outputs");
  verify->footer(std::string("Extended cases stop after ") + kTimeoutEnv + " seconds each (default 1800).");

  std::size_t bound = 0;
  auto* oracle = app.add_subcommand("oracle", "Brute-force primitive kernel vectors up to a 1-norm bound");
  oracle->group("");
  oracle->add_option("input", in_path, "matrix file")->required();
  oracle->add_option("--bound", bound, "1-norm bound")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*matrix) {
      if (label.empty() == partition.empty()) throw std::invalid_argument("give exactly one of --label, --partition");
      FamilyCase c;
      if (!partition.empty()) {
        c = {family == "S" ? Family::S : Family::H, Partition(parse_parts(partition))};
      } else {
        c = family == "S" ? FamilyCase::scroll(parse_parts(label)) : FamilyCase::h(parse_parts(label));
      }
      Output out(out_path);
      write_matrix(out.stream(), c.matrix());
      return kOk;
    }
    if (*graver) {
      IntMatrix a = read_input(in_path);
      GraverOptions go;
      go.engine = engine == "lift" ? GraverEngine::ProjectAndLift : GraverEngine::Completion;
      GraverBasis g = graver_basis(a, go);
      Output out(out_path);
      write_vector_set(out.stream(), g.elements(), a.cols());
      return kOk;
    }
    if (*ugb) {
      IntMatrix a = read_input(in_path);
      check_fiber_matrix(a);
      EqualityOptions eo;
      eo.jobs = jobs;
      EqualityResult r = check_equality(a, eo);
      GraverBasis g = graver_basis(a);
      std::vector<SignedVector> members;
      for (const auto& e : g.elements()) {
        if (!std::binary_search(r.witnesses.begin(), r.witnesses.end(), e, canonical_less)) members.push_back(e);
      }
      Output out(out_path);
      write_vector_set(out.stream(), members, a.cols());
      return kOk;
    }
    if (*complexity) {
      ComplexityReport r = graver_complexity(read_matrix_file(c_path), read_matrix_file(d_path));
      std::cout << r.complexity << '\n';
      return kOk;
    }
    if (*verify) {
      vo.budget = budget == "small" ? Budget::Small : Budget::Extended;
      if (!only.empty()) vo.only = only;
      vo.case_limit = case_limit_from_env();
      return cli::verify_paper(vo) ? kOk : kCheckFailed;
    }
    if (*oracle) {
      IntMatrix a = read_input(in_path);
      auto vs = oracle::filter_primitive(oracle::enumerate_kernel_bounded({a, bound}));
      write_vector_set(std::cout, vs, a.cols());
      return kOk;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}
