#include "toricgb/formats.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace toricgb {

namespace {

class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  std::size_t count(const char* what) {
    Integer v = next(what);
    if (v.sign() < 0 || !v.fits_int64()) throw ParseError(std::string("invalid ") + what + ": " + v.to_string());
    return static_cast<std::size_t>(v.to_int64());
  }

  Integer next(const char* what) {
    std::string tok;
    if (!(in_ >> tok)) throw ParseError(std::string("unexpected end of input reading ") + what);
    try {
      return Integer::parse(tok);
    } catch (const std::invalid_argument&) {
      throw ParseError(std::string("not an integer (") + what + "): '" + tok + "'");
    }
  }

  void expect_end() {
    std::string tok;
    if (in_ >> tok) throw ParseError("trailing data: '" + tok + "'");
  }

 private:
  std::istream& in_;
};

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return f;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
  Tokens t(in);
  std::size_t d = t.count("row count");
  std::size_t n = t.count("column count");
  IntMatrix a(d, n);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = t.next("matrix entry");
  }
  t.expect_end();
  return a;
}

void write_matrix(std::ostream& out, const IntMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? " " : "") << a(r, c);
    out << '\n';
  }
}

std::vector<SignedVector> read_vector_set(std::istream& in) {
  Tokens t(in);
  std::size_t count = t.count("vector count");
  std::size_t n = t.count("vector length");
  std::vector<SignedVector> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Integer> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(t.next("vector entry"));
    out.emplace_back(IntVector(std::move(e)));
  }
  t.expect_end();
  return out;
}

void write_vector_set(std::ostream& out, std::vector<SignedVector> vs, std::size_t n) {
  for (auto& v : vs) {
    if (v.size() != n) throw DimensionMismatch("vector set entry has wrong length");
    v = v.canonical();
  }
  std::sort(vs.begin(), vs.end(), canonical_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  out << vs.size() << ' ' << n << '\n';
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
}

IntMatrix read_matrix_file(const std::string& path) {
  auto f = open(path);
  return read_matrix(f);
}

std::vector<SignedVector> read_vector_set_file(const std::string& path) {
  auto f = open(path);
  return read_vector_set(f);
}

}  // namespace toricgb
