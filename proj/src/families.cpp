#include "toricgb/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace toricgb {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

bool nonincreasing(const std::vector<std::size_t>& xs) {
  return std::is_sorted(xs.begin(), xs.end(), std::greater<>{});
}

}  // namespace

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  if (!nonincreasing(parts_)) throw std::invalid_argument("partition parts must be nonincreasing: " + join(parts_));
  if (parts_.back() == 0) throw std::invalid_argument("partition parts must be positive: " + join(parts_));
}

std::size_t Partition::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string Partition::to_string() const { return join(parts_); }

ScrollLabel::ScrollLabel(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("scroll label needs at least one degree");
  if (!nonincreasing(degrees_)) {
    throw std::invalid_argument("scroll degrees must be nonincreasing: " + join(degrees_));
  }
}

ScrollLabel ScrollLabel::from_partition(const Partition& p) {
  std::vector<std::size_t> d;
  for (auto n : p.parts()) d.push_back(n - 1);
  return ScrollLabel(std::move(d));
}

Partition ScrollLabel::partition() const {
  std::vector<std::size_t> p;
  for (auto m : degrees_) p.push_back(m + 1);
  return Partition(std::move(p));
}

std::string ScrollLabel::to_string() const { return "S(" + join(degrees_) + ")"; }

std::vector<std::size_t> parse_parts(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad part list: '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

IntMatrix scroll_matrix(const Partition& p) {
  const std::size_t c = p.num_parts();
  IntMatrix a(c + 1, p.total());
  std::size_t col = 0;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 1; k <= p[i]; ++k, ++col) {
      a(0, col) = static_cast<std::int64_t>(k);
      a(i + 1, col) = 1;
    }
  }
  return a;
}

IntMatrix h_matrix(const Partition& p) {
  const std::size_t c = p.num_parts();
  IntMatrix a(c + 1, p.total());
  std::size_t col = 0;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 1; k <= p[i]; ++k, ++col) {
      a(0, col) = 1;
      a(i + 1, col) = static_cast<std::int64_t>(k);
    }
  }
  return a;
}

IntMatrix nfold_matrix(const IntMatrix& a, const IntMatrix& b, std::size_t n) {
  if (a.cols() != b.cols()) throw DimensionMismatch("nfold_matrix: A and B differ in column count");
  if (n < 1) throw std::invalid_argument("nfold_matrix: N must be at least 1");
  const std::size_t w = a.cols();
  IntMatrix m(b.rows() + n * a.rows(), n * w);
  for (std::size_t blk = 0; blk < n; ++blk) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < w; ++c) m(r, blk * w + c) = b(r, c);
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < w; ++c) m(b.rows() + blk * a.rows() + r, blk * w + c) = a(r, c);
    }
  }
  return m;
}

namespace {

bool dominates_seq(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t j = 0; j < small.size(); ++j) {
    if (small[j] > big[j]) return false;
  }
  return true;
}

void partitions_rec(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool dominates(const Partition& big, const Partition& small) {
  return dominates_seq(big.parts(), small.parts());
}

bool dominates(const ScrollLabel& big, const ScrollLabel& small) {
  return dominates_seq(big.degrees(), small.degrees());
}

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) return out;
  std::vector<std::size_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace toricgb
