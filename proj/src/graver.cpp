#include "toricgb/graver.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

namespace toricgb {

GraverBasis::GraverBasis(IntMatrix matrix, std::vector<SignedVector> elements)
    : matrix_(std::move(matrix)), elements_(std::move(elements)) {
  for (auto& e : elements_) e = e.canonical();
  std::sort(elements_.begin(), elements_.end(), canonical_less);
}

std::vector<SignedVector> GraverBasis::full_set() const {
  std::vector<SignedVector> out = elements_;
  for (const auto& e : elements_) out.push_back(e.negated());
  return out;
}

bool GraverBasis::contains(const SignedVector& u) const {
  SignedVector c = u.canonical();
  return std::binary_search(elements_.begin(), elements_.end(), c, canonical_less);
}

namespace {

// Thrown by the 64-bit instantiation; the engine then reruns on Integer.
struct Overflow {};

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) { return sub(0, a); }
inline int sgn(std::int64_t a) { return (a > 0) - (a < 0); }
inline bool abs_leq(std::int64_t a, std::int64_t b) {
  auto ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  auto ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  return ua <= ub;
}
inline std::int64_t abs_of(std::int64_t a) {
  if (a < 0) return neg(a);
  return a;
}

inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer neg(const Integer& a) { return -a; }
inline int sgn(const Integer& a) { return a.sign(); }
inline bool abs_leq(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return abs_leq(a.small_value(), b.small_value());
  return abs(a) <= abs(b);
}
inline Integer abs_of(const Integer& a) { return abs(a); }

template <class T>
T from_integer(const Integer& x);
template <>
std::int64_t from_integer<std::int64_t>(const Integer& x) {
  if (!x.fits_int64()) throw Overflow{};
  return x.small_value();
}
template <>
Integer from_integer<Integer>(const Integer& x) {
  return x;
}

template <class T>
std::uint64_t norm_level(const T& x) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    return static_cast<std::uint64_t>(abs_of(x));
  } else {
    Integer a = abs(x);
    if (!a.fits_int64()) throw std::overflow_error("Graver element norm exceeds 2^63");
    return static_cast<std::uint64_t>(a.small_value());
  }
}

using Mask = std::uint64_t;

/// Coordinate subset as a bitmask plus the ascending index list.
struct CoordSet {
  std::vector<Mask> mask;
  std::vector<std::size_t> list;

  explicit CoordSet(std::size_t n) : mask((n + 63) / 64, 0) {}
  void insert(std::size_t i) {
    if (mask[i / 64] & (Mask{1} << (i % 64))) return;
    mask[i / 64] |= Mask{1} << (i % 64);
    list.insert(std::upper_bound(list.begin(), list.end(), i), i);
  }
  [[nodiscard]] bool contains(std::size_t i) const { return (mask[i / 64] >> (i % 64)) & 1; }
};

/// Append-only vector pool with stable element addresses and sign masks.
template <class T>
class Store {
 public:
  explicit Store(std::size_t n) : n_(n), words_((n + 63) / 64) {}

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] std::size_t size() const { return count_; }
  [[nodiscard]] std::size_t words() const { return words_; }
  [[nodiscard]] const T* vec(std::size_t i) const {
    return chunks_[i / kChunk].get() + (i % kChunk) * n_;
  }
  [[nodiscard]] const Mask* pos(std::size_t i) const { return pos_.data() + i * words_; }
  [[nodiscard]] const Mask* neg(std::size_t i) const { return neg_.data() + i * words_; }

  std::size_t add(const T* v) {
    if (count_ % kChunk == 0) chunks_.push_back(std::make_unique<T[]>(kChunk * n_));
    T* dst = chunks_.back().get() + (count_ % kChunk) * n_;
    pos_.resize(pos_.size() + words_, 0);
    neg_.resize(neg_.size() + words_, 0);
    Mask* p = pos_.data() + count_ * words_;
    Mask* q = neg_.data() + count_ * words_;
    for (std::size_t i = 0; i < n_; ++i) {
      dst[i] = v[i];
      int s = sgn(v[i]);
      if (s > 0) p[i / 64] |= Mask{1} << (i % 64);
      if (s < 0) q[i / 64] |= Mask{1} << (i % 64);
    }
    return count_++;
  }

 private:
  static constexpr std::size_t kChunk = 1024;
  std::size_t n_;
  std::size_t words_;
  std::size_t count_ = 0;
  std::vector<std::unique_ptr<T[]>> chunks_;
  std::vector<Mask> pos_;
  std::vector<Mask> neg_;
};

/// No coordinate in `on` where the two elements have strictly opposite signs.
template <class T>
bool sign_compatible(const Store<T>& st, std::size_t i, std::size_t j, const CoordSet& on) {
  const Mask* pi = st.pos(i);
  const Mask* ni = st.neg(i);
  const Mask* pj = st.pos(j);
  const Mask* nj = st.neg(j);
  for (std::size_t w = 0; w < st.words(); ++w) {
    if (((pi[w] & nj[w]) | (ni[w] & pj[w])) & on.mask[w]) return false;
  }
  return true;
}

template <class T>
bool zero_on(const std::vector<T>& v, const CoordSet& on) {
  return std::all_of(on.list.begin(), on.list.end(), [&](std::size_t i) { return sgn(v[i]) == 0; });
}

/// g is conformally below s on the coordinates in `on`.
template <class T>
bool conformal_on(const T* g, const T* s, const CoordSet& on) {
  for (std::size_t i : on.list) {
    int sg = sgn(g[i]);
    if (sg == 0) continue;
    if (sg != sgn(s[i]) || !abs_leq(g[i], s[i])) return false;
  }
  return true;
}

/// Support trie over signed coordinates: answers "is some stored element
/// conformally below s" without scanning the whole pool.
template <class T>
class ReductionTree {
 public:
  ReductionTree(const Store<T>& store, const CoordSet& on) : store_(store), on_(on) {
    nodes_.emplace_back();
  }

  void insert(std::size_t id) {
    const T* v = store_.vec(id);
    std::uint32_t node = 0;
    for (std::size_t i : on_.list) {
      int s = sgn(v[i]);
      if (s == 0) continue;
      auto key = static_cast<std::uint32_t>(2 * i + (s < 0 ? 1 : 0));
      std::uint32_t next = 0;
      for (auto [k, child] : nodes_[node].kids) {
        if (k == key) {
          next = child;
          break;
        }
      }
      if (next == 0) {
        next = static_cast<std::uint32_t>(nodes_.size());
        nodes_[node].kids.emplace_back(key, next);
        nodes_.emplace_back();
      }
      node = next;
    }
    nodes_[node].items.push_back(static_cast<std::uint32_t>(id));
  }

  [[nodiscard]] bool reducible(const T* s) const {
    stack_.clear();
    stack_.push_back(0);
    while (!stack_.empty()) {
      std::uint32_t node = stack_.back();
      stack_.pop_back();
      for (std::uint32_t id : nodes_[node].items) {
        if (conformal_on(store_.vec(id), s, on_)) return true;
      }
      for (auto [key, child] : nodes_[node].kids) {
        int want = (key & 1) ? -1 : 1;
        if (sgn(s[key >> 1]) == want) stack_.push_back(child);
      }
    }
    return false;
  }

 private:
  struct Node {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> kids;
    std::vector<std::uint32_t> items;
  };
  const Store<T>& store_;
  const CoordSet& on_;
  std::vector<Node> nodes_;
  mutable std::vector<std::uint32_t> stack_;
};

class Poll {
 public:
  explicit Poll(const Deadline& d) : deadline_(d) {}
  void tick() {
    if (++count_ % 4096 == 0) deadline_.check();
  }

 private:
  const Deadline& deadline_;
  std::uint64_t count_ = 0;
};

/// Normal-form completion restricted to the coordinates in `on`, followed by
/// a minimization sweep. The projection onto `on` must be injective on the
/// lattice spanned by `init`, which must be closed under negation.
template <class T>
std::vector<std::vector<T>> completion(const std::vector<std::vector<T>>& init, std::size_t n,
                                       const CoordSet& on, const Deadline& deadline) {
  Store<T> st(n);
  std::vector<T> norms;
  auto norm_on = [&](const T* v) {
    T s{};
    for (std::size_t i : on.list) s = add(s, abs_of(v[i]));
    return s;
  };
  // Elements are scanned for divisors in canonical order: norm, then lexicographic.
  auto less = [&](std::size_t a, std::size_t b) {
    if (norms[a] != norms[b]) return norms[a] < norms[b];
    return std::lexicographical_compare(st.vec(a), st.vec(a) + n, st.vec(b), st.vec(b) + n);
  };
  std::vector<std::size_t> order;
  auto push = [&](const T* v) {
    std::size_t id = st.add(v);
    norms.push_back(norm_on(v));
    order.insert(std::upper_bound(order.begin(), order.end(), id, less), id);
  };
  for (const auto& v : init) push(v.data());

  std::vector<T> s(n);
  std::vector<Mask> sp(st.words()), sn(st.words());
  auto refresh_masks = [&] {
    std::fill(sp.begin(), sp.end(), 0);
    std::fill(sn.begin(), sn.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      int x = sgn(s[i]);
      if (x > 0) sp[i / 64] |= Mask{1} << (i % 64);
      if (x < 0) sn[i / 64] |= Mask{1} << (i % 64);
    }
  };
  auto find_divisor = [&]() -> std::ptrdiff_t {
    for (std::size_t id : order) {
      const Mask* p = st.pos(id);
      const Mask* q = st.neg(id);
      bool fits = true;
      for (std::size_t w = 0; w < st.words() && fits; ++w) {
        fits = (((p[w] & ~sp[w]) | (q[w] & ~sn[w])) & on.mask[w]) == 0;
      }
      if (fits && conformal_on(st.vec(id), s.data(), on)) return static_cast<std::ptrdiff_t>(id);
    }
    return -1;
  };

  Poll poll(deadline);
  for (std::size_t j = 0; j < st.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      poll.tick();
      if (sign_compatible(st, i, j, on)) continue;
      const T* f = st.vec(i);
      const T* g = st.vec(j);
      for (std::size_t k = 0; k < n; ++k) s[k] = add(f[k], g[k]);
      if (zero_on(s, on)) continue;
      for (;;) {
        refresh_masks();
        auto d = find_divisor();
        if (d < 0) break;
        const T* h = st.vec(static_cast<std::size_t>(d));
        for (std::size_t k = 0; k < n; ++k) s[k] = sub(s[k], h[k]);
        if (zero_on(s, on)) break;
      }
      if (zero_on(s, on)) continue;
      push(s.data());
      for (auto& x : s) x = neg(x);
      push(s.data());
    }
  }

  std::vector<std::vector<T>> out;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    std::size_t id = order[idx];
    bool minimal = true;
    for (std::size_t jdx = 0; jdx < order.size() && minimal; ++jdx) {
      if (jdx == idx) continue;
      std::size_t other = order[jdx];
      if (!conformal_on(st.vec(other), st.vec(id), on)) continue;
      // Equal vectors: keep the first occurrence only.
      bool equal = std::equal(st.vec(other), st.vec(other) + n, st.vec(id));
      if (!equal || jdx < idx) minimal = false;
    }
    if (minimal) out.emplace_back(st.vec(id), st.vec(id) + n);
  }
  return out;
}

/// Lattice basis rearranged for lifting: `pivots` index a coordinate set on
/// which the lattice projects injectively. When `unit` holds the projection
/// is onto, and the rows restricted to the pivots form an identity matrix.
struct LiftStart {
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivots;
  bool unit = true;
};

LiftStart prepare_lift(std::vector<IntVector> b, std::size_t n) {
  const std::size_t k = b.size();
  LiftStart ls;
  std::vector<bool> used(n, false);

  // Row-style Euclid on column c over rows r..k-1; afterwards only row r may
  // be nonzero there. Returns false if the column is zero on those rows.
  auto euclid = [&](std::size_t c, std::size_t r) {
    for (;;) {
      std::size_t best = k;
      for (std::size_t rr = r; rr < k; ++rr) {
        if (b[rr][c].is_zero()) continue;
        if (best == k || abs(b[rr][c]) < abs(b[best][c])) best = rr;
      }
      if (best == k) return false;
      std::swap(b[r], b[best]);
      bool done = true;
      for (std::size_t rr = r + 1; rr < k; ++rr) {
        if (b[rr][c].is_zero()) continue;
        Integer q = b[rr][c] / b[r][c];
        b[rr] -= q * b[r];
        if (!b[rr][c].is_zero()) done = false;
      }
      if (done) return true;
    }
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < k; ++c) {
    if (!euclid(c, r)) continue;
    if (abs(b[r][c]) != Integer(1)) continue;
    if (b[r][c].sign() < 0) b[r] = -b[r];
    for (std::size_t rr = 0; rr < k; ++rr) {
      if (rr != r && !b[rr][c].is_zero()) b[rr] -= b[rr][c] * b[r];
    }
    ls.pivots.push_back(c);
    used[c] = true;
    ++r;
  }
  for (std::size_t c = 0; c < n && r < k; ++c) {
    if (used[c] || !euclid(c, r)) continue;
    if (b[r][c].sign() < 0) b[r] = -b[r];
    ls.pivots.push_back(c);
    used[c] = true;
    ls.unit = false;
    ++r;
  }
  if (r != k) throw std::logic_error("kernel basis is not linearly independent");
  std::sort(ls.pivots.begin(), ls.pivots.end());
  ls.rows = std::move(b);
  return ls;
}

template <class T>
std::vector<T> convert(const IntVector& v) {
  std::vector<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(from_integer<T>(x));
  return out;
}

template <class T>
std::vector<std::vector<T>> plus_minus(const std::vector<IntVector>& rows) {
  std::vector<std::vector<T>> out;
  for (const auto& r : rows) {
    auto v = convert<T>(r);
    out.push_back(v);
    for (auto& x : v) x = neg(x);
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
std::vector<std::vector<T>> run_completion(const std::vector<IntVector>& basis, std::size_t n,
                                           const Deadline& deadline) {
  CoordSet all(n);
  for (std::size_t i = 0; i < n; ++i) all.insert(i);
  return completion(plus_minus<T>(basis), n, all, deadline);
}

/// Adds coordinate j to the lifted set `on`, extending the Graver basis of
/// the projection held in `st` to the Graver basis of the larger projection.
///
/// Candidates f + g are formed only for f, g sign-compatible on `on` with
/// f_j > 0 > g_j, and are processed by increasing 1-norm on `on`. Every
/// element with smaller norm is final by then, so an irreducible candidate is
/// primitive and a reducible one can be dropped without normal forms.
template <class T>
void lift_coordinate(Store<T>& st, CoordSet& on, std::size_t j, const Deadline& deadline) {
  const std::size_t n = st.dim();
  CoordSet next = on;
  next.insert(j);
  ReductionTree<T> tree(st, next);

  using Buckets = std::map<std::uint64_t, std::vector<std::uint32_t>>;
  Buckets pos_b;
  Buckets neg_b;
  auto level_of = [&](const T* v) {
    std::uint64_t s = 0;
    for (std::size_t i : on.list) s += norm_level(v[i]);
    return s;
  };
  auto file = [&](std::size_t id, std::uint64_t level) {
    int s = sgn(st.vec(id)[j]);
    if (s > 0) pos_b[level].push_back(static_cast<std::uint32_t>(id));
    if (s < 0) neg_b[level].push_back(static_cast<std::uint32_t>(id));
  };
  for (std::size_t id = 0; id < st.size(); ++id) {
    tree.insert(id);
    file(id, level_of(st.vec(id)));
  }

  std::vector<T> s(n);
  std::vector<std::size_t> fresh;
  Poll poll(deadline);
  std::uint64_t current = 0;
  for (;;) {
    std::uint64_t level = 0;
    for (const auto& [a, ids] : pos_b) {
      auto it = a > current ? neg_b.begin() : neg_b.upper_bound(current - a);
      if (it != neg_b.end() && (level == 0 || a + it->first < level)) level = a + it->first;
    }
    if (level == 0) break;

    fresh.clear();
    for (const auto& [a, fs] : pos_b) {
      if (2 * a > level) break;
      auto it = neg_b.find(level - a);
      if (it == neg_b.end()) continue;
      const bool same_level = (2 * a == level);
      for (std::uint32_t fi : fs) {
        const T* f = st.vec(fi);
        for (std::uint32_t gi : it->second) {
          poll.tick();
          if (!sign_compatible(st, fi, gi, on)) continue;
          const T* g = st.vec(gi);
          for (std::size_t k = 0; k < n; ++k) s[k] = add(f[k], g[k]);
          // (f, g) and (-g, -f) give s and -s; at equal norms both pairs are
          // enumerated, so keep the canonical orientation only.
          if (same_level) {
            auto first = std::find_if(s.begin(), s.end(), [](const T& x) { return sgn(x) != 0; });
            if (sgn(*first) < 0) continue;
          }
          if (tree.reducible(s.data())) continue;
          std::size_t id = st.add(s.data());
          tree.insert(id);
          fresh.push_back(id);
          for (auto& x : s) x = neg(x);
          id = st.add(s.data());
          tree.insert(id);
          fresh.push_back(id);
        }
      }
    }
    for (std::size_t id : fresh) file(id, level);
    current = level;
  }
  on = std::move(next);
}

template <class T>
std::vector<std::vector<T>> run_project_and_lift(const std::vector<IntVector>& basis,
                                                 std::size_t n, const Deadline& deadline) {
  LiftStart ls = prepare_lift(basis, n);
  CoordSet on(n);
  for (std::size_t p : ls.pivots) on.insert(p);

  std::vector<std::vector<T>> start = plus_minus<T>(ls.rows);
  if (!ls.unit) start = completion(start, n, on, deadline);

  Store<T> st(n);
  for (const auto& v : start) st.add(v.data());
  for (std::size_t j = 0; j < n; ++j) {
    if (on.contains(j)) continue;
    lift_coordinate(st, on, j, deadline);
  }

  std::vector<std::vector<T>> out;
  for (std::size_t id = 0; id < st.size(); ++id) out.emplace_back(st.vec(id), st.vec(id) + n);
  return out;
}

template <class T>
std::vector<SignedVector> run_engine(const std::vector<IntVector>& basis, std::size_t n,
                                     const GraverOptions& options) {
  std::vector<std::vector<T>> raw = options.engine == GraverEngine::Completion
                                        ? run_completion<T>(basis, n, options.deadline)
                                        : run_project_and_lift<T>(basis, n, options.deadline);
  std::vector<SignedVector> out;
  for (const auto& v : raw) {
    auto first = std::find_if(v.begin(), v.end(), [](const T& x) { return sgn(x) != 0; });
    if (first == v.end() || sgn(*first) < 0) continue;
    std::vector<Integer> e;
    e.reserve(n);
    for (const auto& x : v) e.emplace_back(x);
    out.emplace_back(IntVector(std::move(e)));
  }
  return out;
}

}  // namespace

namespace {

std::vector<SignedVector> distinct_column_graver(const IntMatrix& a, const GraverOptions& options) {
  std::vector<IntVector> basis = kernel_lattice_basis(a);
  if (basis.empty()) return {};
  try {
    return run_engine<std::int64_t>(basis, a.cols(), options);
  } catch (const Overflow&) {
    return run_engine<Integer>(basis, a.cols(), options);
  }
}

/// Columns grouped into classes of equal columns up to sign. Zero columns
/// form no class.
struct ColumnClasses {
  std::vector<std::size_t> reps;
  /// Per class: members and their signs relative to the representative.
  std::vector<std::vector<std::pair<std::size_t, int>>> members;
  std::vector<std::size_t> zeros;

  [[nodiscard]] bool trivial(std::size_t n) const { return reps.size() == n; }
};

ColumnClasses classify_columns(const IntMatrix& a) {
  ColumnClasses cc;
  std::map<IntVector, std::size_t> index;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    IntVector col = column(a, c);
    if (col.is_zero()) {
      cc.zeros.push_back(c);
      continue;
    }
    SignedVector canon = SignedVector(col).canonical();
    int sign = canon.base() == col ? 1 : -1;
    auto [it, fresh] = index.emplace(canon.base(), cc.reps.size());
    if (fresh) {
      cc.reps.push_back(c);
      cc.members.push_back({{c, 1}});
    } else {
      std::size_t rep = cc.reps[it->second];
      int rep_sign = SignedVector(column(a, rep)).canonical().base() == column(a, rep) ? 1 : -1;
      cc.members[it->second].emplace_back(c, sign * rep_sign);
    }
  }
  return cc;
}

/// Every way of writing each class coefficient as a conformal sum over the
/// class members.
void spread(const SignedVector& g, const ColumnClasses& cc, std::size_t n, std::size_t cls, std::size_t member,
            Integer left, std::vector<Integer>& cur, std::vector<SignedVector>& out) {
  if (cls == cc.reps.size()) {
    out.emplace_back(IntVector(cur));
    return;
  }
  const auto& ms = cc.members[cls];
  const Integer& total = g[cls];
  if (member == 0) left = abs(total);
  auto [col, sign] = ms[member];
  const int dir = total.sign() * sign;
  if (member + 1 == ms.size()) {
    cur[col] = dir >= 0 ? left : -left;
    spread(g, cc, n, cls + 1, 0, 0, cur, out);
    cur[col] = 0;
    return;
  }
  for (Integer y = 0; y <= left; y += 1) {
    cur[col] = dir >= 0 ? y : -y;
    spread(g, cc, n, cls, member + 1, left - y, cur, out);
  }
  cur[col] = 0;
}

}  // namespace

GraverBasis graver_basis(const IntMatrix& a, const GraverOptions& options) {
  ColumnClasses cc;
  if (options.fold_repeated_columns) cc = classify_columns(a);
  if (!options.fold_repeated_columns || cc.trivial(a.cols())) {
    return GraverBasis(a, distinct_column_graver(a, options));
  }

  // Equal columns up to sign: an element using two of them with cancelling
  // signs lies above e_j -+ e_k, and any other element is primitive iff its
  // image on the representatives is.
  const std::size_t n = a.cols();
  std::vector<SignedVector> elements;
  for (std::size_t z : cc.zeros) {
    IntVector e(n);
    e[z] = 1;
    elements.emplace_back(std::move(e));
  }
  for (const auto& ms : cc.members) {
    for (std::size_t p = 0; p < ms.size(); ++p) {
      for (std::size_t q = p + 1; q < ms.size(); ++q) {
        IntVector e(n);
        e[ms[p].first] = ms[q].second;
        e[ms[q].first] = -ms[p].second;
        elements.emplace_back(std::move(e));
      }
    }
  }
  std::vector<SignedVector> reduced = distinct_column_graver(select_columns(a, cc.reps), options);
  std::vector<Integer> cur(n);
  for (const auto& g : reduced) {
    options.deadline.check();
    spread(g, cc, n, 0, 0, 0, cur, elements);
  }
  return GraverBasis(a, std::move(elements));
}

Integer max_one_norm(const GraverBasis& g) {
  Integer best = 0;
  for (const auto& e : g.elements()) best = std::max(best, e.one_norm());
  return best;
}

namespace {

void require_kernel_nonzero(const SignedVector& u, const IntMatrix& a) {
  if (u.is_zero()) throw std::invalid_argument("is_primitive: zero vector");
  if (!matvec(a, u.base()).is_zero()) throw std::invalid_argument("is_primitive: vector not in kernel");
}

}  // namespace

bool is_primitive(const SignedVector& u, const GraverBasis& g) {
  require_kernel_nonzero(u, g.matrix());
  return g.contains(u);
}

bool is_primitive(const SignedVector& u, const IntMatrix& a) {
  require_kernel_nonzero(u, a);
  return graver_basis(a).contains(u);
}

}  // namespace toricgb
