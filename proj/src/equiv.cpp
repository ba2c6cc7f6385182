#include "cp1calc/equiv.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cp1 {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::uint64_t default_step_budget() {
  if (const char* env = std::getenv("CP1CALC_STEP_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw ValidationError(std::string("CP1CALC_STEP_BUDGET is not a positive integer: ") + env);
  }
  return 1'000'000'000ULL;
}

std::vector<std::int64_t> entry_order(int bound) {
  std::vector<std::int64_t> order{0};
  for (std::int64_t v = 1; v <= bound; ++v) {
    order.push_back(v);
    order.push_back(-v);
  }
  return order;
}

namespace {

void require_same_rank(const InvariantSystem& left, const InvariantSystem& right) {
  if (left.rank() != right.rank())
    throw DimensionError("rank mismatch: " + std::to_string(left.rank()) + " vs " + std::to_string(right.rank()));
}

void require_c1(const InvariantSystem& left, const InvariantSystem& right) {
  if (!left.c1_class || !right.c1_class) throw ValidationError("c1 check requested but a c1 class is absent");
}

bool is_primitive(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

// Odometer over [-bound, bound]^r in lexicographic entry order, first
// coordinate most significant.
template <class F>
void for_each_vector(std::size_t r, const std::vector<std::int64_t>& order, F&& f) {
  std::vector<std::size_t> idx(r, 0);
  IntVector v(r, order[0]);
  for (;;) {
    f(v);
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < order.size()) {
        v[pos] = order[idx[pos]];
        break;
      }
      idx[pos] = 0;
      v[pos] = order[0];
      if (pos == 0) return;
    }
    if (r == 0) return;
  }
}

bool transports_w2_c1(const InvariantSystem& left, const InvariantSystem& right, const IntMatrix& a,
                      bool check_c1) {
  IntVector w(left.w2.begin(), left.w2.end());
  if (reduce_mod2(a.apply(w)) != right.w2) return false;
  if (check_c1 && a.apply(*left.c1_class) != *right.c1_class) return false;
  const cpp_int d = determinant(a);
  return d == 1 || d == -1;
}

struct Candidate {
  IntVector v;
  IntMatrix contraction;  // right.mu(v, ., .)
};

struct SearchSpace {
  std::vector<std::vector<Candidate>> columns;
};

SearchSpace build_space(const InvariantSystem& left, const InvariantSystem& right, int bound) {
  const std::size_t r = left.rank();
  SearchSpace space;
  space.columns.resize(r);
  const auto order = entry_order(bound);
  for_each_vector(r, order, [&](const IntVector& v) {
    if (!is_primitive(v)) return;
    const IntMatrix m = right.mu.contract(v);
    const std::int64_t cube = dot(v, m.apply(v));
    const std::int64_t p1 = dot(right.p1, v);
    for (std::size_t i = 0; i < r; ++i)
      if (cube == left.mu(i, i, i) && p1 == left.p1[i]) space.columns[i].push_back({v, m});
  });
  return space;
}

struct BudgetHit {};

class SubtreeSearch {
 public:
  SubtreeSearch(const InvariantSystem& left, const InvariantSystem& right, const SearchSpace& space, bool check_c1,
                std::uint64_t cap, const std::atomic<std::size_t>* best, std::size_t self)
      : left_(left), right_(right), space_(space), check_c1_(check_c1), cap_(cap), best_(best), self_(self),
        chosen_(left.rank(), nullptr) {}

  // Searches below first-column candidate `t`. Returns true on a witness.
  bool run(std::size_t t) {
    step();
    chosen_[0] = &space_.columns[0][t];
    return left_.rank() == 1 ? finalize() : dfs(1);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool cancelled() const { return cancelled_; }
  IntMatrix witness() const {
    std::vector<IntVector> cols;
    for (auto* c : chosen_) cols.push_back(c->v);
    return IntMatrix::from_columns(cols, left_.rank());
  }

 private:
  void step() {
    if (++nodes_ > cap_) throw BudgetHit{};
    if (best_ && (nodes_ & 0xfff) == 0 && best_->load(std::memory_order_relaxed) < self_) {
      cancelled_ = true;
      throw BudgetHit{};
    }
  }

  bool consistent(std::size_t j, const Candidate& c) const {
    // right.mu(c_a, c_b, v) = c_a^T M_v c_b must equal left.mu(a, b, j) for a <= b <= j.
    std::vector<IntVector> mc(j);
    for (std::size_t b = 0; b < j; ++b) mc[b] = c.contraction.apply(chosen_[b]->v);
    for (std::size_t a = 0; a < j; ++a) {
      for (std::size_t b = a; b < j; ++b)
        if (dot(chosen_[a]->v, mc[b]) != left_.mu(a, b, j)) return false;
      if (dot(mc[a], c.v) != left_.mu(a, j, j)) return false;
    }
    return true;
  }

  bool dfs(std::size_t j) {
    for (const auto& c : space_.columns[j]) {
      step();
      if (!consistent(j, c)) continue;
      chosen_[j] = &c;
      if (j + 1 == left_.rank() ? finalize() : dfs(j + 1)) return true;
    }
    return false;
  }

  bool finalize() const { return transports_w2_c1(left_, right_, witness(), check_c1_); }

  const InvariantSystem& left_;
  const InvariantSystem& right_;
  const SearchSpace& space_;
  bool check_c1_;
  std::uint64_t cap_;
  const std::atomic<std::size_t>* best_;
  std::size_t self_;
  std::vector<const Candidate*> chosen_;
  std::uint64_t nodes_ = 0;
  bool cancelled_ = false;
};

std::optional<IsomorphismWitness> trivial_rank_zero(const InvariantSystem& left, const InvariantSystem& right,
                                                    const SearchOptions& options) {
  if (left.b3 != right.b3) return std::nullopt;
  IsomorphismWitness w{IntMatrix(0, 0), options.check_c1};
  return w;
}

void validate_options(const SearchOptions& options) {
  if (options.bound < 1) throw ValidationError("search bound must be >= 1");
  if (options.budget == 0) throw ValidationError("search budget must be positive");
}

}  // namespace

bool verify_witness(const InvariantSystem& left, const InvariantSystem& right, const IntMatrix& a, bool check_c1) {
  require_same_rank(left, right);
  const std::size_t r = left.rank();
  if (a.rows() != r || a.cols() != r) throw DimensionError("witness matrix has wrong shape");
  if (check_c1) require_c1(left, right);
  if (left.b3 != right.b3) return false;

  std::vector<IntVector> cols(r);
  for (std::size_t j = 0; j < r; ++j) cols[j] = a.column(j);
  bool ok = true;
  left.mu.for_each_sorted([&](std::size_t i, std::size_t j, std::size_t k, std::int64_t v) {
    if (ok && right.mu.evaluate(cols[i], cols[j], cols[k]) != v) ok = false;
  });
  if (!ok) return false;
  for (std::size_t i = 0; i < r; ++i)
    if (dot(right.p1, cols[i]) != left.p1[i]) return false;
  return transports_w2_c1(left, right, a, check_c1);
}

std::optional<IsomorphismWitness> find_isomorphism(const InvariantSystem& left, const InvariantSystem& right,
                                                   const SearchOptions& options, SearchStats* stats) {
  require_same_rank(left, right);
  validate_options(options);
  if (options.check_c1) require_c1(left, right);
  if (stats) stats->nodes = 0;
  if (left.b3 != right.b3) return std::nullopt;
  if (left.rank() == 0) return trivial_rank_zero(left, right, options);

  const SearchSpace space = build_space(left, right, options.bound);
  const std::size_t m = space.columns[0].size();

  struct Outcome {
    std::uint64_t nodes = 0;
    bool found = false;
    bool skipped = false;
    IntMatrix witness;
  };
  std::vector<Outcome> outcomes(m);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

#ifdef _OPENMP
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::ptrdiff_t ti = 0; ti < static_cast<std::ptrdiff_t>(m); ++ti) {
    const auto t = static_cast<std::size_t>(ti);
    if (best.load() < t) {
      outcomes[t].skipped = true;
      continue;
    }
    SubtreeSearch search(left, right, space, options.check_c1, options.budget, &best, t);
    try {
      if (search.run(t)) {
        outcomes[t].found = true;
        outcomes[t].witness = search.witness();
        std::size_t cur = best.load();
        while (t < cur && !best.compare_exchange_weak(cur, t)) {
        }
      }
      outcomes[t].nodes = search.nodes();
    } catch (const BudgetHit&) {
      if (search.cancelled())
        outcomes[t].skipped = true;
      else
        outcomes[t].nodes = options.budget + 1;
    }
  }

  // Sequential reduction reproduces the single-threaded node count.
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < m; ++t) {
    const Outcome& o = outcomes[t];
    if (o.skipped) break;
    total += o.nodes;
    if (total > options.budget) {
      if (stats) stats->nodes = total;
      throw BudgetExceeded("witness search exceeded the step budget of " + std::to_string(options.budget) +
                           " nodes");
    }
    if (o.found) {
      if (stats) stats->nodes = total;
      return IsomorphismWitness{o.witness, options.check_c1};
    }
  }
  if (stats) stats->nodes = total;
  return std::nullopt;
}

std::optional<IsomorphismWitness> find_isomorphism_serial(const InvariantSystem& left, const InvariantSystem& right,
                                                          const SearchOptions& options, SearchStats* stats) {
  require_same_rank(left, right);
  validate_options(options);
  if (options.check_c1) require_c1(left, right);
  if (stats) stats->nodes = 0;
  if (left.b3 != right.b3) return std::nullopt;
  const std::size_t r = left.rank();
  if (r == 0) return trivial_rank_zero(left, right, options);

  const auto order = entry_order(options.bound);
  std::vector<std::vector<IntVector>> lists(r);
  for_each_vector(r, order, [&](const IntVector& v) {
    if (!is_primitive(v)) return;
    for (std::size_t i = 0; i < r; ++i)
      if (right.mu.cube(v) == left.mu(i, i, i) && dot(right.p1, v) == left.p1[i]) lists[i].push_back(v);
  });

  std::vector<IntVector> cols(r);
  std::uint64_t nodes = 0;
  std::optional<IsomorphismWitness> result;

  auto recurse = [&](auto&& self, std::size_t j) -> bool {
    for (const auto& v : lists[j]) {
      if (++nodes > options.budget) {
        if (stats) stats->nodes = nodes;
        throw BudgetExceeded("witness search exceeded the step budget of " + std::to_string(options.budget) +
                             " nodes");
      }
      bool ok = true;
      for (std::size_t a = 0; a < j && ok; ++a) {
        for (std::size_t b = a; b < j && ok; ++b)
          if (right.mu.evaluate(cols[a], cols[b], v) != left.mu(a, b, j)) ok = false;
        if (ok && right.mu.evaluate(cols[a], v, v) != left.mu(a, j, j)) ok = false;
      }
      if (!ok) continue;
      cols[j] = v;
      if (j + 1 == r) {
        IntMatrix a = IntMatrix::from_columns(cols, r);
        if (transports_w2_c1(left, right, a, options.check_c1)) {
          result = IsomorphismWitness{std::move(a), options.check_c1};
          return true;
        }
      } else if (self(self, j + 1)) {
        return true;
      }
    }
    return false;
  };
  recurse(recurse, 0);
  if (stats) stats->nodes = nodes;
  return result;
}

namespace {

void require_fingerprint_args(const InvariantSystem& s, int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw ValidationError("fingerprint prime must be one of 2, 3, 5, 7");
  if (s.rank() > kMaxFingerprintRank)
    throw DimensionError("fingerprint limited to rank <= " + std::to_string(kMaxFingerprintRank));
}

IntVector w2_lift(const InvariantSystem& s) { return IntVector(s.w2.begin(), s.w2.end()); }

}  // namespace

Fingerprint fingerprint(const InvariantSystem& s, int p) {
  require_fingerprint_args(s, p);
  const std::size_t r = s.rank();

  // Coefficients of the cubic polynomial x -> mu(x,x,x), reduced mod p.
  struct Term {
    std::size_t i, j, k;
    std::int64_t coef;
  };
  std::vector<Term> terms;
  s.mu.for_each_sorted([&](std::size_t i, std::size_t j, std::size_t k, std::int64_t v) {
    const std::int64_t mult = (i == j && j == k) ? 1 : (i == j || j == k) ? 3 : 6;
    const std::int64_t c = mod_floor(mod_floor(v, p) * mult, p);
    if (c != 0) terms.push_back({i, j, k, c});
  });
  std::vector<std::int64_t> p1(r);
  for (std::size_t i = 0; i < r; ++i) p1[i] = mod_floor(s.p1[i], p);
  // mu(w,x,x) mod 2 is linear in x mod 2: sum_j mu(w,e_j,e_j) x_j.
  std::vector<std::int64_t> wdiag(r, 0);
  if (p == 2) {
    const IntMatrix wm = s.mu.contract(w2_lift(s));
    for (std::size_t j = 0; j < r; ++j) wdiag[j] = mod_floor(wm(j, j), 2);
  }

  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= static_cast<std::size_t>(p);
  const std::size_t buckets = static_cast<std::size_t>(2 * p * p);
  std::vector<std::uint64_t> hist(buckets, 0);

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::vector<std::uint64_t> local(buckets, 0);
    std::vector<std::int64_t> x(r);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (std::ptrdiff_t ti = 0; ti < static_cast<std::ptrdiff_t>(total); ++ti) {
      std::size_t t = static_cast<std::size_t>(ti);
      for (std::size_t i = 0; i < r; ++i) {
        x[i] = static_cast<std::int64_t>(t % static_cast<std::size_t>(p));
        t /= static_cast<std::size_t>(p);
      }
      std::int64_t cube = 0;
      for (const auto& term : terms) cube += term.coef * x[term.i] * x[term.j] * x[term.k];
      std::int64_t lin = 0, w = 0;
      for (std::size_t i = 0; i < r; ++i) {
        lin += p1[i] * x[i];
        w += wdiag[i] * x[i];
      }
      const std::size_t key =
          static_cast<std::size_t>((mod_floor(cube, p) * p + mod_floor(lin, p)) * 2 + (w & 1));
      ++local[key];
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    for (std::size_t b = 0; b < buckets; ++b) hist[b] += local[b];
  }

  Fingerprint fp{p, r, {}};
  for (std::size_t b = 0; b < buckets; ++b) {
    if (hist[b] == 0) continue;
    const auto key = static_cast<std::int64_t>(b);
    fp.entries.push_back({key / 2 / p, (key / 2) % p, key % 2, hist[b]});
  }
  return fp;
}

Fingerprint fingerprint_serial(const InvariantSystem& s, int p) {
  require_fingerprint_args(s, p);
  const std::size_t r = s.rank();
  const IntVector w = w2_lift(s);
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::uint64_t> counts;
  IntVector x(r, 0);
  for (;;) {
    const std::int64_t cube = mod_floor(s.mu.cube(x), p);
    const std::int64_t lin = mod_floor(dot(s.p1, x), p);
    const std::int64_t wv = p == 2 ? mod_floor(s.mu.evaluate(w, x, x), 2) : 0;
    ++counts[{cube, lin, wv}];
    std::size_t pos = 0;
    while (pos < r && ++x[pos] == p) x[pos++] = 0;
    if (pos == r) break;
  }
  Fingerprint fp{p, r, {}};
  for (const auto& [key, n] : counts) fp.entries.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), n});
  return fp;
}

std::optional<DistinctnessCertificate> certify_distinct(const InvariantSystem& left, const InvariantSystem& right,
                                                        const std::vector<int>& primes) {
  for (int p : primes)
    if (p != 2 && p != 3 && p != 5 && p != 7) throw ValidationError("fingerprint prime must be one of 2, 3, 5, 7");
  if (left.rank() != right.rank()) {
    DistinctnessCertificate c;
    c.kind = CertificateKind::Rank;
    c.left_value = static_cast<std::int64_t>(left.rank());
    c.right_value = static_cast<std::int64_t>(right.rank());
    return c;
  }
  if (left.b3 != right.b3) {
    DistinctnessCertificate c;
    c.kind = CertificateKind::B3;
    c.left_value = left.b3;
    c.right_value = right.b3;
    return c;
  }
  if (left.rank() > kMaxFingerprintRank) return std::nullopt;
  for (int p : primes) {
    Fingerprint fl = fingerprint(left, p);
    Fingerprint fr = fingerprint(right, p);
    if (fl != fr) {
      DistinctnessCertificate c;
      c.kind = CertificateKind::Fingerprint;
      c.prime = p;
      c.left_fingerprint = std::move(fl);
      c.right_fingerprint = std::move(fr);
      return c;
    }
  }
  return std::nullopt;
}

bool recheck(const DistinctnessCertificate& cert, const InvariantSystem& left, const InvariantSystem& right) {
  switch (cert.kind) {
    case CertificateKind::Rank:
      return cert.left_value == static_cast<std::int64_t>(left.rank()) &&
             cert.right_value == static_cast<std::int64_t>(right.rank()) && cert.left_value != cert.right_value;
    case CertificateKind::B3:
      return cert.left_value == left.b3 && cert.right_value == right.b3 && left.b3 != right.b3;
    case CertificateKind::Fingerprint: {
      if (!cert.prime || !cert.left_fingerprint || !cert.right_fingerprint) return false;
      const Fingerprint fl = fingerprint_serial(left, *cert.prime);
      const Fingerprint fr = fingerprint_serial(right, *cert.prime);
      return fl == *cert.left_fingerprint && fr == *cert.right_fingerprint && fl != fr;
    }
  }
  return false;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw ValidationError("matrix is singular");
    std::swap(m[p], m[c]);
    const cpp_rational piv = m[c][c];
    for (auto& v : m[c]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const cpp_rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cpp_rational& v = m[i][n + j];
      if (boost::multiprecision::denominator(v) != 1) throw ValidationError("matrix is not unimodular");
      const cpp_int num = boost::multiprecision::numerator(v);
      if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("inverse entry exceeds int64");
      inv(i, j) = static_cast<std::int64_t>(num);
    }
  return inv;
}

InvariantSystem transport(const InvariantSystem& s, const IntMatrix& a) {
  const std::size_t r = s.rank();
  if (a.rows() != r || a.cols() != r) throw DimensionError("transport matrix has wrong shape");
  const IntMatrix b = inverse_unimodular(a);
  std::vector<IntVector> cols(r);
  for (std::size_t j = 0; j < r; ++j) cols[j] = b.column(j);

  InvariantSystem out;
  out.mu = CubicForm(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j)
      for (std::size_t k = j; k < r; ++k) out.mu.set(i, j, k, s.mu.evaluate(cols[i], cols[j], cols[k]));
  out.p1 = b.transpose().apply(s.p1);
  out.w2 = reduce_mod2(a.apply(IntVector(s.w2.begin(), s.w2.end())));
  out.b3 = s.b3;
  if (s.c1_class) out.c1_class = a.apply(*s.c1_class);
  out.basis_labels = s.basis_labels;
  out.certified = s.certified;
  out.validate();
  return out;
}

}  // namespace cp1
