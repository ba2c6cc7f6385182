#include "cp1calc/lattice.hpp"

#include <string>
#include <utility>

namespace cp1 {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

IntersectionForm::IntersectionForm(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.square()) throw ValidationError("intersection form: matrix is not square");
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = i + 1; j < matrix_.cols(); ++j)
      if (matrix_(i, j) != matrix_(j, i))
        throw ValidationError("intersection form: matrix is not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
}

std::int64_t IntersectionForm::pair(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) throw DimensionError("pair: vector length != rank");
  return dot(x, matrix_.apply(y));
}

IntVector IntersectionForm::apply(const IntVector& x) const {
  if (x.size() != rank()) throw DimensionError("apply: vector length != rank");
  return matrix_.apply(x);
}

cpp_int determinant(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int signature(const IntersectionForm& q) {
  const std::size_t n = q.rank();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = q(i, j);

  std::vector<bool> alive(n, true);
  int sig = 0;

  // Eliminate index set `piv` (one or two indices) by a symmetric Schur complement.
  auto eliminate_one = [&](std::size_t p) {
    const cpp_rational d = m[p][p];
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || i == p || m[i][p] == 0) continue;
      const cpp_rational f = m[i][p] / d;
      for (std::size_t j = 0; j < n; ++j)
        if (alive[j] && j != p) m[i][j] -= f * m[p][j];
    }
    alive[p] = false;
  };

  auto eliminate_pair = [&](std::size_t p, std::size_t r) {
    // Block [[0,b],[b,0]] has inverse [[0,1/b],[1/b,0]]; subtract C B^{-1} C^T.
    const cpp_rational b = m[p][r];
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && i != p && i != r) rest.push_back(i);
    std::vector<std::vector<cpp_rational>> upd(rest.size(), std::vector<cpp_rational>(rest.size()));
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t c = 0; c < rest.size(); ++c) {
        const std::size_t i = rest[a], j = rest[c];
        upd[a][c] = (m[i][p] * m[r][j] + m[i][r] * m[p][j]) / b;
      }
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t c = 0; c < rest.size(); ++c) m[rest[a]][rest[c]] -= upd[a][c];
    alive[p] = alive[r] = false;
  };

  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (alive[i] && m[i][i] != 0) pivot = i;
    if (pivot != n) {
      sig += m[pivot][pivot] > 0 ? 1 : -1;
      eliminate_one(pivot);
      continue;
    }
    std::size_t p = n, r = n;
    for (std::size_t i = 0; i < n && p == n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (alive[j] && m[i][j] != 0) {
          p = i;
          r = j;
          break;
        }
    }
    if (p == n) break;  // remaining block is zero: radical
    eliminate_pair(p, r);  // contributes +1 and -1
  }
  return sig;
}

bool is_unimodular(const IntersectionForm& q) {
  const cpp_int d = determinant(q.matrix());
  return d == 1 || d == -1;
}

IntersectionForm direct_sum(const IntersectionForm& a, const IntersectionForm& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  IntMatrix m(ra + rb, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < rb; ++j) m(ra + i, ra + j) = b(i, j);
  return IntersectionForm(std::move(m));
}

bool is_characteristic(const ModTwoVector& w, const IntersectionForm& q) {
  const std::size_t n = q.rank();
  if (w.size() != n) throw DimensionError("w2 length does not match form rank");
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += mod_floor(q(i, j), 2) * (w[j] & 1);
    if ((s & 1) != mod_floor(q(i, i), 2)) return false;
  }
  return true;
}

bool is_characteristic_exhaustive(const ModTwoVector& w, const IntersectionForm& q) {
  const std::size_t n = q.rank();
  if (w.size() != n) throw DimensionError("w2 length does not match form rank");
  if (n > 20) throw DimensionError("exhaustive characteristic check limited to rank <= 20");
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::int64_t xqx = 0, wqx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t xi = (bits >> i) & 1u;
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t qij = mod_floor(q(i, j), 2);
        xqx += xi * qij * ((bits >> j) & 1u);
        wqx += (w[i] & 1) * qij * ((bits >> j) & 1u);
      }
    }
    if (((xqx - wqx) & 1) != 0) return false;
  }
  return true;
}

}  // namespace cp1
