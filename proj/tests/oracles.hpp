#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the routines it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cp1calc/transitions.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat to_mat(const cp1::IntMatrix& m) {
  Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

// Determinant by cofactor expansion along the first row.
inline cpp_int cofactor_det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  cpp_int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const cpp_int term = cpp_int(m[0][c]) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : cpp_int(-term);
  }
  return total;
}

// Characteristic polynomial det(tI - M) by Faddeev-LeVerrier; coefficients
// from t^n down to t^0. Divisions are exact for integer matrices.
inline std::vector<cpp_int> char_poly(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<cpp_int> coeff(n + 1);
  coeff[0] = 1;
  std::vector<std::vector<cpp_int>> mk(n, std::vector<cpp_int>(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k)/k
    std::vector<std::vector<cpp_int>> next(n, std::vector<cpp_int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cpp_int s = 0;
        for (std::size_t l = 0; l < n; ++l) s += cpp_int(m[i][l]) * mk[l][j];
        next[i][j] = s + (i == j ? coeff[k - 1] : cpp_int(0));
      }
    mk = next;
    cpp_int tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += cpp_int(m[i][l]) * mk[l][i];
    coeff[k] = -tr / static_cast<int>(k);
  }
  return coeff;
}

inline int sign_changes(const std::vector<cpp_int>& c) {
  int changes = 0, last = 0;
  for (const auto& v : c) {
    const int s = v > 0 ? 1 : v < 0 ? -1 : 0;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Signature of a real symmetric matrix: its characteristic polynomial has
// only real roots, so Descartes' rule counts positive roots exactly.
inline int descartes_signature(const Mat& m) {
  std::vector<cpp_int> p = char_poly(m);
  const std::size_t n = m.size();
  std::vector<cpp_int> q(p);  // p(-t) up to the overall sign
  for (std::size_t i = 0; i <= n; ++i)
    if ((n - i) % 2 == 1) q[i] = -q[i];
  return sign_changes(p) - sign_changes(q);
}

// H*(N) for a simply-connected 4-manifold: (H^0, H^2, H^4) with cup
// product from the intersection form.
struct BaseClass {
  std::int64_t h0 = 0;
  std::vector<std::int64_t> h2;
  std::int64_t h4 = 0;
};

struct Ring {
  Mat q;

  BaseClass zero() const { return {0, std::vector<std::int64_t>(q.size(), 0), 0}; }
  BaseClass mul(const BaseClass& x, const BaseClass& y) const {
    BaseClass out = zero();
    out.h0 = x.h0 * y.h0;
    for (std::size_t i = 0; i < q.size(); ++i) out.h2[i] = x.h0 * y.h2[i] + y.h0 * x.h2[i];
    std::int64_t cup = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) cup += x.h2[i] * q[i][j] * y.h2[j];
    out.h4 = x.h0 * y.h4 + y.h0 * x.h4 + cup;
    return out;
  }
  BaseClass add(const BaseClass& x, const BaseClass& y) const {
    BaseClass out = x;
    out.h0 += y.h0;
    for (std::size_t i = 0; i < q.size(); ++i) out.h2[i] += y.h2[i];
    out.h4 += y.h4;
    return out;
  }
  BaseClass scale(const BaseClass& x, std::int64_t s) const {
    BaseClass out = x;
    out.h0 *= s;
    for (auto& v : out.h2) v *= s;
    out.h4 *= s;
    return out;
  }
};

// Element A + B a of H*(N)[a] / (a^2 + c1 a + c2).
struct BundleClass {
  BaseClass a0;
  BaseClass a1;
};

struct BundleRing {
  Ring base;
  BaseClass c1, c2;

  BundleClass mul(const BundleClass& x, const BundleClass& y) const {
    // (A + B a)(C + D a) = AC + (AD + BC) a + BD a^2, a^2 = -c1 a - c2
    const BaseClass bd = base.mul(x.a1, y.a1);
    BundleClass out;
    out.a0 = base.add(base.mul(x.a0, y.a0), base.scale(base.mul(bd, c2), -1));
    out.a1 = base.add(base.add(base.mul(x.a0, y.a1), base.mul(x.a1, y.a0)), base.scale(base.mul(bd, c1), -1));
    return out;
  }
  // <x, [P(E)]> = coefficient of a in H^4(N); <[N]^* a, [P(E)]> = 1.
  std::int64_t evaluate(const BundleClass& x) const { return x.a1.h4; }

  BundleClass basis(std::size_t slot) const {
    BundleClass e{base.zero(), base.zero()};
    if (slot == 0)
      e.a1.h0 = 1;
    else
      e.a0.h2[slot - 1] = 1;
    return e;
  }
  BundleClass pullback4(std::int64_t v) const {
    BundleClass e{base.zero(), base.zero()};
    e.a0.h4 = v;
    return e;
  }
};

// Random symmetric matrix with entries in [-lim, lim].
inline Mat random_symmetric(std::mt19937_64& rng, std::size_t n, int lim) {
  std::uniform_int_distribution<int> d(-lim, lim);
  Mat m(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = d(rng);
  return m;
}

}  // namespace oracle
