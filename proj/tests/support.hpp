#pragma once

#include <random>
#include <string>
#include <vector>

#include "cp1calc/equiv.hpp"
#include "cp1calc/io.hpp"
#include "oracles.hpp"

namespace testing_support {

inline cp1::IntMatrix from_mat(const oracle::Mat& m) {
  cp1::IntMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  return out;
}

// Connected sum of 1..max_pieces catalog pieces with total rank <= max_rank.
inline cp1::FourManifold random_base(std::mt19937_64& rng, int max_pieces, std::size_t max_rank) {
  static const cp1::StandardPiece pieces[] = {cp1::StandardPiece::S4, cp1::StandardPiece::CP2,
                                              cp1::StandardPiece::CP2bar, cp1::StandardPiece::S2xS2};
  std::uniform_int_distribution<int> count(1, max_pieces), which(0, 3);
  for (;;) {
    cp1::FourManifold n;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) n = cp1::connected_sum(n, cp1::standard(pieces[which(rng)]));
    if (n.rank() <= max_rank) return n;
  }
}

inline cp1::IntVector random_vector(std::mt19937_64& rng, std::size_t n, int lim) {
  std::uniform_int_distribution<int> d(-lim, lim);
  cp1::IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline cp1::RankTwoBundle random_bundle(std::mt19937_64& rng, const cp1::FourManifold& n, int lim) {
  std::uniform_int_distribution<int> d(-lim, lim);
  return cp1::RankTwoBundle(n, random_vector(rng, n.rank(), lim), d(rng));
}

// Random integer matrix with entries in [-lim, lim] and determinant +-1.
inline cp1::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int lim) {
  std::uniform_int_distribution<int> d(-lim, lim);
  for (;;) {
    oracle::Mat m(n, std::vector<std::int64_t>(n));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    const auto det = oracle::cofactor_det(m);
    if (det == 1 || det == -1) return from_mat(m);
  }
}

// Random invariant system with small entries, rank r.
inline cp1::InvariantSystem random_system(std::mt19937_64& rng, std::size_t r) {
  std::uniform_int_distribution<int> d(-3, 3), bit(0, 1);
  cp1::InvariantSystem s;
  s.mu = cp1::CubicForm(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j)
      for (std::size_t k = j; k < r; ++k) s.mu.set(i, j, k, d(rng));
  s.p1 = random_vector(rng, r, 6);
  s.w2.resize(r);
  for (auto& b : s.w2) b = static_cast<std::uint8_t>(bit(rng));
  cp1::IntVector c1(r);
  for (std::size_t i = 0; i < r; ++i) c1[i] = 2 * d(rng) + s.w2[i];
  s.c1_class = c1;
  s.validate();
  return s;
}

}  // namespace testing_support
