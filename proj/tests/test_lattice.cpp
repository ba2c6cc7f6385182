#include <doctest.h>

#include "cp1calc/lattice.hpp"
#include "support.hpp"

using namespace cp1;

TEST_CASE("signature of catalog forms") {
  CHECK(signature(IntersectionForm(IntMatrix{{1}})) == 1);
  CHECK(signature(IntersectionForm(IntMatrix{{-1}})) == -1);
  CHECK(signature(IntersectionForm(IntMatrix{{0, 1}, {1, 0}})) == 0);
  CHECK(signature(IntersectionForm()) == 0);
}

TEST_CASE("hyperbolic oracle agrees with frozen value") {
  // eigenvalues of [[0,1],[1,0]] are roots of t^2 - 1
  const auto p = oracle::char_poly({{0, 1}, {1, 0}});
  CHECK(p == std::vector<oracle::cpp_int>{1, 0, -1});
  CHECK(oracle::descartes_signature({{0, 1}, {1, 0}}) == 0);
}

TEST_CASE("signature matches eigenvalue sign count on every 1x1 and 2x2 form with entries in [-3,3]") {
  for (int a = -3; a <= 3; ++a) CHECK(signature(IntersectionForm(IntMatrix{{a}})) == (a > 0) - (a < 0));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        // roots of t^2 - (a+c) t + (ac - b^2): discriminant is (a-c)^2 + 4b^2 >= 0
        const int det = a * c - b * b, tr = a + c;
        int expect;
        if (det < 0)
          expect = 0;
        else if (det > 0)
          expect = tr > 0 ? 2 : -2;
        else
          expect = (tr > 0) - (tr < 0);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(signature(IntersectionForm(IntMatrix{{a, b}, {b, c}})) == expect);
      }
}

TEST_CASE("signature agrees with Descartes count on random symmetric matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = oracle::random_symmetric(rng, n, 3);
    CHECK(signature(IntersectionForm(testing_support::from_mat(m))) == oracle::descartes_signature(m));
  }
}

TEST_CASE("signature handles zero-diagonal and degenerate blocks") {
  // even forms force the hyperbolic split
  CHECK(signature(IntersectionForm(IntMatrix{{0, 2, 0}, {2, 0, 1}, {0, 1, 0}})) ==
        oracle::descartes_signature({{0, 2, 0}, {2, 0, 1}, {0, 1, 0}}));
  CHECK(signature(IntersectionForm(IntMatrix{{0, 0}, {0, 0}})) == 0);
  // E8 is positive definite
  const oracle::Mat e8{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
                       {0, 0, -1, 2, -1, 0, 0, 0},  {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
                       {0, 0, 0, 0, 0, -1, 2, 0},   {0, 0, -1, 0, 0, 0, 0, 2}};
  const IntersectionForm q(testing_support::from_mat(e8));
  CHECK(signature(q) == 8);
  CHECK(is_unimodular(q));
}

TEST_CASE("determinant and unimodularity") {
  CHECK(is_unimodular(IntersectionForm(IntMatrix{{1}})));
  CHECK_FALSE(is_unimodular(IntersectionForm(IntMatrix{{2}})));
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(is_unimodular(IntersectionForm(IntMatrix{{0, 1}, {1, 0}})));
  CHECK(is_unimodular(IntersectionForm()));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::uniform_int_distribution<int> d(-4, 4);
    oracle::Mat m(n, std::vector<std::int64_t>(n));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    CHECK(determinant(testing_support::from_mat(m)) == oracle::cofactor_det(m));
  }
}

TEST_CASE("construction rejects non-symmetric and non-square matrices") {
  CHECK_THROWS_AS(IntersectionForm(IntMatrix{{1, 2}, {3, 1}}), ValidationError);
  CHECK_THROWS_AS(IntersectionForm(IntMatrix(2, 3)), ValidationError);
}

TEST_CASE("direct sum") {
  const IntersectionForm p(IntMatrix{{1}}), n(IntMatrix{{-1}});
  CHECK(direct_sum(p, n).matrix() == IntMatrix{{1, 0}, {0, -1}});
  CHECK(direct_sum(p, IntersectionForm()) == p);
  const auto nn = direct_sum(n, n);
  CHECK(nn.matrix() == IntMatrix{{-1, 0}, {0, -1}});
  CHECK(signature(nn) == -2);
}

TEST_CASE("signature is additive under direct sum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_symmetric(rng, 1 + trial % 4, 3);
    const auto b = oracle::random_symmetric(rng, 1 + (trial / 4) % 4, 3);
    const IntersectionForm qa(testing_support::from_mat(a)), qb(testing_support::from_mat(b));
    CHECK(signature(direct_sum(qa, qb)) == signature(qa) + signature(qb));
  }
}

TEST_CASE("characteristic vectors") {
  const IntersectionForm cp2(IntMatrix{{1}}), h(IntMatrix{{0, 1}, {1, 0}});
  CHECK(is_characteristic({1}, cp2));
  CHECK_FALSE(is_characteristic({0}, cp2));
  CHECK(is_characteristic({0, 0}, h));
  CHECK_FALSE(is_characteristic({1, 0}, h));
  CHECK(is_characteristic_exhaustive({0, 0}, h));
  CHECK_THROWS_AS(is_characteristic({1}, h), DimensionError);
}

TEST_CASE("closed-form and exhaustive characteristic tests agree") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntersectionForm q(testing_support::from_mat(oracle::random_symmetric(rng, n, 3)));
    ModTwoVector w(n);
    for (auto& b : w) b = static_cast<std::uint8_t>(bit(rng));
    CHECK(is_characteristic(w, q) == is_characteristic_exhaustive(w, q));
  }
}
