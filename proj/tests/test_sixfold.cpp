#include <doctest.h>

#include "cp1calc/sixfold.hpp"
#include "support.hpp"

using namespace cp1;

namespace {

// Invariants of P(E) from the ring H*(N)[a]/(a^2 + c1 a + c2) and the
// splitting T P(E) = pi* TN + V, c1(V) = 2a + c1(E).
InvariantSystem ring_projectivize(const FourManifold& n, const RankTwoBundle& e) {
  const std::size_t r = n.rank() + 1;
  oracle::BundleRing ring;
  ring.base.q = oracle::to_mat(n.form().matrix());
  ring.c1 = ring.base.zero();
  ring.c1.h2 = e.c1();
  ring.c2 = ring.base.zero();
  ring.c2.h4 = e.c2();

  InvariantSystem s;
  s.mu = CubicForm(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j)
      for (std::size_t k = j; k < r; ++k)
        s.mu.set(i, j, k, ring.evaluate(ring.mul(ring.mul(ring.basis(i), ring.basis(j)), ring.basis(k))));

  oracle::BundleClass v{ring.base.zero(), ring.base.zero()};
  v.a1.h0 = 2;
  v.a0.h2 = e.c1();
  oracle::BundleClass p1 = ring.mul(v, v);
  p1.a0.h4 += 3 * n.signature();
  s.p1.resize(r);
  for (std::size_t i = 0; i < r; ++i) s.p1[i] = ring.evaluate(ring.mul(p1, ring.basis(i)));

  s.w2.assign(r, 0);
  for (std::size_t i = 1; i < r; ++i) s.w2[i] = static_cast<std::uint8_t>(mod_floor(n.w2()[i - 1] + e.c1()[i - 1], 2));
  if (n.c1_tangent()) {
    IntVector c1(r);
    c1[0] = 2;
    for (std::size_t i = 1; i < r; ++i) c1[i] = (*n.c1_tangent())[i - 1] + e.c1()[i - 1];
    s.c1_class = c1;
  }
  return s;
}

}  // namespace

TEST_CASE("cubic form storage is symmetric") {
  CubicForm m(3);
  m.set(2, 0, 1, 7);
  CHECK(m(0, 1, 2) == 7);
  CHECK(m(1, 2, 0) == 7);
  CHECK(m(2, 1, 0) == 7);
  m.set(1, 1, 0, -2);
  CHECK(m(0, 1, 1) == -2);
  // mu(x,x,x) for x = (1,1,0): 3 mu(0,1,1) = -6
  CHECK(m.cube({1, 1, 0}) == -6);
  CHECK(m.cube({1, 1, 1}) == 6 * 7 + 3 * -2);
}

TEST_CASE("projectivize over CP2 with trivial bundle") {
  const auto cp2 = standard("CP2");
  const auto s = projectivize(cp2, RankTwoBundle(cp2, {0}, 0));
  CHECK(s.rank() == 2);
  CHECK(s.mu(0, 0, 0) == 0);
  CHECK(s.mu(0, 0, 1) == 0);
  CHECK(s.mu(0, 1, 1) == 1);
  CHECK(s.mu(1, 1, 1) == 0);
  CHECK(s.p1 == IntVector{3, 0});
  CHECK(s.w2 == ModTwoVector{0, 1});
  CHECK(s.c1_class == IntVector{2, 3});
  CHECK(euler_characteristic(s) == 6);
}

TEST_CASE("projectivize matches the ring oracle") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = testing_support::random_base(rng, 3, 4);
    const auto e = testing_support::random_bundle(rng, n, 4);
    const auto s = projectivize(n, e);
    const auto o = ring_projectivize(n, e);
    CHECK(s.same_invariants(o));
    CHECK(s.b3 == 0);
    CHECK(euler_characteristic(s) == 2 * (2 + static_cast<std::int64_t>(n.rank())));
    CHECK(s.certified);
  }
}

TEST_CASE("projectivize without simple connectivity is uncertified") {
  const FourManifold n("X", IntersectionForm(IntMatrix{{1}}), {1}, IntVector{3}, false);
  CHECK_FALSE(projectivize(n, RankTwoBundle(n, {0}, 0)).certified);
}

TEST_CASE("orientation-reversed CP3 from its total Chern class") {
  // c(CP3) = (1+g)^4: c1 = 4g, c2 = 6g^2, p1 = c1^2 - 2 c2 = 4 g^2
  const std::int64_t c1 = 4, c2 = 6;
  const auto s = cp3bar_system();
  CHECK(s.rank() == 1);
  CHECK(s.mu(0, 0, 0) == -1);
  CHECK(s.p1 == IntVector{-(c1 * c1 - 2 * c2)});
  CHECK(s.w2 == ModTwoVector{0});
  CHECK(s.b3 == 0);
  CHECK(euler_characteristic(s) == 4);
}

TEST_CASE("blowup is block sum with CP3bar") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testing_support::random_system(rng, 1 + trial % 4);
    const auto b = blowup_point(s);
    CHECK(b.same_invariants(connected_sum(s, cp3bar_system())));
    CHECK(b.rank() == s.rank() + 1);
    CHECK(b.mu(s.rank(), s.rank(), s.rank()) == -1);
    for (std::size_t i = 0; i < s.rank(); ++i) CHECK(b.mu(i, s.rank(), s.rank()) == 0);
    CHECK(euler_characteristic(b) == euler_characteristic(s) + 2);
  }
}

TEST_CASE("connected sum of systems") {
  std::mt19937_64 rng(61);
  const auto a = testing_support::random_system(rng, 2);
  auto b = testing_support::random_system(rng, 3);
  b.b3 = 4;
  const auto c = connected_sum(a, b);
  CHECK(c.rank() == 5);
  CHECK(c.b3 == 4);
  CHECK(c.mu(0, 1, 2) == 0);
  CHECK(c.mu(2, 3, 4) == b.mu(0, 1, 2));
  CHECK(c.mu(0, 0, 1) == a.mu(0, 0, 1));
  CHECK(euler_characteristic(c) == euler_characteristic(a) + euler_characteristic(b) - 2);
  CHECK(sum_with_s6(a) == a);

  auto no_c1 = a;
  no_c1.c1_class.reset();
  CHECK_FALSE(connected_sum(no_c1, b).c1_class.has_value());
}

TEST_CASE("validation") {
  InvariantSystem s;
  s.mu = CubicForm(2);
  s.p1 = {0};
  s.w2 = {0, 0};
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.p1 = {0, 0};
  s.w2 = {0, 2};
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.w2 = {0, 1};
  s.c1_class = IntVector{0, 2};
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.c1_class = IntVector{0, 1};
  s.b3 = -2;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s.b3 = 2;
  CHECK_NOTHROW(s.validate());
}
