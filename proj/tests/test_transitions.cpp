#include <doctest.h>

#include "cp1calc/transitions.hpp"
#include "support.hpp"

using namespace cp1;

TEST_CASE("local models") {
  // mu(z,z,z) = (1 + (-1)^k)/2, p1 . z = 2 (1 + (-1)^k)
  for (int k : {1, 2}) {
    const auto m = mk_system(k);
    const int sign = k % 2 == 0 ? 1 : -1;
    CHECK(m.rank() == 2);
    CHECK(m.mu(0, 0, 0) == 0);
    CHECK(m.mu(0, 0, 1) == 1);
    CHECK(m.mu(0, 1, 1) == -1);
    CHECK(m.mu(1, 1, 1) == (1 + sign) / 2);
    CHECK(m.p1 == IntVector{0, 2 * (1 + sign)});
    CHECK(m.w2 == ModTwoVector{0, 0});
    CHECK(m.b3 == 0);
    CHECK(m.c1_class == IntVector{2, 0});
  }
  CHECK_THROWS_AS(mk_system(3), ValidationError);
}

TEST_CASE("named witnesses for the local models") {
  const auto bar = standard(StandardPiece::CP2bar);
  const auto t1 = sum_with_s6(projectivize(bar, RankTwoBundle(bar, {-1}, -1)));
  const FourManifold s4;
  const auto t2 = blowup_point(projectivize(s4, RankTwoBundle(s4, {}, -1)));

  // hand-expanded: mu(a,a,a) = c1^2 - c2 = -1 + 1 = 0 for t1; 0 + 1 = 1 for t2
  CHECK(t1.mu(0, 0, 0) == 0);
  CHECK(t2.mu(0, 0, 0) == 1);
  CHECK(t2.mu(1, 1, 1) == -1);
  CHECK(t2.p1 == IntVector{4, -4});
  CHECK(t2.c1_class == IntVector{2, 2});
  CHECK(t1.c1_class == IntVector{2, 0});

  const IntMatrix w1{{1, 0}, {0, -1}};
  const IntMatrix w2{{1, 0}, {1, -1}};
  CHECK(verify_witness(mk_system(1), t1, w1, true));
  CHECK(verify_witness(mk_system(2), t2, w2, true));
  CHECK_FALSE(verify_witness(mk_system(1), t1, IntMatrix::identity(2), false));
  CHECK_FALSE(verify_witness(mk_system(2), t2, w1, false));
}

TEST_CASE("Chern data of the transition bundles") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = testing_support::random_base(rng, 3, 6);
    const auto e = testing_support::random_bundle(rng, n, 3);
    const auto t = conifold_transition(n, e);
    IntVector c1 = e.c1();
    c1.push_back(-1);
    CHECK(t.e1.c1() == c1);
    CHECK(t.e2.c1() == e.c1());
    CHECK(t.e1.c2() == e.c2() - 1);
    CHECK(t.e2.c2() == e.c2() - 1);
    CHECK(t.e2.base().same_data(n));
    CHECK(t.e1.base().same_data(connected_sum(n, standard("CP2bar"))));
    CHECK(t.z1.rank() == t.z2.rank());
    CHECK(t.z1.same_invariants(projectivize(t.e1.base(), t.e1)));
    CHECK(t.z2.same_invariants(blowup_point(projectivize(n, t.e2))));
    CHECK(euler_characteristic(t.z1) == euler_characteristic(t.z2));
    CHECK(t.z1.c1_class.has_value());
    CHECK(t.z2.c1_class.has_value());

    const auto s = conifold_transition(n, e, true);
    CHECK(s.swapped);
    CHECK(s.z1 == t.z2);
    CHECK(s.z2 == t.z1);
  }
}

TEST_CASE("twist substitution uses a -> a + l") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = testing_support::random_base(rng, 3, 4);
    const auto e = testing_support::random_bundle(rng, n, 3);
    const auto l = testing_support::random_vector(rng, n.rank(), 2);
    const auto s = projectivize(n, e);
    const auto st = projectivize(n, twist(e, l));
    IntMatrix a = IntMatrix::identity(s.rank());
    for (std::size_t i = 0; i < l.size(); ++i) a(i + 1, 0) = l[i];
    CHECK(verify_witness(s, st, a, true));
  }
}

TEST_CASE("the opposite sign fails for some twist") {
  const auto cp2 = standard("CP2");
  const RankTwoBundle e(cp2, {0}, 0);
  const auto s = projectivize(cp2, e);
  const auto st = projectivize(cp2, twist(e, {1}));
  CHECK_FALSE(verify_witness(s, st, IntMatrix{{1, 0}, {-1, 1}}, false));
}
