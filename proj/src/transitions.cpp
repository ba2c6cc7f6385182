#include "cp1calc/transitions.hpp"

#include <utility>

namespace cp1 {

TransitionResult conifold_transition(const FourManifold& n, const RankTwoBundle& e, bool swap) {
  if (!e.base().same_data(n)) throw ValidationError("bundle base does not match the given 4-manifold");
  const std::int64_t c2 = checked::sub(e.c2(), 1);

  FourManifold base1 = connected_sum(n, standard(StandardPiece::CP2bar));
  IntVector c1_e1 = e.c1();
  c1_e1.push_back(-1);
  RankTwoBundle e1(std::move(base1), std::move(c1_e1), c2);

  FourManifold base2 = connected_sum(n, standard(StandardPiece::S4));
  RankTwoBundle e2(std::move(base2), e.c1(), c2);

  InvariantSystem z1 = projectivize(e1.base(), e1);
  InvariantSystem z2 = blowup_point(projectivize(e2.base(), e2));

  TransitionResult out{std::move(z1), std::move(z2), std::move(e1), std::move(e2), n, e, swap};
  if (swap) {
    std::swap(out.z1, out.z2);
    std::swap(out.e1, out.e2);
  }
  return out;
}

InvariantSystem mk_system(int k) {
  if (k != 1 && k != 2) throw ValidationError("mk_system: k must be 1 or 2");
  const std::int64_t even = (k % 2 == 0) ? 1 : 0;  // (1 + (-1)^k) / 2
  InvariantSystem s;
  s.mu = CubicForm(2);
  // basis (x, z)
  s.mu.set(0, 0, 0, 0);
  s.mu.set(0, 0, 1, 1);
  s.mu.set(0, 1, 1, -1);
  s.mu.set(1, 1, 1, even);
  s.p1 = {0, 4 * even};
  s.w2 = {0, 0};
  s.b3 = 0;
  s.c1_class = IntVector{2, 0};
  s.basis_labels = {"x" + std::to_string(k), "z" + std::to_string(k)};
  s.validate();
  return s;
}

}  // namespace cp1
