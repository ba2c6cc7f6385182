#pragma once

#include "cp1calc/sixfold.hpp"

namespace cp1 {

/// The two conifold transitions of P(E) along a canonical Lagrangian
/// 3-sphere, as invariant systems:
///   z1 = P(E1),           E1 over N # CP2bar, c1 = (c1(E), -s*), c2 = c2(E) - 1
///   z2 = P(E2) # CP3bar,  E2 over N # S4 = N, c1 = c1(E),       c2 = c2(E) - 1
struct TransitionResult {
  InvariantSystem z1;
  InvariantSystem z2;
  RankTwoBundle e1;
  RankTwoBundle e2;
  FourManifold base;
  RankTwoBundle input;
  bool swapped = false;
};

/// `swap` exchanges the (k = 1, k = 2) labelling, which corresponds to
/// reversing the orientation of the vanishing sphere.
TransitionResult conifold_transition(const FourManifold& n, const RankTwoBundle& e, bool swap = false);

/// Local model M_k (k = 1, 2) in the basis (x_k, z_k):
///   mu(z,z,z) = (1 + (-1)^k)/2, mu(z,x,x) = 1, mu(x,z,z) = -1, mu(x,x,x) = 0
///   p1 = (0, 2(1 + (-1)^k)), w2 = 0, b3 = 0, c1 = 2 x_k.
InvariantSystem mk_system(int k);

}  // namespace cp1
