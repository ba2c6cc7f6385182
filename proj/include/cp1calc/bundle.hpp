#pragma once

#include "cp1calc/fourfold.hpp"

namespace cp1 {

// Rank-two complex bundle over a 4-manifold, identified with its Chern data:
// c1 in the base's H^2 basis and c2 evaluated on [N]. Every pair occurs.
class RankTwoBundle {
 public:
  RankTwoBundle(FourManifold base, IntVector c1, std::int64_t c2);

  const FourManifold& base() const { return base_; }
  const IntVector& c1() const { return c1_; }
  std::int64_t c2() const { return c2_; }
  ModTwoVector w2() const { return reduce_mod2(c1_); }

  bool same_data(const RankTwoBundle& other) const {
    return base_.same_data(other.base_) && c1_ == other.c1_ && c2_ == other.c2_;
  }

 private:
  FourManifold base_;
  IntVector c1_;
  std::int64_t c2_;
};

/// E tensor L with c1(L) = l: c1' = c1 + 2l, c2' = c2 + l.c1 + l.l.
RankTwoBundle twist(const RankTwoBundle& e, const IntVector& l);

std::int64_t c1_squared(const RankTwoBundle& e);

}  // namespace cp1
