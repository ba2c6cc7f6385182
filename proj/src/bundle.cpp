#include "cp1calc/bundle.hpp"

#include <utility>

namespace cp1 {

RankTwoBundle::RankTwoBundle(FourManifold base, IntVector c1, std::int64_t c2)
    : base_(std::move(base)), c1_(std::move(c1)), c2_(c2) {
  if (c1_.size() != base_.rank()) throw DimensionError("bundle c1 length does not match base rank");
}

RankTwoBundle twist(const RankTwoBundle& e, const IntVector& l) {
  const auto& q = e.base().form();
  if (l.size() != q.rank()) throw DimensionError("twist: line bundle class length does not match base rank");
  IntVector c1 = e.c1();
  for (std::size_t i = 0; i < c1.size(); ++i) c1[i] = checked::add(c1[i], checked::mul(2, l[i]));
  const std::int64_t c2 = checked::add(e.c2(), checked::add(q.pair(l, e.c1()), q.pair(l, l)));
  return RankTwoBundle(e.base(), std::move(c1), c2);
}

std::int64_t c1_squared(const RankTwoBundle& e) { return e.base().form().pair(e.c1(), e.c1()); }

}  // namespace cp1
