#include "cp1calc/sixfold.hpp"

#include <algorithm>
#include <array>

namespace cp1 {

CubicForm::CubicForm(std::size_t rank) : rank_(rank), offsets_(rank * rank * rank) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i; j < rank; ++j)
      for (std::size_t k = j; k < rank; ++k) {
        const std::uint32_t slot = static_cast<std::uint32_t>(n++);
        const std::array<std::size_t, 3> t{i, j, k};
        // all permutations of (i, j, k) share the slot
        const std::array<std::array<int, 3>, 6> perms{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& p : perms) offsets_[(t[p[0]] * rank + t[p[1]]) * rank + t[p[2]]] = slot;
      }
  packed_.assign(n, 0);
}

std::size_t CubicForm::index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= rank_ || j >= rank_ || k >= rank_) throw DimensionError("cubic form index out of range");
  return offsets_[(i * rank_ + j) * rank_ + k];
}

std::int64_t CubicForm::evaluate(const IntVector& x, const IntVector& y, const IntVector& z) const {
  if (x.size() != rank_ || y.size() != rank_ || z.size() != rank_)
    throw DimensionError("cubic form evaluated on vectors of wrong length");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    std::int64_t inner = 0;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      std::int64_t row = 0;
      for (std::size_t k = 0; k < rank_; ++k) {
        if (z[k] == 0) continue;
        row = checked::add(row, checked::mul((*this)(i, j, k), z[k]));
      }
      inner = checked::add(inner, checked::mul(row, y[j]));
    }
    total = checked::add(total, checked::mul(inner, x[i]));
  }
  return total;
}

IntMatrix CubicForm::contract(const IntVector& x) const {
  if (x.size() != rank_) throw DimensionError("contract: vector of wrong length");
  IntMatrix m(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t k = j; k < rank_; ++k) {
        const std::int64_t v = checked::add(m(j, k), checked::mul(x[i], (*this)(i, j, k)));
        m(j, k) = v;
        m(k, j) = v;
      }
  }
  return m;
}

void InvariantSystem::validate() const {
  const std::size_t r = rank();
  if (p1.size() != r) throw DimensionError("p1 length does not match rank");
  if (w2.size() != r) throw DimensionError("w2 length does not match rank");
  if (!basis_labels.empty() && basis_labels.size() != r) throw DimensionError("basis label count does not match rank");
  for (auto bit : w2)
    if (bit > 1) throw ValidationError("w2 entries must be 0 or 1");
  if (b3 < 0) throw ValidationError("b3 must be nonnegative");
  if (c1_class) {
    if (c1_class->size() != r) throw DimensionError("c1_class length does not match rank");
    if (reduce_mod2(*c1_class) != w2) throw ValidationError("c1_class is not a lift of w2");
  }
}

InvariantSystem projectivize(const FourManifold& n, const RankTwoBundle& e) {
  if (!e.base().same_data(n)) throw ValidationError("bundle base does not match the given 4-manifold");
  const auto& q = n.form();
  const std::size_t b2 = n.rank();
  const std::size_t r = b2 + 1;

  InvariantSystem s;
  s.mu = CubicForm(r);
  const IntVector qc1 = q.apply(e.c1());
  s.mu.set(0, 0, 0, checked::sub(c1_squared(e), e.c2()));
  for (std::size_t i = 0; i < b2; ++i) {
    s.mu.set(0, 0, i + 1, checked::neg(qc1[i]));
    for (std::size_t j = i; j < b2; ++j) s.mu.set(0, i + 1, j + 1, q(i, j));
  }

  s.p1.assign(r, 0);
  s.p1[0] = checked::add(checked::mul(3, n.signature()),
                         checked::sub(c1_squared(e), checked::mul(4, e.c2())));

  s.w2.assign(r, 0);
  const ModTwoVector we = e.w2();
  for (std::size_t i = 0; i < b2; ++i) s.w2[i + 1] = static_cast<std::uint8_t>((n.w2()[i] + we[i]) & 1);

  if (n.c1_tangent()) {
    IntVector c1(r, 0);
    c1[0] = 2;
    for (std::size_t i = 0; i < b2; ++i) c1[i + 1] = checked::add((*n.c1_tangent())[i], e.c1()[i]);
    s.c1_class = std::move(c1);
  }

  s.basis_labels.push_back("a");
  for (std::size_t i = 0; i < b2; ++i) s.basis_labels.push_back("y" + std::to_string(i + 1));
  s.certified = n.simply_connected();
  s.validate();
  return s;
}

std::int64_t euler_characteristic(const InvariantSystem& s) {
  return checked::sub(checked::add(2, checked::mul(2, static_cast<std::int64_t>(s.rank()))), s.b3);
}

InvariantSystem connected_sum(const InvariantSystem& left, const InvariantSystem& right) {
  const std::size_t rl = left.rank(), rr = right.rank();
  InvariantSystem s;
  s.mu = CubicForm(rl + rr);
  left.mu.for_each_sorted([&](std::size_t i, std::size_t j, std::size_t k, std::int64_t v) { s.mu.set(i, j, k, v); });
  right.mu.for_each_sorted(
      [&](std::size_t i, std::size_t j, std::size_t k, std::int64_t v) { s.mu.set(rl + i, rl + j, rl + k, v); });
  s.p1 = concat(left.p1, right.p1);
  s.w2 = concat(left.w2, right.w2);
  s.b3 = checked::add(left.b3, right.b3);
  if (left.c1_class && right.c1_class) s.c1_class = concat(*left.c1_class, *right.c1_class);
  if (!left.basis_labels.empty() || !right.basis_labels.empty()) {
    auto labels = [](const InvariantSystem& x) {
      if (!x.basis_labels.empty()) return x.basis_labels;
      std::vector<std::string> l;
      for (std::size_t i = 0; i < x.rank(); ++i) l.push_back("e" + std::to_string(i + 1));
      return l;
    };
    s.basis_labels = labels(left);
    for (auto& l : labels(right)) s.basis_labels.push_back(l);
  }
  s.certified = left.certified && right.certified;
  s.validate();
  return s;
}

InvariantSystem cp3bar_system() {
  InvariantSystem s;
  s.mu = CubicForm(1);
  s.mu.set(0, 0, 0, -1);
  s.p1 = {-4};
  s.w2 = {0};
  s.b3 = 0;
  s.c1_class = IntVector{2};
  s.basis_labels = {"z'"};
  return s;
}

InvariantSystem blowup_point(const InvariantSystem& s) {
  InvariantSystem piece = cp3bar_system();
  const auto blowups = std::count_if(s.basis_labels.begin(), s.basis_labels.end(),
                                     [](const std::string& l) { return l.rfind("z'", 0) == 0; });
  if (blowups > 0) piece.basis_labels = {"z'" + std::to_string(blowups + 1)};
  return connected_sum(s, piece);
}

InvariantSystem sum_with_s6(const InvariantSystem& s) { return s; }

}  // namespace cp1
