#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cp1calc/bundle.hpp"

namespace cp1 {

/// Symmetric trilinear integer form. Storage holds one entry per sorted
/// index triple i <= j <= k; the accessor symmetrizes.
class CubicForm {
 public:
  CubicForm() = default;
  explicit CubicForm(std::size_t rank);

  std::size_t rank() const { return rank_; }

  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return packed_[index(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, std::int64_t value) { packed_[index(i, j, k)] = value; }

  std::int64_t evaluate(const IntVector& x, const IntVector& y, const IntVector& z) const;
  std::int64_t cube(const IntVector& x) const { return evaluate(x, x, x); }

  /// M(j, k) = mu(x, e_j, e_k).
  IntMatrix contract(const IntVector& x) const;

  /// Visits (i, j, k, value) for i <= j <= k in lexicographic order.
  template <class F>
  void for_each_sorted(F&& f) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = i; j < rank_; ++j)
        for (std::size_t k = j; k < rank_; ++k) f(i, j, k, packed_[n++]);
  }

  friend bool operator==(const CubicForm& a, const CubicForm& b) {
    return a.rank_ == b.rank_ && a.packed_ == b.packed_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t rank_ = 0;
  std::vector<std::int64_t> packed_;
  std::vector<std::uint32_t> offsets_;  // dense rank^3 -> packed slot
};

/// Wall-Jupp data of a simply-connected 6-manifold with torsion-free
/// homology: cup-product cubic form on H^2, p1 pairings, w2, b3, and an
/// optional reference c1 class for almost-complex comparisons.
struct InvariantSystem {
  CubicForm mu;
  IntVector p1;
  ModTwoVector w2;
  std::int64_t b3 = 0;
  std::optional<IntVector> c1_class;
  std::vector<std::string> basis_labels;
  // False when some input lies outside the simply-connected torsion-free
  // class; such systems only support invariant-level statements.
  bool certified = true;

  std::size_t rank() const { return mu.rank(); }

  /// Throws ValidationError on length mismatches, bad w2 bits, negative b3,
  /// or c1_class not lifting w2.
  void validate() const;

  /// Invariant data equality (labels and certification ignored).
  bool same_invariants(const InvariantSystem& other) const {
    return mu == other.mu && p1 == other.p1 && w2 == other.w2 && b3 == other.b3 && c1_class == other.c1_class;
  }
  friend bool operator==(const InvariantSystem&, const InvariantSystem&) = default;
};

/// Cohomology class in H^2 of a system, in the system's basis.
struct CohClass2 {
  IntVector coords;
};

/// P(E) in the basis (a, pi*y_1, ..., pi*y_n), a = c1 of the dual
/// tautological line bundle.
InvariantSystem projectivize(const FourManifold& n, const RankTwoBundle& e);

std::int64_t euler_characteristic(const InvariantSystem& s);

/// Block sum of two systems (connected sum of 6-manifolds).
InvariantSystem connected_sum(const InvariantSystem& left, const InvariantSystem& right);

/// Orientation-reversed CP^3 in the basis z' = restriction of the
/// hyperplane class g of CP^3.
///   mu(z',z',z') = -<g^3,[CP^3]> = -1
///   p1 . z'      = -<4 g^3,[CP^3]> = -4   (p1(CP^3) = 4 g^2)
///   w2           = 4 g mod 2 = 0
///   c1 entry     = +2: blowing up a point subtracts 2 E, and the
///                  exceptional class is E = -z' in this basis.
InvariantSystem cp3bar_system();

/// Connected sum with CP3bar (differentiably, blowup at a point).
InvariantSystem blowup_point(const InvariantSystem& s);

InvariantSystem sum_with_s6(const InvariantSystem& s);

}  // namespace cp1
