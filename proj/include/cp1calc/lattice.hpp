#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "cp1calc/arith.hpp"

namespace cp1 {

/// Symmetric integer bilinear form on a free abelian group with a fixed
/// basis; for a closed 4-manifold this is cup product on H^2 evaluated on
/// the fundamental class. Basis order is part of the data.
class IntersectionForm {
 public:
  IntersectionForm() = default;
  /// Throws ValidationError unless the matrix is square and symmetric.
  explicit IntersectionForm(IntMatrix matrix);

  std::size_t rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  /// x^T Q y.
  std::int64_t pair(const IntVector& x, const IntVector& y) const;
  /// Q x.
  IntVector apply(const IntVector& x) const;

  friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;

 private:
  IntMatrix matrix_;
};

/// Exact determinant by Bareiss fraction-free elimination.
boost::multiprecision::cpp_int determinant(const IntMatrix& m);

/// Number of positive minus number of negative squares, by Lagrange
/// reduction over the rationals. Pivot rule: first nonzero diagonal entry;
/// with an all-zero diagonal, split off the first hyperbolic 2x2 block.
int signature(const IntersectionForm& q);

bool is_unimodular(const IntersectionForm& q);

IntersectionForm direct_sum(const IntersectionForm& a, const IntersectionForm& b);

/// w is characteristic iff diag(Q) == Q w (mod 2).
bool is_characteristic(const ModTwoVector& w, const IntersectionForm& q);

/// Reference check of x^T Q x == w^T Q x (mod 2) over all of (Z/2)^rank.
/// Limited to rank <= 20.
bool is_characteristic_exhaustive(const ModTwoVector& w, const IntersectionForm& q);

}  // namespace cp1
