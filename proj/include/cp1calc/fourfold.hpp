#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cp1calc/lattice.hpp"

namespace cp1 {

/// Closed oriented 4-manifold described by its intersection form in a fixed
/// basis, the mod-2 coordinates of w2(TN), and optionally an integral lift
/// used as c1(TN).
///
/// Simple connectivity and torsion-free homology cannot be checked from
/// this data. They are recorded in `simply_connected()`; systems built from
/// a base without the flag are marked uncertified downstream.
class FourManifold {
 public:
  /// Rank-0 base (S^4).
  FourManifold();

  /// Validates: unimodular form, characteristic w2, c1_tangent == w2 mod 2.
  FourManifold(std::string label, IntersectionForm form, ModTwoVector w2,
               std::optional<IntVector> c1_tangent = std::nullopt, bool simply_connected = true);

  const std::string& label() const { return label_; }
  const IntersectionForm& form() const { return form_; }
  const ModTwoVector& w2() const { return w2_; }
  const std::optional<IntVector>& c1_tangent() const { return c1_tangent_; }
  bool simply_connected() const { return simply_connected_; }
  std::size_t rank() const { return form_.rank(); }
  int signature() const { return cp1::signature(form_); }

  /// Topological data equality; the label is ignored.
  bool same_data(const FourManifold& other) const;

 private:
  std::string label_;
  IntersectionForm form_;
  ModTwoVector w2_;
  std::optional<IntVector> c1_tangent_;
  bool simply_connected_ = true;
};

enum class StandardPiece { S4, CP2, CP2bar, S2xS2 };

/// Catalog pieces. CP2bar's basis vector s* has s*.s* = -1; its c1_tangent
/// entry 1 is the blowup contribution c1 = c1(N) - e with exceptional
/// class e = -s*.
FourManifold standard(StandardPiece piece);
/// Accepts "S4", "CP2", "CP2bar", "S2xS2". Throws ValidationError otherwise.
FourManifold standard(std::string_view name);

FourManifold connected_sum(const FourManifold& n, const FourManifold& nk);

/// <p1(TN), [N]> = 3 sigma(N).
std::int64_t p1_number(const FourManifold& n);

}  // namespace cp1
