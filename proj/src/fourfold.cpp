#include "cp1calc/fourfold.hpp"

#include <utility>

namespace cp1 {

FourManifold::FourManifold() : label_("S4"), c1_tangent_(IntVector{}) {}

FourManifold::FourManifold(std::string label, IntersectionForm form, ModTwoVector w2,
                           std::optional<IntVector> c1_tangent, bool simply_connected)
    : label_(std::move(label)),
      form_(std::move(form)),
      w2_(std::move(w2)),
      c1_tangent_(std::move(c1_tangent)),
      simply_connected_(simply_connected) {
  if (w2_.size() != form_.rank()) throw DimensionError("w2 length does not match form rank");
  for (auto& bit : w2_) {
    if (bit > 1) throw ValidationError("w2 entries must be 0 or 1");
  }
  if (!is_unimodular(form_)) throw ValidationError("intersection form is not unimodular");
  if (!is_characteristic(w2_, form_)) throw ValidationError("w2 not characteristic");
  if (c1_tangent_) {
    if (c1_tangent_->size() != form_.rank()) throw DimensionError("c1_tangent length does not match form rank");
    if (reduce_mod2(*c1_tangent_) != w2_) throw ValidationError("c1_tangent is not a lift of w2");
  }
}

bool FourManifold::same_data(const FourManifold& other) const {
  return form_ == other.form_ && w2_ == other.w2_ && c1_tangent_ == other.c1_tangent_ &&
         simply_connected_ == other.simply_connected_;
}

FourManifold standard(StandardPiece piece) {
  switch (piece) {
    case StandardPiece::S4:
      return FourManifold("S4", IntersectionForm(), {}, IntVector{});
    case StandardPiece::CP2:
      return FourManifold("CP2", IntersectionForm(IntMatrix{{1}}), {1}, IntVector{3});
    case StandardPiece::CP2bar:
      return FourManifold("CP2bar", IntersectionForm(IntMatrix{{-1}}), {1}, IntVector{1});
    case StandardPiece::S2xS2:
      return FourManifold("S2xS2", IntersectionForm(IntMatrix{{0, 1}, {1, 0}}), {0, 0}, IntVector{2, 2});
  }
  throw ValidationError("unknown standard piece");
}

FourManifold standard(std::string_view name) {
  if (name == "S4") return standard(StandardPiece::S4);
  if (name == "CP2") return standard(StandardPiece::CP2);
  if (name == "CP2bar") return standard(StandardPiece::CP2bar);
  if (name == "S2xS2") return standard(StandardPiece::S2xS2);
  throw ValidationError("unknown manifold name '" + std::string(name) + "'");
}

FourManifold connected_sum(const FourManifold& n, const FourManifold& nk) {
  std::optional<IntVector> c1;
  if (n.c1_tangent() && nk.c1_tangent()) c1 = concat(*n.c1_tangent(), *nk.c1_tangent());
  std::string label;
  if (nk.rank() == 0 && nk.label() == "S4") {
    label = n.label();
  } else if (n.rank() == 0 && n.label() == "S4") {
    label = nk.label();
  } else {
    label = n.label() + " # " + nk.label();
  }
  return FourManifold(std::move(label), direct_sum(n.form(), nk.form()), concat(n.w2(), nk.w2()), std::move(c1),
                      n.simply_connected() && nk.simply_connected());
}

std::int64_t p1_number(const FourManifold& n) { return checked::mul(3, n.signature()); }

}  // namespace cp1
