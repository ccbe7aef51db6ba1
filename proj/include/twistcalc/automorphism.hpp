#pragma once

#include <vector>

#include "twistcalc/curves.hpp"

namespace tc {

/// A mapping class of the bordered surface, stored as the induced
/// automorphism of pi1 (free on the edges, basepoint on the boundary)
/// together with an inverse witness.
class Automorphism {
 public:
  static Automorphism identity(SurfacePtr surface);
  Automorphism(SurfacePtr surface, std::vector<FreeWord> images,
               std::vector<FreeWord> inverse_images);

  const SurfacePtr& surface() const { return surface_; }
  const FreeWord& image(int gen) const {
    return images_[static_cast<std::size_t>(gen - 1)];
  }
  const std::vector<FreeWord>& images() const { return images_; }
  const std::vector<FreeWord>& inverse_images() const { return inverse_images_; }

  FreeWord apply(const FreeWord& w) const;
  FreeWord apply_inverse(const FreeWord& w) const;
  /// Image of a free homotopy class (cyclically reduced).
  CurveWord apply(const CurveWord& c) const;

  /// compose(f, g) applies g first ("the product fg" in functional order).
  friend Automorphism compose(const Automorphism& f, const Automorphism& g);
  Automorphism inverse() const;
  bool equals(const Automorphism& other) const;
  bool is_identity() const;

 private:
  Automorphism() = default;
  SurfacePtr surface_;
  std::vector<FreeWord> images_, inverse_images_;
};

/// True iff every boundary word of the surface maps to a conjugate of
/// itself. Sound twist constructions always pass.
bool peripheral_check(const Automorphism& f);

}  // namespace tc
