#include "twistcalc/automorphism.hpp"

namespace tc {

Automorphism Automorphism::identity(SurfacePtr surface) {
  Automorphism a;
  int n = surface->rank();
  a.surface_ = std::move(surface);
  for (int g = 1; g <= n; ++g) {
    a.images_.push_back(FreeWord::generator(g));
    a.inverse_images_.push_back(FreeWord::generator(g));
  }
  return a;
}

Automorphism::Automorphism(SurfacePtr surface, std::vector<FreeWord> images,
                           std::vector<FreeWord> inverse_images)
    : surface_(std::move(surface)),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  std::size_t n = static_cast<std::size_t>(surface_->rank());
  if (images_.size() != n || inverse_images_.size() != n)
    throw Error("automorphism image count does not match surface rank");
  for (int g = 1; g <= static_cast<int>(n); ++g) {
    FreeWord round_trip = substitute(inverse_images_[static_cast<std::size_t>(g - 1)], images_);
    if (round_trip != FreeWord::generator(g))
      throw Error("inverse witness fails on generator " +
                  surface_->ribbon().edge_labels[static_cast<std::size_t>(g - 1)]);
  }
}

FreeWord Automorphism::apply(const FreeWord& w) const {
  return substitute(w, images_);
}

FreeWord Automorphism::apply_inverse(const FreeWord& w) const {
  return substitute(w, inverse_images_);
}

CurveWord Automorphism::apply(const CurveWord& c) const {
  if (!c.surface->same_as(*surface_))
    throw Error("curve lives on a different surface");
  CurveWord out(surface_, apply(c.word).cyclically_reduced(), c.name);
  out.embedded_certified = c.embedded_certified;  // homeomorphism image
  return out;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (!f.surface_->same_as(*g.surface_))
    throw Error("cannot compose automorphisms of different surfaces");
  Automorphism a;
  a.surface_ = f.surface_;
  std::size_t n = f.images_.size();
  a.images_.reserve(n);
  a.inverse_images_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.images_.push_back(substitute(g.images_[i], f.images_));
    a.inverse_images_.push_back(substitute(f.inverse_images_[i], g.inverse_images_));
  }
  return a;
}

Automorphism Automorphism::inverse() const {
  Automorphism a;
  a.surface_ = surface_;
  a.images_ = inverse_images_;
  a.inverse_images_ = images_;
  return a;
}

bool Automorphism::equals(const Automorphism& other) const {
  if (!surface_->same_as(*other.surface_))
    throw Error("cannot compare automorphisms of different surfaces");
  return images_ == other.images_;
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != FreeWord::generator(static_cast<int>(i) + 1)) return false;
  }
  return true;
}

bool peripheral_check(const Automorphism& f) {
  const Surface& s = *f.surface();
  for (int b = 0; b < s.bordered_boundary_count(); ++b) {
    const FreeWord& w = s.boundary_word(b);
    if (!f.apply(w).conjugate_to(w)) return false;
  }
  return true;
}

}  // namespace tc
