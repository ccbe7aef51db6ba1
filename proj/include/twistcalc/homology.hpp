#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twistcalc/automorphism.hpp"
#include "twistcalc/twist.hpp"

namespace tc {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// Square integer matrix acting on column vectors.
struct IntMatrix {
  std::vector<IntVec> rows;

  static IntMatrix identity(int n);
  int size() const { return static_cast<int>(rows.size()); }
  IntVec apply(const IntVec& x) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& other) const = default;
  IntMatrix transposed() const;
};

/// First homology of the bordered model: free of rank E over the edge loops,
/// with the (possibly degenerate) algebraic intersection form J. Capped
/// boundary classes span the radical directions to quotient by.
class HomologyLattice {
 public:
  explicit HomologyLattice(SurfacePtr surface);

  const SurfacePtr& surface() const { return surface_; }
  int rank() const { return static_cast<int>(j_.rows.size()); }
  const IntMatrix& intersection_form() const { return j_; }

  IntVec homology_class(const CurveWord& c) const;
  IntVec homology_class(const FreeWord& w) const;

  /// Matrix of x -> x + <x,v> v.
  IntMatrix transvection(const IntVec& v) const;
  Int pairing(const IntVec& x, const IntVec& y) const;

  IntMatrix matrix_of(const Automorphism& f) const;
  IntMatrix matrix_of(const ExplicitTwistWord& w) const;

  /// Equality of the induced maps on the capped quotient (exact equality
  /// when nothing is capped).
  bool equal_mod_caps(const IntMatrix& a, const IntMatrix& b) const;

  bool is_symplectic(const IntMatrix& m) const;

  bool screen_relation(const ExplicitTwistWord& lhs,
                       const ExplicitTwistWord& rhs) const;

 private:
  SurfacePtr surface_;
  IntMatrix j_;
  std::vector<IntVec> cap_span_;  // column Hermite form of capped classes
};

}  // namespace tc
