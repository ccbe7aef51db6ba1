#pragma once

#include <string>
#include <vector>

#include "twistcalc/automorphism.hpp"
#include "twistcalc/intersection.hpp"

namespace tc {

/// One explicit Dehn-twist letter: sign +1 for a right-handed twist.
struct SignedCurve {
  CurveWord curve;
  int sign = 1;
};

using ExplicitTwistWord = std::vector<SignedCurve>;

/// Automorphism of a right-handed (sign +1) or left-handed (-1) Dehn twist
/// along an embedded curve of a bordered surface.
Automorphism twist_automorphism(const CurveWord& c, int sign = 1);

/// Functional evaluation: the word reads left-to-right, rightmost letter
/// applied first.
Automorphism evaluate_twist_word(SurfacePtr surface, const ExplicitTwistWord& w);

struct GeneratorComparison {
  std::string generator;
  std::string lhs_image, rhs_image;
  bool equal = false;
};

struct Certificate {
  bool pass = false;
  std::vector<GeneratorComparison> rows;
  double millis = 0.0;
  std::string detail;
};

/// Exact equality of the induced pi1 automorphisms, generator by generator.
Certificate verify_relation(SurfacePtr surface, const ExplicitTwistWord& lhs,
                            const ExplicitTwistWord& rhs);

/// Alexander-method check: the two sides act identically, up to free
/// homotopy, on a filling curve system. Throws unless the system fills.
Certificate alexander_check(SurfacePtr surface, const ExplicitTwistWord& lhs,
                            const ExplicitTwistWord& rhs,
                            const std::vector<CurveWord>& system);

}  // namespace tc
