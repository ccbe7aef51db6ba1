#pragma once

#include <span>
#include <vector>

#include "twistcalc/curves.hpp"

namespace tc {

/// Turn sequence of a ray leaving the fattened vertex: entry 0 is the
/// circular position of the first half-edge (basepoint gap = 0), entry i>0
/// the counterclockwise offset of the next direction from the backtracking
/// direction. Lexicographic order on turn sequences is the counterclockwise
/// order of ray endpoints on the circle at infinity, cut at the basepoint.
using TurnSeq = std::vector<int>;

/// One passage of a curve through the vertex disk, with the two rays it
/// leaves along (backward through the previous band, forward through the
/// next one).
struct DiskStrand {
  int curve = 0;      // index into the input span
  int index = 0;      // letter position: the strand sits before letter index
  HalfEdge back_arc = 0, fwd_arc = 0;
  TurnSeq back, fwd;
};

struct CurveDiskData {
  std::vector<DiskStrand> strands;
  int symbols = 0;  // 2 * edge count
};

/// Strand data for a family of curves on one surface, with rays deep enough
/// to decide every pairwise comparison.
CurveDiskData disk_data(std::span<const CurveWord> curves);

/// +1 / -1 if the two strands cross (sign of det(dir_a, dir_b)), 0 if not.
int linked_sign(const DiskStrand& a, const DiskStrand& b);

/// Minimal-position intersection count of two free homotopy classes.
/// Parallel copies (the same unoriented class) count 0.
int geometric_intersection(const CurveWord& a, const CurveWord& b);

/// Minimal self-intersection count; 0 certifies an embedded curve.
/// Proper powers are never embedded and report at least 1.
int self_intersection(const CurveWord& c);

/// Homological (signed) intersection number.
int algebraic_intersection(const CurveWord& a, const CurveWord& b);

/// Marks the curve embedded_certified when self_intersection is 0.
CurveWord certify_embedded(CurveWord c);

struct TwistCrossing {
  int rotation;  // the inserted loop reads c cyclically from this letter
  int sign;
};

/// Crossings of the based generator loop with an embedded curve, split into
/// those met before the band passage, inside the generator's own band, and
/// after, each in walk order. All insertions left-multiply except that the
/// after list follows the generator letter.
struct GeneratorCrossings {
  std::vector<TwistCrossing> before, mid, after;
};

GeneratorCrossings generator_crossings(int gen, const CurveWord& c);

}  // namespace tc
