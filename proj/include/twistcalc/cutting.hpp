#pragma once

#include <string>
#include <vector>

#include "twistcalc/curves.hpp"

namespace tc {

struct CutComponent {
  int genus = 0;
  int boundary_count = 0;  // after cap adjustment
  // cut curves with a side on this component: (curve index, 'L'/'R')
  std::vector<std::pair<int, char>> curve_sides;
  std::vector<int> original_boundaries;  // uncapped boundary cycles here
  int caps_absorbed = 0;
};

struct CutReport {
  std::vector<CutComponent> components;
  int euler_total = 0;

  bool connected() const { return components.size() == 1; }
};

/// Cuts the surface along a pairwise disjoint system of embedded curves.
/// Throws naming the first intersecting pair if the system is not disjoint.
CutReport cut_along(const SurfacePtr& surface,
                    const std::vector<CurveWord>& system);

/// True iff cutting along c yields two components (on the capped surface).
bool is_separating(const SurfacePtr& surface, const CurveWord& c);

/// True iff every complement component of the (possibly crossing) system is
/// a disk or a boundary-parallel annulus.
bool is_filling(const SurfacePtr& surface, const std::vector<CurveWord>& system);

struct ExistenceCertificate {
  bool exists = false;
  std::string reason;
};

/// Change-of-coordinates certificate: some mapping class carries the ordered
/// disjoint system A onto B. Decided by matching cut invariants.
ExistenceCertificate exists_mapping_class(const SurfacePtr& surface,
                                          const std::vector<CurveWord>& a,
                                          const std::vector<CurveWord>& b);

}  // namespace tc
