#pragma once

#include <map>

#include "twistcalc/curves.hpp"

namespace tc {

/// Inclusion of a bordered sub-surface into a host surface, given by an
/// injection of sub edges into host edges. The host's vertex order must
/// restrict to the sub's vertex order on the image half-edges, so the host
/// is the sub with extra bands attached in boundary gaps.
struct EmbeddingMap {
  SurfacePtr sub;
  SurfacePtr host;
  std::map<int, int> edge_injection;  // sub edge index -> host edge index
};

/// Validates the injection (cyclic-order adjacency) and returns the map.
/// Labels present in both surfaces map to themselves when `by_label` entries
/// are omitted.
EmbeddingMap embed(SurfacePtr sub, SurfacePtr host,
                   const std::map<std::string, std::string>& by_label);

/// Relabels a sub-surface curve word into the host. Embedded certificates
/// carry over: a subsurface inclusion preserves minimal position.
CurveWord push_curve(const EmbeddingMap& m, const CurveWord& c);

FreeWord push_word(const EmbeddingMap& m, const FreeWord& w);

/// Closed host surface obtained by joining all boundary components of `sub`
/// with connecting bands (each join adds one to the genus), attaching
/// `extra_handles` further handles to the joining tube, and capping the one
/// remaining boundary. Connecting edges are labeled f1, f2, ... and handle
/// pairs u1/v1, u2/v2, ...
EmbeddingMap close_up(SurfacePtr sub, int extra_handles);

}  // namespace tc
