#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistcalc/free_word.hpp"

namespace tc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Half-edge encoding: edge e (0-based) has half-edges 2e (traversed as +e)
// and 2e+1 (traversed as -e).
using HalfEdge = std::int32_t;

inline HalfEdge partner(HalfEdge h) { return h ^ 1; }
inline int edge_of(HalfEdge h) { return h >> 1; }
inline Letter letter_of(HalfEdge h) {
  return (h & 1) ? -(edge_of(h) + 1) : (edge_of(h) + 1);
}
inline HalfEdge half_edge_of(Letter l) {
  int e = (l > 0 ? l : -l) - 1;
  return static_cast<HalfEdge>(2 * e + (l < 0 ? 1 : 0));
}

/// Graph with a cyclic order of half-edges at each vertex. Thickening the
/// graph produces a compact oriented surface with boundary.
struct RibbonGraph {
  std::vector<std::string> edge_labels;
  // One entry per vertex: the half-edges around it in counterclockwise order.
  std::vector<std::vector<HalfEdge>> vertex_orders;

  int edge_count() const { return static_cast<int>(edge_labels.size()); }
  int vertex_count() const { return static_cast<int>(vertex_orders.size()); }

  /// Throws StructureError unless every half-edge appears exactly once and
  /// the pairing is a fixed-point-free involution (guaranteed by encoding).
  void validate() const;

  /// Contracts non-loop edges until a single vertex remains. Edge labels of
  /// contracted edges disappear; the surviving edges keep theirs.
  RibbonGraph reduced_to_one_vertex() const;

  int label_index(const std::string& label) const;  // -1 if absent
};

/// A surface built from a one-vertex ribbon graph, with optional capped
/// boundary components. pi1 of the bordered model is free on the edges.
class Surface {
 public:
  static Surface analyze(const RibbonGraph& ribbon, std::set<int> caps = {});

  const RibbonGraph& ribbon() const { return ribbon_; }
  int rank() const { return ribbon_.edge_count(); }

  int genus() const { return genus_; }
  /// Boundary components of the bordered model (before capping).
  int bordered_boundary_count() const { return static_cast<int>(cycles_.size()); }
  /// Boundary components remaining after capping.
  int boundary_count() const;
  bool closed() const { return boundary_count() == 0; }
  int euler_bordered() const { return 1 - ribbon_.edge_count(); }
  int euler() const { return euler_bordered() + static_cast<int>(caps_.size()); }
  const std::set<int>& caps() const { return caps_; }
  bool is_capped(int boundary) const { return caps_.count(boundary) > 0; }

  const std::vector<std::vector<HalfEdge>>& boundary_cycles() const {
    return cycles_;
  }
  const FreeWord& boundary_word(int i) const { return words_[static_cast<std::size_t>(i)]; }
  /// Index of the boundary component carrying the basepoint (the gap between
  /// the last and first half-edge of the vertex order).
  int base_boundary() const { return base_boundary_; }
  /// Boundary cycle passing through the gap after position p of the vertex
  /// order (between order[p] and order[p+1 mod 2E]).
  int boundary_of_gap(int p) const { return gap_boundary_[static_cast<std::size_t>(p)]; }

  bool same_as(const Surface& other) const;

 private:
  RibbonGraph ribbon_;
  std::set<int> caps_;
  std::vector<std::vector<HalfEdge>> cycles_;
  std::vector<FreeWord> words_;
  std::vector<int> gap_boundary_;
  int genus_ = 0;
  int base_boundary_ = 0;
};

/// Parses the plain-text surface format:
///   edges: a b c
///   vertex: a b a' b' c c'
///   cap: 0
/// A trailing apostrophe marks the reversed half-edge; '#' starts a comment.
Surface parse_surface(std::istream& in);
Surface parse_surface_file(const std::string& path);

}  // namespace tc
