#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twistcalc/free_word.hpp"
#include "twistcalc/ribbon.hpp"

namespace tc {

using SurfacePtr = std::shared_ptr<const Surface>;

/// A free homotopy class of closed curve, given as a cyclically reduced word
/// in the surface's edge generators.
struct CurveWord {
  SurfacePtr surface;
  FreeWord word;  // cyclically reduced, nonempty
  std::string name;
  bool embedded_certified = false;

  CurveWord() = default;
  CurveWord(SurfacePtr s, FreeWord w, std::string n = {});

  bool same_surface(const CurveWord& other) const;
  /// Same unoriented free homotopy class.
  bool parallel_to(const CurveWord& other) const;
};

struct CurveSystem {
  std::vector<CurveWord> curves;
  bool pairwise_disjoint_certified = false;
};

/// Named curves on one surface, as read from a curve file
/// (`name = a b c'` per line, '#' comments).
class CurveSet {
 public:
  CurveSet() = default;
  explicit CurveSet(SurfacePtr surface) : surface_(std::move(surface)) {}

  const SurfacePtr& surface() const { return surface_; }
  void add(CurveWord c);
  bool contains(const std::string& name) const;
  const CurveWord& at(const std::string& name) const;
  const std::vector<std::string>& names() const { return order_; }

 private:
  SurfacePtr surface_;
  std::map<std::string, CurveWord> curves_;
  std::vector<std::string> order_;
};

CurveSet parse_curves(std::istream& in, SurfacePtr surface);
CurveSet parse_curves_file(const std::string& path, SurfacePtr surface);

/// Word from a whitespace-separated token list like "a b c'" against the
/// surface's edge labels. Throws Error on undeclared labels or empty input.
FreeWord parse_word(const std::string& text, const Surface& surface);

std::string format_word(const FreeWord& w, const Surface& surface);

}  // namespace tc
