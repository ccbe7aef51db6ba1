#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twistcalc/embedding.hpp"
#include "twistcalc/fibration.hpp"
#include "twistcalc/relcalc.hpp"

namespace tc {

/// One curated entry of the data catalog. Kinds: "relation" (surface +
/// curves + relation + cross-checks), "derivation" (rewriting script over a
/// base relation), "factorization" (fibration data over a relation).
struct CatalogEntry {
  std::string name;
  std::string kind;
  std::string dir;  // directory holding the entry's files
};

class Catalog {
 public:
  explicit Catalog(const std::string& data_dir);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  bool contains(const std::string& name) const;
  const CatalogEntry& at(const std::string& name) const;

 private:
  std::vector<CatalogEntry> entries_;
};

struct LoadedRelation {
  SurfacePtr surface;  // bordered model carrying the twists
  SurfacePtr capped;   // the entry's capped surface, when it declares caps
  std::shared_ptr<CurveSet> curves;
  Relation relation;
  std::vector<CurveWord> filling;  // Alexander system, may be empty
};

/// Parses surface.txt, curves.txt and relation.txt of a relation entry.
/// Every curve is embedded-certified on load.
LoadedRelation load_relation_entry(const CatalogEntry& e);

struct CheckResult {
  std::string text;
  bool pass = false;
  std::string detail;
};

/// Replays checks.txt (separating/intersect/class/filling lines) against the
/// loaded entry. The entry is usable only if every check passes.
std::vector<CheckResult> run_cross_checks(const CatalogEntry& e,
                                          const LoadedRelation& r);

struct DerivationScript {
  std::string base;          // catalog name of the starting relation
  std::vector<int> genus;    // closed host genera to run
  std::vector<std::string> steps;
};

DerivationScript parse_script(const std::string& path);

struct DerivationRun {
  int genus = 0;
  SurfacePtr host;
  CommutatorRelation result;
  std::vector<std::string> log;
};

/// Builds the closed genus-g host, pushes the base relation forward and
/// replays the script's rewriting steps, verifying each exactly.
DerivationRun run_derivation(const Catalog& cat, const CatalogEntry& e, int genus);

struct FactorizationSpec {
  std::string relation;  // catalog name
  int fiber_genus = 0;
  int base_genus = 0;
};

FactorizationSpec parse_factorization(const std::string& path);
MonodromyFactorization build_factorization(const Catalog& cat, const CatalogEntry& e);

}  // namespace tc
