#pragma once

#include <string>
#include <vector>

#include "twistcalc/relcalc.hpp"

namespace tc {

/// Monodromy factorization prod_j [phi_j, psi_j] = prod_i t_{c_i} of a
/// genus-g Lefschetz fibration over a genus-h base.
struct MonodromyFactorization {
  SurfacePtr closed_fiber;  // capped model of the fiber
  int fiber_genus = 0;
  int base_genus = 0;
  std::vector<CommutatorPair> commutator_pairs;
  std::vector<CurveWord> vanishing_cycles;  // words on the bordered model
  bool relatively_minimal = false;

  int n() const { return static_cast<int>(vanishing_cycles.size()); }
};

struct FibrationInvariants {
  int n = 0;
  int euler = 0;
  int reducible_count = 0;
  int irreducible_count = 0;
};

struct BoundsEntry {
  int g = 0, h = 0;
  int lower = 0, upper = 0;
  std::vector<std::string> sources;
};

/// Builds the factorization from a verified commutator relation; the fiber
/// is the relation surface with every boundary capped, and must have genus g.
MonodromyFactorization from_commutator_relation(const CommutatorRelation& cr, int g);

/// The trivial fiber bundle over a genus-h base: h formal commutator pairs,
/// no singular fibers.
MonodromyFactorization trivial_bundle(SurfacePtr closed_fiber, int h);

FibrationInvariants invariants(const MonodromyFactorization& mf);

/// Fiber sum: base genera add, factorizations concatenate.
MonodromyFactorization fiber_sum(const MonodromyFactorization& a,
                                 const MonodromyFactorization& b);

/// Best known bounds on N(g,h), the minimal number of singular fibers of a
/// non-trivial relatively minimal genus-g fibration over a genus-h base.
BoundsEntry bounds_lookup(int g, int h);

}  // namespace tc
