#include "twistcalc/fibration.hpp"

#include "twistcalc/cutting.hpp"
#include "twistcalc/intersection.hpp"

namespace tc {

namespace {

SurfacePtr cap_everything(const SurfacePtr& s) {
  std::set<int> caps;
  for (int b = 0; b < s->bordered_boundary_count(); ++b) caps.insert(b);
  return std::make_shared<Surface>(Surface::analyze(s->ribbon(), std::move(caps)));
}

bool bounds_a_disk(const SurfacePtr& closed, const CurveWord& c) {
  CutReport rep = cut_along(closed, {c});
  for (const CutComponent& comp : rep.components)
    if (comp.genus == 0 && comp.boundary_count == 1) return true;
  return false;
}

}  // namespace

MonodromyFactorization from_commutator_relation(const CommutatorRelation& cr, int g) {
  MonodromyFactorization mf;
  mf.closed_fiber = cap_everything(cr.surface);
  if (mf.closed_fiber->genus() != g)
    throw Error("capped fiber has genus " + std::to_string(mf.closed_fiber->genus()) +
                ", not " + std::to_string(g));
  mf.fiber_genus = g;
  mf.base_genus = cr.h();
  mf.commutator_pairs = cr.pairs;
  mf.relatively_minimal = true;
  for (const TwistLetter& l : cr.positive_part) {
    if (l.formal || l.sign != 1)
      throw Error("vanishing cycles must be right-handed explicit twists");
    CurveWord c = certify_embedded(CurveWord(mf.closed_fiber, l.curve.word, l.curve.name));
    if (!c.embedded_certified)
      throw Error("vanishing cycle '" + c.name + "' is not embedded");
    if (bounds_a_disk(mf.closed_fiber, c)) mf.relatively_minimal = false;
    mf.vanishing_cycles.push_back(std::move(c));
  }
  return mf;
}

MonodromyFactorization trivial_bundle(SurfacePtr closed_fiber, int h) {
  if (h < 0) throw Error("base genus must be non-negative");
  MonodromyFactorization mf;
  mf.fiber_genus = closed_fiber->genus();
  mf.closed_fiber = std::move(closed_fiber);
  mf.base_genus = h;
  mf.relatively_minimal = true;
  for (int j = 0; j < h; ++j) {
    CommutatorPair p;
    p.phi.name = "id";
    p.phi.certificate = {true, "identity monodromy"};
    mf.commutator_pairs.push_back(std::move(p));
  }
  return mf;
}

FibrationInvariants invariants(const MonodromyFactorization& mf) {
  FibrationInvariants inv;
  inv.n = mf.n();
  inv.euler = (2 - 2 * mf.fiber_genus) * (2 - 2 * mf.base_genus) + inv.n;
  for (const CurveWord& c : mf.vanishing_cycles) {
    if (!c.embedded_certified) throw Error("vanishing cycle not embedded-certified");
    if (is_separating(mf.closed_fiber, c))
      ++inv.reducible_count;
    else
      ++inv.irreducible_count;
  }
  return inv;
}

MonodromyFactorization fiber_sum(const MonodromyFactorization& a,
                                 const MonodromyFactorization& b) {
  if (a.fiber_genus != b.fiber_genus)
    throw Error("fiber sum requires equal fiber genus");
  MonodromyFactorization out = a;
  out.base_genus = a.base_genus + b.base_genus;
  out.commutator_pairs.insert(out.commutator_pairs.end(), b.commutator_pairs.begin(),
                              b.commutator_pairs.end());
  out.vanishing_cycles.insert(out.vanishing_cycles.end(), b.vanishing_cycles.begin(),
                              b.vanishing_cycles.end());
  out.relatively_minimal = a.relatively_minimal && b.relatively_minimal;
  return out;
}

BoundsEntry bounds_lookup(int g, int h) {
  if (g < 1 || h < 0) throw Error("bounds_lookup requires g >= 1, h >= 0");
  BoundsEntry e;
  e.g = g;
  e.h = h;
  if (g == 1) {
    e.lower = e.upper = 12;
    e.sources = {"Korkmaz-Ozbagci: N(1,h) = 12"};
    return e;
  }
  if (g == 2) {
    if (h == 0) {
      e.lower = e.upper = 7;
      e.sources = {"Xiao: genus-2 fibration with 7 fibers",
                   "Ozbagci: 5 and 6 impossible over the sphere"};
    } else if (h == 1) {
      e.lower = 6;
      e.upper = 7;
      e.sources = {"Monden: 6 <= N(2,1) <= 7"};
    } else if (h == 2) {
      e.lower = 5;
      e.upper = 6;
      e.sources = {"Korkmaz-Ozbagci: 5 <= N(2,h)", "Monden: N(2,2) <= 6"};
    } else {
      e.lower = e.upper = 5;
      e.sources = {"Monden: N(2,h) = 5 for h >= 3"};
    }
    return e;
  }
  // g >= 3
  if (h >= 2) {
    e.lower = e.upper = 1;
    e.sources = {"Korkmaz-Ozbagci: N(g,h) = 1 iff g >= 3, h >= 2"};
    return e;
  }
  if (h == 0) {
    e.lower = (4 * g + 2 + 4) / 5;  // ceil((4g+2)/5)
    e.upper = (g % 2 == 1) ? 2 * g + 10 : 2 * g + 4;
    e.sources = {"Stipsicz: (4g+2)/5 <= N(g,0)",
                 "Cadavid, Korkmaz: generalized Matsumoto fibrations"};
    return e;
  }
  // h == 1
  e.lower = 2;
  e.sources = {"Korkmaz-Ozbagci: 2 <= N(g,1)"};
  if (g >= 7) {
    e.upper = 5;
    e.sources.push_back("Theorem 1(2): N(g,1) <= 5 for g >= 7");
  } else {
    e.upper = 6;
    e.sources.push_back("Theorem 1(1): N(g,1) <= 6 for g >= 3");
  }
  return e;
}

}  // namespace tc
