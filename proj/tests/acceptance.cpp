// Acceptance suite: the headline computations, each exact and fast.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twistcalc/catalog.hpp"
#include "twistcalc/cutting.hpp"
#include "twistcalc/homology.hpp"
#include "twistcalc/twist.hpp"

using namespace tc;

namespace {

const Catalog& cat() {
  static Catalog c(TWISTCALC_DATA);
  return c;
}

void check_relation_entry(const std::string& name) {
  LoadedRelation r = load_relation_entry(cat().at(name));
  for (const CheckResult& c : run_cross_checks(cat().at(name), r))
    CHECK_MESSAGE(c.pass, name, ": ", c.text);
  ExplicitTwistWord lhs = explicit_word(r.relation.lhs);
  ExplicitTwistWord rhs = explicit_word(r.relation.rhs);
  HomologyLattice H(r.surface);
  CHECK(H.screen_relation(lhs, rhs));
  Certificate pi1 = verify_relation(r.surface, lhs, rhs);
  CHECK_MESSAGE(pi1.pass, name, ": pi1 certificate");
  CHECK(static_cast<int>(pi1.rows.size()) == r.surface->rank());
  if (!r.filling.empty())
    CHECK(alexander_check(r.surface, lhs, rhs, r.filling).pass);
}

}  // namespace

TEST_CASE("1. genus-2 relation (B0 B1 B2 C)^2 = d1 d2 verifies exactly") {
  check_relation_entry("matsumoto-bordered");
  LoadedRelation r = load_relation_entry(cat().at("matsumoto-bordered"));
  // the half word carries g3 to g5
  Automorphism half = evaluate_twist_word(
      r.surface, {{r.curves->at("B0"), 1},
                  {r.curves->at("B1"), 1},
                  {r.curves->at("B2"), 1},
                  {r.curves->at("C"), 1}});
  CHECK(half.apply(r.curves->at("g3")).parallel_to(r.curves->at("g5")));
  CHECK(half.apply(r.curves->at("g5")).parallel_to(r.curves->at("g3")));
}

TEST_CASE("2. k-holed torus relations verify exactly") {
  check_relation_entry("torus-1");
  check_relation_entry("torus-2");
  check_relation_entry("torus-7");
}

TEST_CASE("3. six-twist single-commutator form for g in 3..6") {
  for (int g : {3, 4, 5, 6}) {
    DerivationRun run = run_derivation(cat(), cat().at("thm1-1"), g);
    CHECK(run.result.h() == 1);
    CHECK(run.result.n() == 6);
    for (const TwistLetter& l : run.result.positive_part) CHECK(l.sign == 1);
    REQUIRE(run.result.pairs.size() == 1);
    CHECK(run.result.pairs[0].phi.certificate.exists);
    CHECK(symbolic_expand(run.result).matches);
  }
}

TEST_CASE("4. five-twist single-commutator form for g in 7..10") {
  for (int g : {7, 8, 9, 10}) {
    DerivationRun run = run_derivation(cat(), cat().at("thm1-2"), g);
    CHECK(run.result.h() == 1);
    CHECK(run.result.n() == 5);
    for (const TwistLetter& l : run.result.positive_part) CHECK(l.sign == 1);
    REQUIRE(run.result.pairs.size() == 1);
    CHECK(run.result.pairs[0].phi.certificate.exists);
    CHECK(symbolic_expand(run.result).matches);
  }
}

TEST_CASE("5. negative controls") {
  LoadedRelation r = load_relation_entry(cat().at("matsumoto-bordered"));
  ExplicitTwistWord lhs = explicit_word(r.relation.lhs);
  ExplicitTwistWord rhs = explicit_word(r.relation.rhs);
  HomologyLattice H(r.surface);

  SUBCASE("mutating any single letter breaks the relation") {
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      ExplicitTwistWord bad = rhs;
      bad[i].curve = bad[i].curve.name == "B1" ? r.curves->at("C")
                                               : r.curves->at("B1");
      bool still_ok =
          H.screen_relation(lhs, bad) && verify_relation(r.surface, lhs, bad).pass;
      CHECK_FALSE(still_ok);
    }
  }

  SUBCASE("dropping any single letter breaks the relation") {
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      ExplicitTwistWord bad = rhs;
      bad.erase(bad.begin() + static_cast<std::ptrdiff_t>(i));
      bool still_ok =
          H.screen_relation(lhs, bad) && verify_relation(r.surface, lhs, bad).pass;
      CHECK_FALSE(still_ok);
    }
  }

  SUBCASE("cutting along the separating curve gives two genus-1 pieces") {
    CutReport rep = cut_along(r.surface, {r.curves->at("C")});
    REQUIRE(rep.components.size() == 2);
    CHECK(rep.components[0].genus == 1);
    CHECK(rep.components[1].genus == 1);
  }
}

// Criterion 6, the randomized property suites, lives in the property binary.

TEST_CASE("7. fibration invariants and the bounds ledger") {
  MonodromyFactorization mf =
      build_factorization(cat(), cat().at("matsumoto-fib"));
  FibrationInvariants inv = invariants(mf);
  CHECK(inv.n == 8);
  CHECK(inv.euler == 4);
  CHECK(inv.reducible_count == 2);

  MonodromyFactorization sum = fiber_sum(mf, trivial_bundle(mf.closed_fiber, 1));
  CHECK(sum.n() == 8);
  CHECK(sum.base_genus == 1);

  // the previous-results table
  for (int h : {0, 1, 2, 3, 4}) {
    BoundsEntry b = bounds_lookup(1, h);
    CHECK(b.lower == 12);
    CHECK(b.upper == 12);
  }
  CHECK(bounds_lookup(2, 0).lower == 7);
  CHECK(bounds_lookup(2, 0).upper == 7);
  CHECK(bounds_lookup(2, 1).lower == 6);
  CHECK(bounds_lookup(2, 1).upper == 7);
  CHECK(bounds_lookup(2, 2).lower == 5);
  CHECK(bounds_lookup(2, 2).upper == 6);
  CHECK(bounds_lookup(2, 3).lower == 5);
  CHECK(bounds_lookup(2, 3).upper == 5);
  for (int g : {3, 4, 5, 6, 7, 8})
    for (int h : {2, 3}) {
      CHECK(bounds_lookup(g, h).lower == 1);
      CHECK(bounds_lookup(g, h).upper == 1);
    }
  // the improved upper bounds over the torus
  for (int g : {3, 4, 5, 6}) CHECK(bounds_lookup(g, 1).upper == 6);
  for (int g : {7, 8, 9, 12}) CHECK(bounds_lookup(g, 1).upper == 5);
  for (int g : {3, 4, 5, 6, 7, 8}) CHECK(bounds_lookup(g, 1).lower == 2);
  // the sphere-base lower bound ceil((4g+2)/5)
  for (int g = 3; g <= 20; ++g)
    CHECK(bounds_lookup(g, 0).lower == (4 * g + 2 + 4) / 5);
}
