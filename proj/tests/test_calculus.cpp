#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "twistcalc/catalog.hpp"
#include "twistcalc/cutting.hpp"
#include "twistcalc/embedding.hpp"
#include "twistcalc/fibration.hpp"
#include "twistcalc/relcalc.hpp"

using namespace tc;

namespace {

const Catalog& cat() {
  static Catalog c(TWISTCALC_DATA);
  return c;
}

const LoadedRelation& matsumoto() {
  static LoadedRelation r = load_relation_entry(cat().at("matsumoto-bordered"));
  return r;
}

}  // namespace

TEST_SUITE("cutting") {
  TEST_CASE("separating curve disconnects") {
    const LoadedRelation& r = matsumoto();
    CHECK(is_separating(r.surface, r.curves->at("C")));
    CHECK_FALSE(is_separating(r.surface, r.curves->at("B0")));
    CutReport rep = cut_along(r.surface, {r.curves->at("C")});
    CHECK(rep.components.size() == 2);
    CHECK(rep.components[0].genus == 1);
    CHECK(rep.components[1].genus == 1);
  }

  TEST_CASE("cutting preserves euler characteristic") {
    const LoadedRelation& r = matsumoto();
    CutReport rep = cut_along(r.surface, {r.curves->at("B0")});
    CHECK(rep.euler_total == r.surface->euler_bordered());
    CHECK(rep.connected());
  }

  TEST_CASE("crossing systems are rejected with names") {
    const LoadedRelation& r = matsumoto();
    CHECK_THROWS_WITH_AS(
        cut_along(r.surface, {r.curves->at("B0"), r.curves->at("B1")}),
        doctest::Contains("B0"), Error);
  }

  TEST_CASE("filling detection") {
    const LoadedRelation& r = matsumoto();
    CHECK(is_filling(r.surface, r.filling));
    CHECK_FALSE(is_filling(r.surface, {r.curves->at("g1")}));
  }

  TEST_CASE("change of coordinates certificates") {
    const LoadedRelation& r = matsumoto();
    ExistenceCertificate same = exists_mapping_class(
        r.surface, {r.curves->at("g1")}, {r.curves->at("g4")});
    CHECK(same.exists);
    ExistenceCertificate diff = exists_mapping_class(
        r.surface, {r.curves->at("g1")}, {r.curves->at("C")});
    CHECK_FALSE(diff.exists);
  }
}

TEST_SUITE("embedding") {
  TEST_CASE("close_up produces closed hosts of the right genus") {
    const LoadedRelation& r = matsumoto();
    EmbeddingMap em = close_up(r.surface, 0);
    CHECK(em.host->genus() == 3);
    CHECK(em.host->closed());
    EmbeddingMap em2 = close_up(r.surface, 2);
    CHECK(em2.host->genus() == 5);
  }

  TEST_CASE("pushed curves keep certificates and intersections") {
    const LoadedRelation& r = matsumoto();
    EmbeddingMap em = close_up(r.surface, 0);
    CurveWord b0 = push_curve(em, r.curves->at("B0"));
    CurveWord c = push_curve(em, r.curves->at("C"));
    CHECK(b0.embedded_certified);
    CHECK(geometric_intersection(b0, c) ==
          geometric_intersection(r.curves->at("B0"), r.curves->at("C")));
  }

  TEST_CASE("boundary curves become essential in the closed host") {
    const LoadedRelation& r = matsumoto();
    EmbeddingMap em = close_up(r.surface, 0);
    CurveWord d1 = push_curve(em, r.curves->at("d1"));
    auto lift = std::make_shared<Surface>(Surface::analyze(em.host->ribbon()));
    CurveWord d1l(lift, d1.word);
    CHECK_FALSE(is_separating(lift, certify_embedded(d1l)));
  }

  TEST_CASE("invalid injections are rejected") {
    const LoadedRelation& r = matsumoto();
    CHECK_THROWS_AS(embed(r.surface, r.surface, {{"a1", "b1"}, {"b1", "b1"}}),
                    Error);
  }
}

TEST_SUITE("relcalc") {
  TEST_CASE("slide left then right is the identity") {
    const LoadedRelation& r = matsumoto();
    TwistWord l = slide(r.relation.rhs, 0, true);
    TwistWord back = slide(l, 0, false);
    REQUIRE(back.size() == r.relation.rhs.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      CHECK(back[i].sign == r.relation.rhs[i].sign);
      CHECK(back[i].curve.parallel_to(r.relation.rhs[i].curve));
    }
  }

  TEST_CASE("slide preserves the evaluated automorphism") {
    const LoadedRelation& r = matsumoto();
    TwistWord l = slide(r.relation.rhs, 2, true);
    Automorphism before =
        evaluate_twist_word(r.surface, explicit_word(r.relation.rhs));
    Automorphism after = evaluate_twist_word(r.surface, explicit_word(l));
    CHECK(before.equals(after));
  }

  TEST_CASE("reorder_disjoint rejects crossing swaps") {
    const LoadedRelation& r = matsumoto();
    TwistWord w = {TwistLetter::explicit_twist(r.curves->at("B0")),
                   TwistLetter::explicit_twist(r.curves->at("B1"))};
    CHECK_THROWS_AS(reorder_disjoint(w, {1, 0}), Error);
    TwistWord d = {TwistLetter::explicit_twist(r.curves->at("d1")),
                   TwistLetter::explicit_twist(r.curves->at("d2"))};
    TwistWord rd = reorder_disjoint(d, {1, 0});
    CHECK(rd[0].curve.name == "d2");
  }

  TEST_CASE("transport moves inverses to the lhs") {
    Relation rel = matsumoto().relation;
    rel.rhs = slide(rel.rhs, 0, true, &rel.primed);
    rel.rhs = slide(rel.rhs, 1, true, &rel.primed);
    Relation t = transport_left(rel, {"B1", "B2"});
    CHECK(t.lhs.size() == 4);
    CHECK(t.lhs[0].sign == -1);
    CHECK(t.lhs[0].curve.name == "B2");
    CHECK(t.rhs.size() == 6);
  }
}

TEST_SUITE("fibration") {
  TEST_CASE("matsumoto invariants") {
    MonodromyFactorization mf =
        build_factorization(cat(), cat().at("matsumoto-fib"));
    FibrationInvariants inv = invariants(mf);
    CHECK(mf.fiber_genus == 2);
    CHECK(inv.n == 8);
    CHECK(inv.euler == 4);
    CHECK(inv.reducible_count == 2);
    CHECK(inv.irreducible_count == 6);
    CHECK(mf.relatively_minimal);
  }

  TEST_CASE("fiber sum with the trivial bundle raises the base genus") {
    MonodromyFactorization mf =
        build_factorization(cat(), cat().at("matsumoto-fib"));
    MonodromyFactorization tb = trivial_bundle(mf.closed_fiber, 1);
    MonodromyFactorization sum = fiber_sum(mf, tb);
    CHECK(sum.base_genus == 1);
    CHECK(sum.n() == 8);
    // e(X1 # X2) = e(X1) + e(X2) - 2 chi(fiber)
    CHECK(invariants(sum).euler ==
          invariants(mf).euler + invariants(tb).euler -
              2 * (2 - 2 * mf.fiber_genus));
  }

  TEST_CASE("bounds ledger spot checks") {
    CHECK(bounds_lookup(1, 0).lower == 12);
    CHECK(bounds_lookup(1, 5).upper == 12);
    BoundsEntry b20 = bounds_lookup(2, 0);
    CHECK(b20.lower == 7);
    CHECK(b20.upper == 7);
    CHECK(bounds_lookup(4, 2).upper == 1);
    CHECK(bounds_lookup(5, 1).upper == 6);
    CHECK(bounds_lookup(8, 1).upper == 5);
    CHECK_THROWS_AS(bounds_lookup(0, 0), Error);
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("every entry is listed with a kind") {
    for (const CatalogEntry& e : cat().entries())
      CHECK((e.kind == "relation" || e.kind == "derivation" ||
             e.kind == "factorization"));
    CHECK(cat().contains("matsumoto-bordered"));
    CHECK_THROWS_AS(cat().at("nonexistent"), Error);
  }

  TEST_CASE("cross-checks pass for the matsumoto entry") {
    const CatalogEntry& e = cat().at("matsumoto-bordered");
    for (const CheckResult& c : run_cross_checks(e, matsumoto()))
      CHECK_MESSAGE(c.pass, c.text);
  }

  TEST_CASE("derivation scripts parse") {
    DerivationScript s =
        parse_script(cat().at("thm1-1").dir + "/script.txt");
    CHECK(s.base == "matsumoto-bordered");
    CHECK(s.genus == std::vector<int>{3, 4, 5, 6});
    CHECK(s.steps.size() == 5);
  }

  TEST_CASE("thm1-1 derivation at the minimal genus") {
    DerivationRun run = run_derivation(cat(), cat().at("thm1-1"), 3);
    CHECK(run.result.h() == 1);
    CHECK(run.result.n() == 6);
    CHECK(run.result.pairs[0].phi.certificate.exists);
    CHECK(symbolic_expand(run.result).matches);
  }
}
