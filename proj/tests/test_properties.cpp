// Randomized property suites over the catalog curves. Each suite draws at
// least 100 cases from a fixed-seed generator, so failures reproduce.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "twistcalc/catalog.hpp"
#include "twistcalc/homology.hpp"
#include "twistcalc/intersection.hpp"
#include "twistcalc/twist.hpp"

using namespace tc;

namespace {

struct Pool {
  SurfacePtr surface;
  std::vector<CurveWord> curves;
};

// catalog curves plus their images under a few twists, for variety
std::vector<Pool> pools() {
  static std::vector<Pool> ps = [] {
    Catalog cat(TWISTCALC_DATA);
    std::vector<Pool> out;
    for (const char* name : {"torus-1", "torus-2", "matsumoto-bordered"}) {
      LoadedRelation r = load_relation_entry(cat.at(name));
      Pool p;
      p.surface = r.surface;
      for (const std::string& n : r.curves->names())
        p.curves.push_back(r.curves->at(n));
      std::size_t base = p.curves.size();
      for (std::size_t i = 0; i < base; ++i) {
        Automorphism t = twist_automorphism(p.curves[i]);
        CurveWord im = certify_embedded(t.apply(p.curves[(i + 1) % base]));
        if (im.embedded_certified) p.curves.push_back(im);
      }
      out.push_back(std::move(p));
    }
    return out;
  }();
  return ps;
}

ExplicitTwistWord random_word(const Pool& p, std::mt19937& rng, int len) {
  std::uniform_int_distribution<std::size_t> pick(0, p.curves.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  ExplicitTwistWord w;
  for (int i = 0; i < len; ++i)
    w.push_back({p.curves[pick(rng)], sign(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("disjoint twists commute") {
  std::mt19937 rng(1);
  int cases = 0;
  for (const Pool& p : pools()) {
    std::uniform_int_distribution<std::size_t> pick(0, p.curves.size() - 1);
    int found = 0;
    for (int attempt = 0; attempt < 2000 && found < 40; ++attempt) {
      const CurveWord& a = p.curves[pick(rng)];
      const CurveWord& b = p.curves[pick(rng)];
      if (geometric_intersection(a, b) != 0) continue;
      Automorphism ta = twist_automorphism(a), tb = twist_automorphism(b);
      CHECK(compose(ta, tb).equals(compose(tb, ta)));
      ++found;
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("conjugation identity t_{w(c)} = w t_c w^-1") {
  std::mt19937 rng(2);
  int cases = 0;
  for (const Pool& p : pools()) {
    std::uniform_int_distribution<std::size_t> pick(0, p.curves.size() - 1);
    for (int i = 0; i < 40; ++i) {
      ExplicitTwistWord w = random_word(p, rng, 3);
      Automorphism f = evaluate_twist_word(p.surface, w);
      const CurveWord& c = p.curves[pick(rng)];
      CurveWord fc = certify_embedded(f.apply(c));
      REQUIRE(fc.embedded_certified);
      Automorphism lhs = twist_automorphism(fc);
      Automorphism rhs =
          compose(f, compose(twist_automorphism(c), f.inverse()));
      CHECK(lhs.equals(rhs));
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("homology matrices are functorial") {
  std::mt19937 rng(3);
  int cases = 0;
  for (const Pool& p : pools()) {
    HomologyLattice H(p.surface);
    for (int i = 0; i < 40; ++i) {
      Automorphism f = evaluate_twist_word(p.surface, random_word(p, rng, 2));
      Automorphism g = evaluate_twist_word(p.surface, random_word(p, rng, 2));
      CHECK(H.matrix_of(compose(f, g)) == H.matrix_of(f) * H.matrix_of(g));
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("twist words preserve the boundary peripherally") {
  std::mt19937 rng(4);
  int cases = 0;
  for (const Pool& p : pools()) {
    for (int i = 0; i < 40; ++i) {
      Automorphism f = evaluate_twist_word(p.surface, random_word(p, rng, 4));
      CHECK(peripheral_check(f));
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("transvections are symplectic on the closed surface") {
  std::mt19937 rng(5);
  Catalog cat(TWISTCALC_DATA);
  LoadedRelation r = load_relation_entry(cat.at("matsumoto-closed"));
  REQUIRE(r.capped);
  HomologyLattice H(r.capped);
  std::vector<IntVec> classes;
  for (const std::string& n : r.curves->names())
    classes.push_back(H.homology_class(r.curves->at(n).word));
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  int cases = 0;
  for (int i = 0; i < 120; ++i) {
    // random integral class: small combination of curve classes
    IntVec v(static_cast<std::size_t>(H.rank()), 0);
    for (int k = 0; k < 3; ++k) {
      const IntVec& c = classes[pick(rng)];
      Int m = coef(rng);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += m * c[j];
    }
    CHECK(H.is_symplectic(H.transvection(v)));
    ++cases;
  }
  CHECK(cases >= 100);
}
