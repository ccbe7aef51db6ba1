#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistcalc/cutting.hpp"
#include "twistcalc/twist.hpp"

namespace tc {

/// A letter of a symbolic twist word: either an explicit (curve, sign) twist
/// or a formal mapping-class symbol such as phi.
struct TwistLetter {
  bool formal = false;
  CurveWord curve;     // explicit letters
  std::string symbol;  // formal letters
  int sign = 1;

  static TwistLetter explicit_twist(CurveWord c, int sign = 1);
  static TwistLetter formal_symbol(std::string name, int sign = 1);
};

using TwistWord = std::vector<TwistLetter>;

TwistWord to_twist_word(const ExplicitTwistWord& w);
/// Throws if a formal symbol is present.
ExplicitTwistWord explicit_word(const TwistWord& w);
bool has_formal(const TwistWord& w);
std::string format_twist_word(const TwistWord& w);

/// A curve name introduced by rewriting, with its definition as a twist-word
/// image: curve = (conjugator)(base).
struct PrimedDefinition {
  std::string name;
  ExplicitTwistWord conjugator;
  CurveWord base;
};

struct Relation {
  SurfacePtr surface;
  TwistWord lhs, rhs;
  std::string name;
  std::vector<PrimedDefinition> primed;
  std::vector<std::string> notes;
};

/// Formal symbol with the correspondences phi(first) = second (curve names)
/// and the existence certificate backing it.
struct FormalSymbol {
  std::string name;
  std::vector<std::pair<std::string, std::string>> correspondences;
  ExistenceCertificate certificate;
};

struct CommutatorPair {
  TwistWord a;  // the word A of [A, phi]
  FormalSymbol phi;
};

/// Product of commutators equal to a product of right-handed twists.
struct CommutatorRelation {
  SurfacePtr surface;
  std::vector<CommutatorPair> pairs;
  TwistWord positive_part;
  TwistWord pre_packaging_lhs;
  int h() const { return static_cast<int>(pairs.size()); }
  int n() const { return static_cast<int>(positive_part.size()); }
};

/// t_a t_b -> t_b t_{b^-1(a)} (left) or t_a t_b -> t_{a(b)} t_a (right),
/// acting on positions i, i+1. The conjugated curve gets a primed name.
TwistWord slide(const TwistWord& w, std::size_t i, bool left,
                std::vector<PrimedDefinition>* defs = nullptr);

/// Prefix the inverse twists of the named rhs letters onto the lhs (in
/// reverse list order) and cancel them from the rhs by slides.
Relation transport_left(const Relation& rel, const std::vector<std::string>& names);

/// result[i] = w[perm[i]]; realized by adjacent transpositions, each of
/// which must swap geometrically disjoint explicit letters.
TwistWord reorder_disjoint(const TwistWord& w, const std::vector<std::size_t>& perm);

/// Packages lhs = n1^- p1 n2^- p2 ... nm^- pm into the single commutator
/// [A, phi] with A = the first m letters and phi(n_i) = p_{m+1-i},
/// phi(p_i) = n_{m+1-i}; phi's existence is certified by cutting. An empty
/// pairing yields the trivial (h = 0) case.
CommutatorRelation package_commutator(
    const Relation& rel,
    const std::vector<std::pair<std::string, std::string>>& pairing);

struct Transcript {
  std::vector<std::string> steps;
  bool matches = false;  // expansion equals the pre-packaging lhs
};

/// Replays [A, phi] -> A phi A^-1 phi^-1 -> conjugation eliminations ->
/// explicit word, checking the result against the pre-packaging lhs.
Transcript symbolic_expand(const CommutatorRelation& cr);

}  // namespace tc
