#include "twistcalc/relcalc.hpp"

#include <algorithm>

#include "twistcalc/intersection.hpp"

namespace tc {

namespace {

std::string primed_name(const std::string& base) {
  if (!base.empty() && base.back() == '\'') return base;
  return base + "'";
}

// conjugate the curve of an explicit letter by the twist word w (applied as
// an automorphism), priming its name and tracking the definition
TwistLetter conjugate_letter(const TwistLetter& l, const CurveWord& by, int by_sign,
                             std::vector<PrimedDefinition>* defs) {
  TwistLetter out = l;
  Automorphism f = twist_automorphism(by, by_sign);
  CurveWord img = f.apply(l.curve);
  img.name = primed_name(l.curve.name);
  img = certify_embedded(img);
  if (!img.embedded_certified)
    throw Error("conjugated curve '" + img.name + "' failed the embedding check");
  out.curve = std::move(img);
  if (defs) {
    // undoing a slide restores the original letter instead of priming it
    for (std::size_t k = 0; k < defs->size(); ++k) {
      PrimedDefinition& d = (*defs)[k];
      if (d.name == out.curve.name && d.conjugator.size() == 1 &&
          d.conjugator[0].curve.word == by.word &&
          d.conjugator[0].sign == -by_sign && out.curve.word == d.base.word) {
        out.curve = d.base;
        defs->erase(defs->begin() + static_cast<std::ptrdiff_t>(k));
        return out;
      }
    }
  }
  if (defs) {
    SignedCurve step{by, by_sign};
    for (PrimedDefinition& d : *defs) {
      if (d.name == out.curve.name) {
        d.conjugator.insert(d.conjugator.begin(), step);
        return out;
      }
    }
    defs->push_back({out.curve.name, {step}, l.curve});
  }
  return out;
}

}  // namespace

TwistLetter TwistLetter::explicit_twist(CurveWord c, int sign) {
  if (sign != 1 && sign != -1) throw Error("twist sign must be +1 or -1");
  TwistLetter l;
  l.curve = std::move(c);
  l.sign = sign;
  return l;
}

TwistLetter TwistLetter::formal_symbol(std::string name, int sign) {
  if (sign != 1 && sign != -1) throw Error("symbol sign must be +1 or -1");
  TwistLetter l;
  l.formal = true;
  l.symbol = std::move(name);
  l.sign = sign;
  return l;
}

TwistWord to_twist_word(const ExplicitTwistWord& w) {
  TwistWord out;
  out.reserve(w.size());
  for (const SignedCurve& l : w) out.push_back(TwistLetter::explicit_twist(l.curve, l.sign));
  return out;
}

ExplicitTwistWord explicit_word(const TwistWord& w) {
  ExplicitTwistWord out;
  out.reserve(w.size());
  for (const TwistLetter& l : w) {
    if (l.formal)
      throw Error("formal symbol '" + l.symbol + "' cannot be evaluated");
    out.push_back({l.curve, l.sign});
  }
  return out;
}

bool has_formal(const TwistWord& w) {
  return std::any_of(w.begin(), w.end(), [](const TwistLetter& l) { return l.formal; });
}

std::string format_twist_word(const TwistWord& w) {
  std::string s;
  for (const TwistLetter& l : w) {
    if (!s.empty()) s += ' ';
    std::string base = l.formal ? l.symbol : l.curve.name;
    s += l.sign > 0 ? base : (l.formal ? base + "^-1" : "~" + base);
  }
  return s.empty() ? "(empty)" : s;
}

TwistWord slide(const TwistWord& w, std::size_t i, bool left,
                std::vector<PrimedDefinition>* defs) {
  if (i + 1 >= w.size()) throw Error("slide index out of range");
  const TwistLetter& a = w[i];
  const TwistLetter& b = w[i + 1];
  if (a.formal || b.formal)
    throw Error("cannot slide across formal symbol");
  TwistWord out = w;
  if (left) {
    // t_a t_b = t_b t_{b^-1(a)}
    out[i] = b;
    out[i + 1] = conjugate_letter(a, b.curve, -b.sign, defs);
  } else {
    // t_a t_b = t_{a(b)} t_a
    out[i] = conjugate_letter(b, a.curve, a.sign, defs);
    out[i + 1] = a;
  }
  return out;
}

Relation transport_left(const Relation& rel, const std::vector<std::string>& names) {
  Relation out = rel;
  // prefix the inverses in reverse order onto the lhs
  for (const std::string& name : names) {
    auto it = std::find_if(out.rhs.begin(), out.rhs.end(), [&](const TwistLetter& l) {
      return !l.formal && l.sign == 1 && l.curve.name == name;
    });
    if (it == out.rhs.end())
      throw Error("transport letter '" + name + "' not found with sign +1 on the rhs");
    out.lhs.insert(out.lhs.begin(),
                   TwistLetter::explicit_twist(it->curve, -1));
    // cancel it from the rhs: slide the prefixed inverse rightward, which
    // conjugates every letter before the first occurrence by the inverse twist
    std::size_t p = static_cast<std::size_t>(it - out.rhs.begin());
    for (std::size_t j = 0; j < p; ++j)
      out.rhs[j] = conjugate_letter(out.rhs[j], it->curve, -1, &out.primed);
    out.rhs.erase(out.rhs.begin() + static_cast<std::ptrdiff_t>(p));
  }
  out.notes.push_back("transported {" + [&] {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
    return s;
  }() + "} to the left");
  return out;
}

TwistWord reorder_disjoint(const TwistWord& w, const std::vector<std::size_t>& perm) {
  if (perm.size() != w.size()) throw Error("permutation length mismatch");
  std::vector<bool> seen(w.size(), false);
  for (std::size_t p : perm) {
    if (p >= w.size() || seen[p]) throw Error("not a permutation");
    seen[p] = true;
  }
  TwistWord cur = w;
  std::vector<std::size_t> orig(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) orig[i] = i;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t j = i;
    while (orig[j] != perm[i]) ++j;
    for (; j > i; --j) {
      const TwistLetter& x = cur[j - 1];
      const TwistLetter& y = cur[j];
      if (x.formal || y.formal)
        throw Error("cannot reorder across formal symbol");
      if (geometric_intersection(x.curve, y.curve) != 0)
        throw Error("cannot swap intersecting curves '" + x.curve.name + "' and '" +
                    y.curve.name + "'");
      std::swap(cur[j - 1], cur[j]);
      std::swap(orig[j - 1], orig[j]);
    }
  }
  return cur;
}

CommutatorRelation package_commutator(
    const Relation& rel,
    const std::vector<std::pair<std::string, std::string>>& pairing) {
  CommutatorRelation cr;
  cr.surface = rel.surface;
  cr.positive_part = rel.rhs;
  cr.pre_packaging_lhs = rel.lhs;
  for (const TwistLetter& l : cr.positive_part)
    if (l.formal || l.sign != 1)
      throw Error("positive part must consist of right-handed explicit twists");
  if (pairing.empty()) {
    if (!rel.lhs.empty())
      throw Error("empty pairing requires an empty negative block");
    return cr;
  }
  std::size_t m = pairing.size();
  if (rel.lhs.size() != 2 * m)
    throw Error("block mismatch: lhs must have one negative and one positive "
                "letter per pair");
  std::vector<CurveWord> neg(m), pos(m);
  for (std::size_t i = 0; i < m; ++i) {
    const TwistLetter& ln = rel.lhs[2 * i];
    const TwistLetter& lp = rel.lhs[2 * i + 1];
    if (ln.formal || lp.formal) throw Error("formal symbol in packaging blocks");
    if (ln.sign != -1 || ln.curve.name != pairing[i].first)
      throw Error("block mismatch at pair " + std::to_string(i + 1) +
                  ": expected ~" + pairing[i].first + ", found " +
                  (ln.sign == 1 ? "" : "~") + ln.curve.name);
    if (lp.sign != 1 || lp.curve.name != pairing[i].second)
      throw Error("block mismatch at pair " + std::to_string(i + 1) +
                  ": expected " + pairing[i].second + ", found " +
                  (lp.sign == 1 ? "" : "~") + lp.curve.name);
    neg[i] = ln.curve;
    pos[i] = lp.curve;
  }
  // A = first m letters; phi sends n_i -> p_{m+1-i} and p_i -> n_{m+1-i},
  // so phi A^-1 phi^-1 is exactly the second block
  CommutatorPair pair;
  pair.a.assign(rel.lhs.begin(), rel.lhs.begin() + static_cast<std::ptrdiff_t>(m));
  pair.phi.name = "phi";
  std::vector<CurveWord> from, to;
  for (std::size_t i = 0; i < m; ++i) {
    pair.phi.correspondences.push_back({neg[i].name, pos[m - 1 - i].name});
    pair.phi.correspondences.push_back({pos[i].name, neg[m - 1 - i].name});
  }
  for (const TwistLetter& l : pair.a) {
    from.push_back(l.curve);
    for (const auto& [src, dst] : pair.phi.correspondences) {
      if (src != l.curve.name) continue;
      const CurveWord* target = nullptr;
      for (const CurveWord& c : neg)
        if (c.name == dst) target = &c;
      for (const CurveWord& c : pos)
        if (c.name == dst) target = &c;
      to.push_back(*target);
      break;
    }
  }
  pair.phi.certificate = exists_mapping_class(rel.surface, from, to);
  if (!pair.phi.certificate.exists)
    throw Error("no mapping class realizes the pairing: " +
                pair.phi.certificate.reason);
  cr.pairs.push_back(std::move(pair));
  return cr;
}

Transcript symbolic_expand(const CommutatorRelation& cr) {
  Transcript tr;
  if (cr.pairs.empty()) return tr;  // trivial commutator
  TwistWord acc;
  for (const CommutatorPair& cp : cr.pairs) {
    const TwistWord& a = cp.a;
    // step: [A, phi] = A phi A^-1 phi^-1
    TwistWord expanded = a;
    expanded.push_back(TwistLetter::formal_symbol(cp.phi.name, 1));
    TwistWord ainv;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      TwistLetter l = *it;
      l.sign = -l.sign;
      ainv.push_back(l);
    }
    expanded.insert(expanded.end(), ainv.begin(), ainv.end());
    expanded.push_back(TwistLetter::formal_symbol(cp.phi.name, -1));
    tr.steps.push_back("[" + format_twist_word(a) + ", " + cp.phi.name + "] = " +
                       format_twist_word(expanded));
    // step: interleave phi^-1 phi between the letters of A^-1
    TwistWord sandwiched = a;
    for (const TwistLetter& l : ainv) {
      sandwiched.push_back(TwistLetter::formal_symbol(cp.phi.name, 1));
      sandwiched.push_back(l);
      sandwiched.push_back(TwistLetter::formal_symbol(cp.phi.name, -1));
    }
    tr.steps.push_back("= " + format_twist_word(sandwiched));
    // step: eliminate each phi t_c^e phi^-1 as t_{phi(c)}^e
    TwistWord eliminated = a;
    for (const TwistLetter& l : ainv) {
      const std::string* dst = nullptr;
      for (const auto& [src, d] : cp.phi.correspondences)
        if (src == l.curve.name) dst = &d;
      if (!dst)
        throw Error("correspondence insufficient: no image for '" +
                    l.curve.name + "'");
      bool found = false;
      for (const TwistLetter& cand : cr.pre_packaging_lhs) {
        if (!cand.formal && cand.curve.name == *dst) {
          TwistLetter nl = cand;
          nl.sign = l.sign;
          eliminated.push_back(nl);
          found = true;
          break;
        }
      }
      if (!found)
        throw Error("correspondence target '" + *dst + "' is not a relation curve");
      tr.steps.push_back("  " + cp.phi.name + " " +
                         format_twist_word({l}) + " " + cp.phi.name +
                         "^-1 = " + format_twist_word({eliminated.back()}));
    }
    tr.steps.push_back("= " + format_twist_word(eliminated));
    acc.insert(acc.end(), eliminated.begin(), eliminated.end());
  }
  tr.matches = acc.size() == cr.pre_packaging_lhs.size();
  if (tr.matches)
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const TwistLetter& x = acc[i];
      const TwistLetter& y = cr.pre_packaging_lhs[i];
      if (x.formal || y.formal || x.sign != y.sign ||
          x.curve.name != y.curve.name || !(x.curve.word == y.curve.word)) {
        tr.matches = false;
        break;
      }
    }
  tr.steps.push_back(std::string("expansion ") +
                     (tr.matches ? "matches" : "does NOT match") +
                     " the pre-packaging word");
  return tr;
}

}  // namespace tc
