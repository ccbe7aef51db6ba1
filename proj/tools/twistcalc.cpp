// twistcalc: verify and manipulate mapping class group relations and the
// Lefschetz fibration data built on top of them.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistcalc/catalog.hpp"
#include "twistcalc/cutting.hpp"
#include "twistcalc/homology.hpp"
#include "twistcalc/intersection.hpp"
#include "twistcalc/twist.hpp"

namespace {

using namespace tc;

constexpr int kPass = 0, kFail = 1, kInputError = 2;

ExplicitTwistWord explicit_side(const TwistWord& w) { return explicit_word(w); }

// same curves, read on the capped model, so the screen runs in the quotient
ExplicitTwistWord retag(const ExplicitTwistWord& w, const SurfacePtr& s) {
  ExplicitTwistWord out;
  for (const SignedCurve& l : w)
    out.push_back({CurveWord(s, l.curve.word, l.curve.name), l.sign});
  return out;
}

int cmd_verify(const Catalog& cat, const std::string& name,
               const std::vector<std::string>& alexander_names,
               bool screen_only, bool transcript) {
  LoadedRelation rel = load_relation_entry(cat.at(name));
  std::cout << "== verify " << name << " ==\n";

  std::vector<CheckResult> checks = run_cross_checks(cat.at(name), rel);
  bool oracle = true;
  for (const CheckResult& c : checks) {
    oracle = oracle && c.pass;
    if (!c.pass || transcript)
      std::cout << "oracle: " << c.text << "  [" << (c.pass ? "pass" : "FAIL")
                << ", " << c.detail << "]\n";
  }
  std::cout << "cross-checks: " << checks.size() << " ("
            << (oracle ? "pass" : "FAIL") << ")\n";

  ExplicitTwistWord lhs = explicit_side(rel.relation.lhs);
  ExplicitTwistWord rhs = explicit_side(rel.relation.rhs);
  HomologyLattice lattice(rel.capped ? rel.capped : rel.surface);
  bool screen = rel.capped
                    ? lattice.screen_relation(retag(lhs, rel.capped),
                                              retag(rhs, rel.capped))
                    : lattice.screen_relation(lhs, rhs);
  std::cout << "screen: " << (screen ? "pass" : "FAIL")
            << (rel.capped ? " (capped quotient)" : "") << "\n";

  bool pi1 = true, alexander = true;
  if (!screen_only) {
    Certificate cert = verify_relation(rel.surface, lhs, rhs);
    pi1 = cert.pass;
    std::cout << "pi1: " << (pi1 ? "pass" : "FAIL") << "\n";
    if (transcript)
      for (const GeneratorComparison& row : cert.rows)
        std::cout << "  " << row.generator << " -> " << row.lhs_image
                  << (row.equal ? "  ==  " : "  !=  ") << row.rhs_image << "\n";
    std::vector<CurveWord> system = rel.filling;
    if (!alexander_names.empty()) {
      system.clear();
      for (const std::string& n : alexander_names)
        system.push_back(rel.curves->at(n));
    }
    if (!system.empty()) {
      Certificate ac = alexander_check(rel.surface, lhs, rhs, system);
      alexander = ac.pass;
      std::cout << "alexander: " << (alexander ? "pass" : "FAIL") << "\n";
      if (transcript)
        for (const GeneratorComparison& row : ac.rows)
          std::cout << "  " << row.generator << " -> " << row.lhs_image
                    << (row.equal ? "  ~  " : "  !~  ") << row.rhs_image << "\n";
    }
  }
  if (rel.capped)
    std::cout << "capped pushforward: twists along capped boundaries are "
                 "trivial in the closed mapping class group\n";
  bool pass = oracle && screen && pi1 && alexander;
  std::cout << "MACHINE entry=" << name << " oracle=" << oracle
            << " screen=" << screen << " pi1=" << pi1
            << " alexander=" << alexander << " pass=" << pass << "\n";
  return pass ? kPass : kFail;
}

int cmd_derive(const Catalog& cat, const std::string& name, int genus,
               bool transcript) {
  const CatalogEntry& e = cat.at(name);
  DerivationScript script = parse_script(e.dir + "/script.txt");
  std::vector<int> genera = genus > 0 ? std::vector<int>{genus} : script.genus;
  bool all = true;
  for (int g : genera) {
    DerivationRun run = run_derivation(cat, e, g);
    if (transcript)
      for (const std::string& l : run.log) std::cout << "  " << l << "\n";
    Transcript ex = symbolic_expand(run.result);
    if (transcript)
      for (const std::string& s : ex.steps) std::cout << "  " << s << "\n";
    bool ok = ex.matches;
    for (const CommutatorPair& p : run.result.pairs)
      ok = ok && p.phi.certificate.exists;
    all = all && ok;
    std::cout << "derive " << name << " g=" << g << ": h=" << run.result.h()
              << " n=" << run.result.n() << " positive=["
              << format_twist_word(run.result.positive_part)
              << "] connectivity="
              << (run.result.pairs.empty() ||
                          run.result.pairs[0].phi.certificate.exists
                      ? "pass"
                      : "FAIL")
              << " expand=" << (ex.matches ? "pass" : "FAIL") << "\n";
  }
  std::cout << "MACHINE entry=" << name << " pass=" << all << "\n";
  return all ? kPass : kFail;
}

int cmd_cut(const Catalog& cat, const std::string& name, int genus,
            const std::vector<std::string>& curve_names) {
  LoadedRelation rel = load_relation_entry(cat.at(name));
  SurfacePtr surface = rel.surface;
  std::vector<CurveWord> system;
  if (genus > 0) {
    EmbeddingMap base = close_up(rel.surface, 0);
    int extra = genus - base.host->genus();
    if (extra < 0) throw Error("genus below the minimal closed host");
    EmbeddingMap em = close_up(rel.surface, extra);
    surface = em.host;
    for (const std::string& n : curve_names)
      system.push_back(push_curve(em, rel.curves->at(n)));
  } else {
    for (const std::string& n : curve_names)
      system.push_back(rel.curves->at(n));
  }
  CutReport rep = cut_along(surface, system);
  std::cout << "== cut " << name;
  if (genus > 0) std::cout << " (closed host genus " << genus << ")";
  std::cout << " along";
  for (const std::string& n : curve_names) std::cout << " " << n;
  std::cout << " ==\n";
  for (const CutComponent& c : rep.components)
    std::cout << "component: genus " << c.genus << ", " << c.boundary_count
              << " boundary components\n";
  std::cout << "connected: " << (rep.connected() ? "true" : "false") << "\n";
  std::cout << "MACHINE entry=" << name << " components="
            << rep.components.size() << "\n";
  return kPass;
}

int cmd_bounds(int g, int h) {
  BoundsEntry b = bounds_lookup(g, h);
  std::cout << "N(" << g << "," << h << "): " << b.lower << " <= N <= "
            << b.upper << "\n";
  for (const std::string& s : b.sources) std::cout << "  " << s << "\n";
  std::cout << "MACHINE g=" << g << " h=" << h << " lower=" << b.lower
            << " upper=" << b.upper << "\n";
  return kPass;
}

int cmd_invariants(const Catalog& cat, const std::string& name) {
  MonodromyFactorization mf = build_factorization(cat, cat.at(name));
  FibrationInvariants inv = invariants(mf);
  std::cout << "== invariants " << name << " ==\n";
  std::cout << "fiber genus: " << mf.fiber_genus << "\n";
  std::cout << "base genus: " << mf.base_genus << "\n";
  std::cout << "n: " << inv.n << "\n";
  std::cout << "euler: " << inv.euler << "\n";
  std::cout << "reducible: " << inv.reducible_count << "\n";
  std::cout << "irreducible: " << inv.irreducible_count << "\n";
  std::cout << "relatively minimal: " << (mf.relatively_minimal ? "yes" : "no")
            << "\n";
  std::cout << "MACHINE entry=" << name << " n=" << inv.n << " e=" << inv.euler
            << " red=" << inv.reducible_count << "\n";
  return kPass;
}

int cmd_catalog_list(const Catalog& cat) {
  for (const CatalogEntry& e : cat.entries())
    std::cout << e.name << "  (" << e.kind << ")\n";
  return kPass;
}

int cmd_selftest(const Catalog& cat) {
  bool all = true;
  for (const CatalogEntry& e : cat.entries()) {
    try {
      if (e.kind == "relation") {
        int rc = cmd_verify(cat, e.name, {}, false, false);
        all = all && rc == kPass;
      } else if (e.kind == "derivation") {
        int rc = cmd_derive(cat, e.name, 0, false);
        all = all && rc == kPass;
      } else if (e.kind == "factorization") {
        cmd_invariants(cat, e.name);
      }
    } catch (const Error& err) {
      std::cout << "selftest " << e.name << " FAILED: " << err.what() << "\n";
      all = false;
    }
  }
  std::cout << "MACHINE selftest pass=" << all << "\n";
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mapping class group relation calculator"};
  app.require_subcommand(1);
  std::string data_dir = "data";
  app.add_option("--data", data_dir, "catalog directory");

  std::string name;
  std::vector<std::string> alexander_names;
  bool screen_only = false, transcript = false;
  int genus = 0, g = 0, h = 0;
  std::vector<std::string> cut_curves;

  CLI::App* verify = app.add_subcommand("verify", "verify a catalog relation");
  verify->add_option("entry", name)->required();
  verify->add_option("--alexander", alexander_names,
                     "filling system curve names");
  verify->add_flag("--screen-only", screen_only);
  verify->add_flag("--transcript", transcript);

  CLI::App* derive = app.add_subcommand("derive", "replay a rewriting script");
  derive->add_option("entry", name)->required();
  derive->add_option("--genus", genus, "single closed host genus");
  derive->add_flag("--transcript", transcript);

  CLI::App* cut = app.add_subcommand("cut", "cut a surface along curves");
  cut->add_option("entry", name)->required();
  cut->add_option("curves", cut_curves)->required();
  cut->add_option("--genus", genus, "cut the closed genus-g host instead");

  CLI::App* bounds = app.add_subcommand("bounds", "bounds on N(g,h)");
  bounds->add_option("fiber-genus", g)->required();
  bounds->add_option("base-genus", h)->required();

  CLI::App* inv = app.add_subcommand("invariants", "fibration invariants");
  inv->add_option("entry", name)->required();

  CLI::App* catalog = app.add_subcommand("catalog", "catalog operations");
  CLI::App* list = catalog->add_subcommand("list", "list entries");

  CLI::App* selftest = app.add_subcommand("selftest", "run the full catalog");

  CLI11_PARSE(app, argc, argv);
  try {
    if (bounds->parsed()) return cmd_bounds(g, h);
    tc::Catalog cat(data_dir);
    if (verify->parsed())
      return cmd_verify(cat, name, alexander_names, screen_only, transcript);
    if (derive->parsed()) return cmd_derive(cat, name, genus, transcript);
    if (cut->parsed()) return cmd_cut(cat, name, genus, cut_curves);
    if (inv->parsed()) return cmd_invariants(cat, name);
    if (catalog->parsed() && list->parsed()) return cmd_catalog_list(cat);
    if (selftest->parsed()) return cmd_selftest(cat);
  } catch (const tc::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
