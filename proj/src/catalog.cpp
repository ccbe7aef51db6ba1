#include "twistcalc/catalog.hpp"

#include <fstream>
#include <sstream>

#include "twistcalc/cutting.hpp"
#include "twistcalc/homology.hpp"
#include "twistcalc/intersection.hpp"

namespace tc {

namespace {

std::string strip(std::string s) {
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// "name = value" split; returns false if no '='
bool keyval(const std::string& line, std::string* key, std::string* val) {
  auto eq = line.find('=');
  if (eq == std::string::npos) return false;
  *key = strip(line.substr(0, eq));
  *val = strip(line.substr(eq + 1));
  return true;
}

TwistWord parse_letters(const std::string& text, const CurveSet& curves) {
  TwistWord w;
  for (const std::string& tok : tokens(text)) {
    bool inv = tok.size() > 1 && tok[0] == '~';
    const std::string name = inv ? tok.substr(1) : tok;
    w.push_back(TwistLetter::explicit_twist(curves.at(name), inv ? -1 : 1));
  }
  return w;
}

}  // namespace

Catalog::Catalog(const std::string& data_dir) {
  std::ifstream in(data_dir + "/catalog.txt");
  if (!in) throw Error("cannot open " + data_dir + "/catalog.txt");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    auto toks = tokens(line);
    if (toks.size() != 2)
      throw ParseError(lineno, "expected '<name> <kind>'");
    entries_.push_back({toks[0], toks[1], data_dir + "/" + toks[0]});
  }
}

bool Catalog::contains(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& Catalog::at(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw Error("no catalog entry named '" + name + "'");
}

LoadedRelation load_relation_entry(const CatalogEntry& e) {
  if (e.kind != "relation")
    throw Error("entry '" + e.name + "' is not a relation entry");
  LoadedRelation out;
  Surface parsed = parse_surface_file(e.dir + "/surface.txt");
  if (!parsed.caps().empty()) {
    out.capped = std::make_shared<Surface>(parsed);
    out.surface = std::make_shared<Surface>(Surface::analyze(parsed.ribbon()));
  } else {
    out.surface = std::make_shared<Surface>(std::move(parsed));
  }
  out.curves = std::make_shared<CurveSet>(
      parse_curves_file(e.dir + "/curves.txt", out.surface));
  CurveSet certified(out.surface);
  for (const std::string& n : out.curves->names()) {
    CurveWord c = certify_embedded(out.curves->at(n));
    if (!c.embedded_certified)
      throw Error("catalog curve '" + n + "' is not embedded");
    certified.add(std::move(c));
  }
  *out.curves = std::move(certified);

  std::ifstream rin(e.dir + "/relation.txt");
  if (!rin) throw Error("cannot open " + e.dir + "/relation.txt");
  out.relation.surface = out.surface;
  out.relation.name = e.name;
  std::string line;
  int lineno = 0;
  while (std::getline(rin, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    std::string key, val;
    if (!keyval(line, &key, &val))
      throw ParseError(lineno, "expected 'lhs|rhs|filling = ...'");
    if (key == "lhs")
      out.relation.lhs = parse_letters(val, *out.curves);
    else if (key == "rhs")
      out.relation.rhs = parse_letters(val, *out.curves);
    else if (key == "filling")
      for (const std::string& n : tokens(val))
        out.filling.push_back(out.curves->at(n));
    else
      throw ParseError(lineno, "unknown relation key '" + key + "'");
  }
  if (out.relation.rhs.empty())
    throw Error("relation '" + e.name + "' has an empty rhs");
  return out;
}

std::vector<CheckResult> run_cross_checks(const CatalogEntry& e,
                                          const LoadedRelation& r) {
  std::ifstream in(e.dir + "/checks.txt");
  if (!in) throw Error("cannot open " + e.dir + "/checks.txt");
  std::vector<CheckResult> results;
  HomologyLattice lattice(r.surface);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    std::string key, val;
    if (!keyval(line, &key, &val))
      throw ParseError(lineno, "expected '<check> = <expected>'");
    auto head = tokens(key);
    if (head.empty()) throw ParseError(lineno, "empty check");
    CheckResult res;
    res.text = line;
    const std::string& op = head[0];
    try {
      if (op == "separating" && head.size() == 2) {
        bool got = is_separating(r.surface, r.curves->at(head[1]));
        res.pass = (val == (got ? "true" : "false"));
        res.detail = got ? "separating" : "non-separating";
      } else if (op == "intersect" && head.size() == 3) {
        int got = geometric_intersection(r.curves->at(head[1]),
                                         r.curves->at(head[2]));
        res.pass = (std::to_string(got) == val);
        res.detail = "i = " + std::to_string(got);
      } else if (op == "class" && head.size() == 2) {
        IntVec got = lattice.homology_class(r.curves->at(head[1]));
        auto want_toks = tokens(val);
        bool same = want_toks.size() == got.size();
        bool neg = same;
        for (std::size_t i = 0; same && i < got.size(); ++i)
          if (Int(want_toks[i]) != got[i]) same = false;
        for (std::size_t i = 0; neg && i < got.size(); ++i)
          if (Int(want_toks[i]) != -got[i]) neg = false;
        res.pass = same || neg;  // class is defined up to orientation
        std::ostringstream d;
        for (auto& x : got) d << x << " ";
        res.detail = "class = " + d.str();
      } else if (op == "filling") {
        std::vector<CurveWord> sys;
        for (std::size_t i = 1; i < head.size(); ++i)
          sys.push_back(r.curves->at(head[i]));
        bool got = is_filling(r.surface, sys);
        res.pass = (val == (got ? "true" : "false"));
        res.detail = got ? "filling" : "not filling";
      } else {
        throw ParseError(lineno, "unknown check '" + op + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      res.pass = false;
      res.detail = err.what();
    }
    results.push_back(std::move(res));
  }
  return results;
}

DerivationScript parse_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  DerivationScript s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    std::string key, val;
    if (keyval(line, &key, &val) && key == "base") {
      s.base = val;
    } else if (keyval(line, &key, &val) && key == "genus") {
      for (const std::string& t : tokens(val)) s.genus.push_back(std::stoi(t));
    } else {
      s.steps.push_back(line);
    }
  }
  if (s.base.empty()) throw Error(path + ": missing 'base = <entry>'");
  if (s.genus.empty()) throw Error(path + ": missing 'genus = <list>'");
  return s;
}

DerivationRun run_derivation(const Catalog& cat, const CatalogEntry& e,
                             int genus) {
  DerivationScript script = parse_script(e.dir + "/script.txt");
  LoadedRelation base = load_relation_entry(cat.at(script.base));
  EmbeddingMap closed0 = close_up(base.surface, 0);
  int extra = genus - closed0.host->genus();
  if (extra < 0)
    throw Error("genus " + std::to_string(genus) + " below the minimal host");
  EmbeddingMap em = close_up(base.surface, extra);
  // twists and slides are verified on the bordered lift of the host; the
  // result descends to the closed mapping class group by capping
  em.host = std::make_shared<Surface>(Surface::analyze(em.host->ribbon()));

  DerivationRun run;
  run.genus = genus;
  run.host = em.host;
  run.log.push_back("host: closed genus " + std::to_string(genus) +
                    ", bordered lift with one boundary");

  Relation rel;
  rel.surface = em.host;
  rel.name = e.name + "@g" + std::to_string(genus);
  auto push_letters = [&](const TwistWord& w) {
    TwistWord out;
    for (const TwistLetter& l : w) {
      if (l.formal) throw Error("cannot push a formal letter");
      out.push_back(TwistLetter::explicit_twist(push_curve(em, l.curve), l.sign));
    }
    return out;
  };
  rel.lhs = push_letters(base.relation.lhs);
  rel.rhs = push_letters(base.relation.rhs);
  run.log.push_back("pushed relation: " + format_twist_word(rel.lhs) + " = " +
                    format_twist_word(rel.rhs));

  bool packaged = false;
  for (const std::string& step : script.steps) {
    auto toks = tokens(step);
    if (toks.empty()) continue;
    if (toks[0] == "slide" && toks.size() == 3) {
      std::size_t i = std::stoul(toks[1]);
      bool left = toks[2] == "left";
      rel.rhs = slide(rel.rhs, i, left, &rel.primed);
    } else if (toks[0] == "transport") {
      rel = transport_left(rel,
                           std::vector<std::string>(toks.begin() + 1, toks.end()));
    } else if (toks[0] == "reorder" && toks.size() >= 2 && toks[1] == "lhs") {
      std::vector<std::size_t> perm;
      for (std::size_t i = 2; i < toks.size(); ++i)
        perm.push_back(std::stoul(toks[i]));
      rel.lhs = reorder_disjoint(rel.lhs, perm);
    } else if (toks[0] == "package") {
      std::vector<std::pair<std::string, std::string>> pairing;
      std::string rest = step.substr(7);
      std::istringstream ps(rest);
      std::string item;
      while (std::getline(ps, item, ')')) {
        auto open = item.find('(');
        if (open == std::string::npos) continue;
        std::string body = item.substr(open + 1);
        auto comma = body.find(',');
        if (comma == std::string::npos)
          throw Error("malformed package pair '" + item + "'");
        pairing.emplace_back(strip(body.substr(0, comma)),
                             strip(body.substr(comma + 1)));
      }
      run.result = package_commutator(rel, pairing);
      packaged = true;
    } else {
      throw Error("unknown script step '" + step + "'");
    }
    run.log.push_back(step + "  ->  " + format_twist_word(rel.lhs) + " = " +
                      format_twist_word(rel.rhs));
  }
  if (!packaged) throw Error("script ended without a package step");
  return run;
}

FactorizationSpec parse_factorization(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  FactorizationSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    std::string key, val;
    if (!keyval(line, &key, &val))
      throw ParseError(lineno, "expected 'key = value'");
    if (key == "relation")
      spec.relation = val;
    else if (key == "fiber_genus")
      spec.fiber_genus = std::stoi(val);
    else if (key == "base_genus")
      spec.base_genus = std::stoi(val);
    else
      throw ParseError(lineno, "unknown factorization key '" + key + "'");
  }
  if (spec.relation.empty()) throw Error(path + ": missing 'relation ='");
  return spec;
}

MonodromyFactorization build_factorization(const Catalog& cat,
                                           const CatalogEntry& e) {
  if (e.kind != "factorization")
    throw Error("entry '" + e.name + "' is not a factorization entry");
  FactorizationSpec spec = parse_factorization(e.dir + "/factorization.txt");
  if (spec.base_genus != 0)
    throw Error("factorization entries cover the h = 0 case; use derive for "
                "commutator bases");
  LoadedRelation rel = load_relation_entry(cat.at(spec.relation));
  CommutatorRelation cr;
  cr.surface = rel.surface;
  cr.positive_part = rel.relation.rhs;
  cr.pre_packaging_lhs = rel.relation.lhs;
  return from_commutator_relation(cr, spec.fiber_genus);
}

}  // namespace tc
