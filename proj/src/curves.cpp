#include "twistcalc/curves.hpp"

#include <fstream>
#include <sstream>

namespace tc {

CurveWord::CurveWord(SurfacePtr s, FreeWord w, std::string n)
    : surface(std::move(s)), word(w.cyclically_reduced()), name(std::move(n)) {
  if (word.empty())
    throw Error("curve '" + name + "': the empty word is not a curve");
}

bool CurveWord::same_surface(const CurveWord& other) const {
  return surface == other.surface ||
         (surface && other.surface && surface->same_as(*other.surface));
}

bool CurveWord::parallel_to(const CurveWord& other) const {
  if (!same_surface(other)) return false;
  FreeWord mine = word.conjugacy_normal_form();
  return mine == other.word.conjugacy_normal_form() ||
         mine == other.word.inverse().conjugacy_normal_form();
}

void CurveSet::add(CurveWord c) {
  if (curves_.count(c.name))
    throw Error("duplicate curve name '" + c.name + "'");
  order_.push_back(c.name);
  curves_.emplace(c.name, std::move(c));
}

bool CurveSet::contains(const std::string& name) const {
  return curves_.count(name) > 0;
}

const CurveWord& CurveSet::at(const std::string& name) const {
  auto it = curves_.find(name);
  if (it == curves_.end()) throw Error("unknown curve '" + name + "'");
  return it->second;
}

FreeWord parse_word(const std::string& text, const Surface& surface) {
  std::istringstream ls(text);
  std::string tok;
  FreeWord w;
  while (ls >> tok) {
    bool inv = false;
    if (tok.size() > 1 && tok.back() == '\'') {
      inv = true;
      tok.pop_back();
    }
    int e = surface.ribbon().label_index(tok);
    if (e < 0) throw Error("undeclared edge label '" + tok + "'");
    w.append(inv ? -(e + 1) : (e + 1));
  }
  return w;
}

std::string format_word(const FreeWord& w, const Surface& surface) {
  std::string s;
  for (Letter l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += surface.ribbon().edge_labels[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l < 0) s += '\'';
  }
  return s.empty() ? "1" : s;
}

CurveSet parse_curves(std::istream& in, SurfacePtr surface) {
  CurveSet set(surface);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(lineno, "expected 'name = word'");
    std::istringstream ns(line.substr(0, eq));
    std::string name, extra;
    if (!(ns >> name) || (ns >> extra))
      throw ParseError(lineno, "expected a single curve name before '='");
    try {
      FreeWord w = parse_word(line.substr(eq + 1), *surface);
      if (w.empty())
        throw Error("the empty word is not a curve");
      set.add(CurveWord(surface, std::move(w), name));
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return set;
}

CurveSet parse_curves_file(const std::string& path, SurfacePtr surface) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open curve file: " + path);
  return parse_curves(in, std::move(surface));
}

}  // namespace tc
