#include "twistcalc/ribbon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace tc {

void RibbonGraph::validate() const {
  int n = edge_count();
  std::vector<int> seen(static_cast<std::size_t>(2 * n), 0);
  for (const auto& order : vertex_orders) {
    for (HalfEdge h : order) {
      if (h < 0 || h >= 2 * n)
        throw StructureError("half-edge index out of range");
      ++seen[static_cast<std::size_t>(h)];
    }
  }
  for (int h = 0; h < 2 * n; ++h) {
    if (seen[static_cast<std::size_t>(h)] != 1)
      throw StructureError("half-edge " + edge_labels[static_cast<std::size_t>(h / 2)] +
                           (h & 1 ? "'" : "") + " must appear exactly once");
  }
}

int RibbonGraph::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < edge_labels.size(); ++i)
    if (edge_labels[i] == label) return static_cast<int>(i);
  return -1;
}

RibbonGraph RibbonGraph::reduced_to_one_vertex() const {
  RibbonGraph g = *this;
  g.validate();
  while (g.vertex_count() > 1) {
    // locate a non-loop edge
    std::vector<int> vertex_of(static_cast<std::size_t>(2 * g.edge_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
      for (HalfEdge h : g.vertex_orders[static_cast<std::size_t>(v)])
        vertex_of[static_cast<std::size_t>(h)] = v;
    int contract = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (vertex_of[static_cast<std::size_t>(2 * e)] !=
          vertex_of[static_cast<std::size_t>(2 * e + 1)]) {
        contract = e;
        break;
      }
    }
    if (contract < 0)
      throw StructureError("ribbon graph is disconnected");
    HalfEdge hu = static_cast<HalfEdge>(2 * contract);
    int u = vertex_of[static_cast<std::size_t>(hu)];
    int v = vertex_of[static_cast<std::size_t>(partner(hu))];
    auto& ou = g.vertex_orders[static_cast<std::size_t>(u)];
    auto& ov = g.vertex_orders[static_cast<std::size_t>(v)];
    auto iu = std::find(ou.begin(), ou.end(), hu);
    auto iv = std::find(ov.begin(), ov.end(), partner(hu));
    // splice v's order (rotated to start after partner(hu)) into u at hu
    std::vector<HalfEdge> spliced;
    spliced.insert(spliced.end(), ou.begin(), iu);
    std::size_t pv = static_cast<std::size_t>(iv - ov.begin());
    for (std::size_t i = 1; i < ov.size(); ++i)
      spliced.push_back(ov[(pv + i) % ov.size()]);
    spliced.insert(spliced.end(), iu + 1, ou.end());
    g.vertex_orders[static_cast<std::size_t>(u)] = std::move(spliced);
    g.vertex_orders.erase(g.vertex_orders.begin() + v);
    // drop edge `contract`, shifting the encoding of higher edges down
    g.edge_labels.erase(g.edge_labels.begin() + contract);
    for (auto& order : g.vertex_orders)
      for (HalfEdge& h : order)
        if (edge_of(h) > contract) h -= 2;
  }
  g.validate();
  return g;
}

Surface Surface::analyze(const RibbonGraph& input, std::set<int> caps) {
  RibbonGraph ribbon =
      input.vertex_count() == 1 ? input : input.reduced_to_one_vertex();
  ribbon.validate();
  if (ribbon.vertex_count() != 1)
    throw StructureError("surface model requires a connected ribbon graph");

  Surface s;
  s.ribbon_ = ribbon;
  const auto& order = ribbon.vertex_orders[0];
  int n2 = static_cast<int>(order.size());

  std::vector<int> pos(static_cast<std::size_t>(n2), 0);
  for (int i = 0; i < n2; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  auto next = [&](HalfEdge h) {
    int p = pos[static_cast<std::size_t>(partner(h))];
    return order[static_cast<std::size_t>((p + 1) % n2)];
  };

  // trace boundary cycles of the thickened graph
  std::vector<int> cycle_of(static_cast<std::size_t>(std::max(n2, 1)), -1);
  for (int start = 0; start < n2; ++start) {
    HalfEdge h0 = order[static_cast<std::size_t>(start)];
    if (cycle_of[static_cast<std::size_t>(h0)] >= 0) continue;
    std::vector<HalfEdge> cycle;
    HalfEdge h = h0;
    do {
      cycle_of[static_cast<std::size_t>(h)] = static_cast<int>(s.cycles_.size());
      cycle.push_back(h);
      h = next(h);
    } while (h != h0);
    s.cycles_.push_back(std::move(cycle));
  }
  if (n2 == 0) s.cycles_.push_back({});  // disk: lone vertex

  // gap after position p is crossed between arriving at order[p] and
  // leaving along next(partner(order[p])) -- i.e. on the cycle of
  // partner(order[p]).
  s.gap_boundary_.assign(static_cast<std::size_t>(std::max(n2, 1)), 0);
  for (int p = 0; p < n2; ++p)
    s.gap_boundary_[static_cast<std::size_t>(p)] =
        cycle_of[static_cast<std::size_t>(partner(order[static_cast<std::size_t>(p)]))];
  s.base_boundary_ = s.gap_boundary_.back();

  // rotate each cycle to start at its smallest half-edge, except the base
  // boundary which starts right after the basepoint gap.
  for (std::size_t c = 0; c < s.cycles_.size(); ++c) {
    auto& cyc = s.cycles_[c];
    if (cyc.empty()) continue;
    std::size_t at = 0;
    if (static_cast<int>(c) == s.base_boundary_ && n2 > 0) {
      HalfEdge after_base = next(partner(order[static_cast<std::size_t>(n2 - 1)]));
      at = static_cast<std::size_t>(
          std::find(cyc.begin(), cyc.end(), after_base) - cyc.begin());
    } else {
      at = static_cast<std::size_t>(
          std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    }
    std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(at), cyc.end());
  }

  for (const auto& cyc : s.cycles_) {
    FreeWord w;
    for (HalfEdge h : cyc) w.append(letter_of(h));
    s.words_.push_back(std::move(w));
  }

  int k = static_cast<int>(s.cycles_.size());
  int chi = 1 - ribbon.edge_count();
  if ((2 - chi - k) % 2 != 0)
    throw StructureError("inconsistent euler characteristic");
  s.genus_ = (2 - chi - k) / 2;
  if (s.genus_ < 0) throw StructureError("negative genus: bad ribbon data");

  for (int c : caps) {
    if (c < 0 || c >= k)
      throw StructureError("cap refers to missing boundary component " +
                           std::to_string(c));
  }
  s.caps_ = std::move(caps);
  return s;
}

int Surface::boundary_count() const {
  return static_cast<int>(cycles_.size() - caps_.size());
}

bool Surface::same_as(const Surface& other) const {
  return ribbon_.edge_labels == other.ribbon_.edge_labels &&
         ribbon_.vertex_orders == other.ribbon_.vertex_orders &&
         caps_ == other.caps_;
}

namespace {

bool parse_half_edge_token(const RibbonGraph& g, const std::string& tok,
                           HalfEdge& out) {
  std::string name = tok;
  bool inv = false;
  if (!name.empty() && name.back() == '\'') {
    inv = true;
    name.pop_back();
  }
  int e = g.label_index(name);
  if (e < 0) return false;
  out = static_cast<HalfEdge>(2 * e + (inv ? 1 : 0));
  return true;
}

}  // namespace

Surface parse_surface(std::istream& in) {
  RibbonGraph g;
  std::set<int> caps;
  std::string line;
  int lineno = 0;
  bool have_edges = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "edges:") {
      if (have_edges) throw ParseError(lineno, "duplicate edges: line");
      std::string tok;
      while (ls >> tok) {
        if (g.label_index(tok) >= 0)
          throw ParseError(lineno, "duplicate edge label '" + tok + "'");
        g.edge_labels.push_back(tok);
      }
      have_edges = true;
    } else if (key == "vertex:") {
      if (!have_edges)
        throw ParseError(lineno, "vertex: line before edges: line");
      std::vector<HalfEdge> order;
      std::string tok;
      while (ls >> tok) {
        HalfEdge h;
        if (!parse_half_edge_token(g, tok, h))
          throw ParseError(lineno, "undeclared edge label '" + tok + "'");
        order.push_back(h);
      }
      g.vertex_orders.push_back(std::move(order));
    } else if (key == "cap:") {
      int c;
      if (!(ls >> c)) throw ParseError(lineno, "cap: expects a boundary index");
      caps.insert(c);
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!have_edges) throw ParseError(lineno, "missing edges: line");
  if (g.vertex_orders.empty())
    throw ParseError(lineno, "missing vertex: line");
  try {
    g.validate();
    return Surface::analyze(g, caps);
  } catch (const StructureError& e) {
    throw ParseError(lineno, e.what());
  }
}

Surface parse_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open surface file: " + path);
  return parse_surface(in);
}

}  // namespace tc
