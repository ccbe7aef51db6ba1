#include "twistcalc/embedding.hpp"

#include <algorithm>

#include "twistcalc/intersection.hpp"

namespace tc {

EmbeddingMap embed(SurfacePtr sub, SurfacePtr host,
                   const std::map<std::string, std::string>& by_label) {
  if (!sub || !host) throw Error("embed: null surface");
  EmbeddingMap m;
  m.sub = std::move(sub);
  m.host = std::move(host);
  const RibbonGraph& rs = m.sub->ribbon();
  const RibbonGraph& rh = m.host->ribbon();
  std::vector<bool> used(static_cast<std::size_t>(rh.edge_count()), false);
  for (int e = 0; e < rs.edge_count(); ++e) {
    const std::string& label = rs.edge_labels[static_cast<std::size_t>(e)];
    auto it = by_label.find(label);
    const std::string& target = it == by_label.end() ? label : it->second;
    int he = rh.label_index(target);
    if (he < 0) throw Error("embed: host lacks edge '" + target + "'");
    if (used[static_cast<std::size_t>(he)])
      throw Error("embed: edge injection not injective at '" + target + "'");
    used[static_cast<std::size_t>(he)] = true;
    m.edge_injection[e] = he;
  }
  // the host vertex order, restricted to image half-edges, must be a cyclic
  // rotation of the sub vertex order
  std::vector<HalfEdge> expect;
  for (HalfEdge h : rs.vertex_orders[0])
    expect.push_back(static_cast<HalfEdge>(2 * m.edge_injection[edge_of(h)] + (h & 1)));
  std::vector<HalfEdge> got;
  for (HalfEdge h : rh.vertex_orders[0])
    if (used[static_cast<std::size_t>(edge_of(h))]) got.push_back(h);
  if (got.size() != expect.size())
    throw StructureError("embed: internal half-edge count mismatch");
  bool match = false;
  for (std::size_t r = 0; r < got.size() && !match; ++r) {
    match = true;
    for (std::size_t i = 0; i < got.size(); ++i)
      if (got[(r + i) % got.size()] != expect[i]) {
        match = false;
        break;
      }
  }
  if (!match)
    throw Error("embed: injection does not preserve the cyclic order");
  return m;
}

FreeWord push_word(const EmbeddingMap& m, const FreeWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    int e = (l > 0 ? l : -l) - 1;
    auto it = m.edge_injection.find(e);
    if (it == m.edge_injection.end())
      throw Error("push_word: letter outside the embedded surface");
    out.push_back(l > 0 ? it->second + 1 : -(it->second + 1));
  }
  return FreeWord(std::move(out));
}

CurveWord push_curve(const EmbeddingMap& m, const CurveWord& c) {
  if (c.surface.get() != m.sub.get() && !c.surface->same_as(*m.sub))
    throw Error("push_curve: curve is not on the embedded surface");
  CurveWord out(m.host, push_word(m, c.word), c.name);
  if (c.embedded_certified) out = certify_embedded(out);
  return out;
}

namespace {

void check_fresh_label(const RibbonGraph& r, const std::string& label) {
  if (r.label_index(label) >= 0)
    throw Error("close_up: label '" + label + "' already in use");
}

}  // namespace

EmbeddingMap close_up(SurfacePtr sub, int extra_handles) {
  if (!sub) throw Error("close_up: null surface");
  if (extra_handles < 0) throw Error("close_up: negative handle count");
  if (!sub->caps().empty())
    throw Error("close_up: start from the bordered model");
  RibbonGraph r = sub->ribbon();
  Surface cur = Surface::analyze(r);
  int joins = 0;
  while (cur.bordered_boundary_count() > 1) {
    // join the boundary through the gap after the last half-edge to the
    // first gap on a different boundary
    int last = static_cast<int>(r.vertex_orders[0].size()) - 1;
    int cycle0 = cur.boundary_of_gap(last);
    int p = -1;
    for (int i = 0; i <= last; ++i)
      if (cur.boundary_of_gap(i) != cycle0) {
        p = i;
        break;
      }
    if (p < 0) throw StructureError("close_up: internal gap scan failed");
    std::string label = "f" + std::to_string(++joins);
    check_fresh_label(r, label);
    HalfEdge fwd = static_cast<HalfEdge>(2 * r.edge_count());
    r.edge_labels.push_back(label);
    auto& order = r.vertex_orders[0];
    order.insert(order.begin() + p + 1, fwd);
    order.push_back(partner(fwd));
    cur = Surface::analyze(r);
  }
  for (int hnd = 1; hnd <= extra_handles; ++hnd) {
    std::string ul = "u" + std::to_string(hnd), vl = "v" + std::to_string(hnd);
    check_fresh_label(r, ul);
    check_fresh_label(r, vl);
    HalfEdge u = static_cast<HalfEdge>(2 * r.edge_count());
    r.edge_labels.push_back(ul);
    HalfEdge v = static_cast<HalfEdge>(2 * r.edge_count());
    r.edge_labels.push_back(vl);
    auto& order = r.vertex_orders[0];
    order.push_back(u);
    order.push_back(v);
    order.push_back(partner(u));
    order.push_back(partner(v));
  }
  auto host = std::make_shared<Surface>(Surface::analyze(r, {0}));
  if (host->bordered_boundary_count() != 1)
    throw StructureError("close_up: host boundary did not merge");
  return embed(std::move(sub), std::move(host), {});
}

}  // namespace tc
