#include "twistcalc/cutting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "twistcalc/intersection.hpp"

namespace tc {

namespace {

using Big = boost::multiprecision::cpp_int;

// The cut complex: the vertex disk and every band rectangle become chord
// arrangements in a convex disk. Cells are the arrangement faces; cells are
// glued along "portal" intervals of the disk/band interface. Components,
// Euler characteristics and boundary circles of the cut surface are read off
// the glued complex. Exact homogeneous coordinates on a conic keep crossing
// orders along chords deterministic.

struct Vec3 {
  Big x, y, w;
};

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a.y * b.w - a.w * b.y, a.w * b.x - a.x * b.w, a.x * b.y - a.y * b.x};
}

struct Degenerate {};

struct SideTag {
  enum Kind { kPortal, kGap, kBandSide, kCut };
  Kind kind = kGap;
  int portal = -1;  // kPortal: global pairing id
  int cycle = -1;   // kGap / kBandSide: boundary cycle of the surface
  int curve = -1;   // kCut
  char lr = 0;      // kCut: side of the oriented curve
};

struct ChordSpec {
  int a = 0, b = 0;  // node indices, directed a -> b along the curve
  int curve = 0;
};

struct FacePoly {
  std::vector<SideTag> sides;  // counterclockwise
};

struct ArrangementResult {
  std::vector<FacePoly> faces;
  int crossings = 0;
};

// Smaller angle class first: upper half plane (including +x axis), then lower.
int half_of(const Big& x, const Big& y) {
  return (y < 0 || (y == 0 && x < 0)) ? 1 : 0;
}

ArrangementResult faces_attempt(int n, const std::vector<SideTag>& circle_tags,
                                const std::vector<ChordSpec>& chords,
                                long coef) {
  // node k at conic parameter t(k): strictly convex, counterclockwise
  std::vector<Vec3> vpt(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Big t = Big(k) + Big(coef) * Big(k) * Big(k);
    vpt[static_cast<std::size_t>(k)] = {1 - t * t, 2 * t, 1 + t * t};
  }

  int m = static_cast<int>(chords.size());
  auto in_open = [&](int x, int lo, int hi) {
    int d1 = ((x - lo) % n + n) % n;
    int d2 = ((hi - lo) % n + n) % n;
    return d1 > 0 && d1 < d2;
  };

  // crossing parameter along chord (a, b): X = lam * P_a + mu * P_b
  auto param = [&](const Vec3& x, int a, int b) {
    const Vec3& pa = vpt[static_cast<std::size_t>(a)];
    const Vec3& pb = vpt[static_cast<std::size_t>(b)];
    Vec3 c = cross3(pa, pb);
    Vec3 u = cross3(x, pb);
    Vec3 v = cross3(pa, x);
    Big cc = c.x, lam = u.x, mu = v.x;
    if (cc == 0) {
      cc = c.y, lam = u.y, mu = v.y;
    }
    if (cc == 0) {
      cc = c.w, lam = u.w, mu = v.w;
    }
    if (cc < 0) {
      lam = -lam;
      mu = -mu;
    }
    if (lam < 0) {
      lam = -lam;
      mu = -mu;
    }
    if (lam <= 0 || mu <= 0) throw StructureError("internal: crossing off chord");
    return std::pair<Big, Big>(std::move(lam), std::move(mu));
  };

  struct Hit {
    Big lam, mu;
    int vert;
  };
  std::vector<std::vector<Hit>> hits(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool alt = in_open(chords[static_cast<std::size_t>(j)].a,
                         chords[static_cast<std::size_t>(i)].a,
                         chords[static_cast<std::size_t>(i)].b) !=
                 in_open(chords[static_cast<std::size_t>(j)].b,
                         chords[static_cast<std::size_t>(i)].a,
                         chords[static_cast<std::size_t>(i)].b);
      if (!alt) continue;
      Vec3 li = cross3(vpt[static_cast<std::size_t>(chords[static_cast<std::size_t>(i)].a)],
                       vpt[static_cast<std::size_t>(chords[static_cast<std::size_t>(i)].b)]);
      Vec3 lj = cross3(vpt[static_cast<std::size_t>(chords[static_cast<std::size_t>(j)].a)],
                       vpt[static_cast<std::size_t>(chords[static_cast<std::size_t>(j)].b)]);
      Vec3 x = cross3(li, lj);
      if (x.w == 0) throw StructureError("internal: parallel chords");
      if (x.w < 0) x = {-x.x, -x.y, -x.w};
      int vert = static_cast<int>(vpt.size());
      auto [li_lam, li_mu] = param(x, chords[static_cast<std::size_t>(i)].a,
                                   chords[static_cast<std::size_t>(i)].b);
      auto [lj_lam, lj_mu] = param(x, chords[static_cast<std::size_t>(j)].a,
                                   chords[static_cast<std::size_t>(j)].b);
      vpt.push_back(x);
      hits[static_cast<std::size_t>(i)].push_back({std::move(li_lam), std::move(li_mu), vert});
      hits[static_cast<std::size_t>(j)].push_back({std::move(lj_lam), std::move(lj_mu), vert});
    }
  }
  int crossings = static_cast<int>(vpt.size()) - n;

  // directed edges come in twin pairs 2k, 2k+1
  struct DEdge {
    int from, to;
    bool circle;
    int idx;  // circle edge index or chord index
    bool fwd;
  };
  std::vector<DEdge> de;
  auto add_edge = [&](int u, int v, bool circle, int idx) {
    de.push_back({u, v, circle, idx, true});
    de.push_back({v, u, circle, idx, false});
  };
  for (int k = 0; k < n; ++k) add_edge(k, (k + 1) % n, true, k);
  for (int i = 0; i < m; ++i) {
    auto& hs = hits[static_cast<std::size_t>(i)];
    std::sort(hs.begin(), hs.end(), [](const Hit& a, const Hit& b) {
      Big l = a.mu * b.lam, r = b.mu * a.lam;
      if (l == r) throw Degenerate{};
      return l < r;
    });
    int prev = chords[static_cast<std::size_t>(i)].a;
    for (const Hit& h : hs) {
      add_edge(prev, h.vert, false, i);
      prev = h.vert;
    }
    add_edge(prev, chords[static_cast<std::size_t>(i)].b, false, i);
  }

  // counterclockwise rotation of outgoing edges at each vertex
  std::vector<std::vector<int>> rot(vpt.size());
  for (int id = 0; id < static_cast<int>(de.size()); ++id)
    rot[static_cast<std::size_t>(de[static_cast<std::size_t>(id)].from)].push_back(id);
  auto dir_of = [&](int id) {
    const DEdge& e = de[static_cast<std::size_t>(id)];
    const Vec3& a = vpt[static_cast<std::size_t>(e.from)];
    const Vec3& b = vpt[static_cast<std::size_t>(e.to)];
    return std::pair<Big, Big>(b.x * a.w - a.x * b.w, b.y * a.w - a.y * b.w);
  };
  for (auto& out : rot) {
    std::sort(out.begin(), out.end(), [&](int p, int q) {
      auto [px, py] = dir_of(p);
      auto [qx, qy] = dir_of(q);
      int hp = half_of(px, py), hq = half_of(qx, qy);
      if (hp != hq) return hp < hq;
      Big cr = px * qy - py * qx;
      if (cr == 0) throw Degenerate{};
      return cr > 0;
    });
  }
  std::vector<int> rot_pos(de.size());
  for (const auto& out : rot)
    for (std::size_t i = 0; i < out.size(); ++i)
      rot_pos[static_cast<std::size_t>(out[i])] = static_cast<int>(i);

  // faces on the left: orbits of h -> clockwise neighbour of twin(h)
  auto next_in_face = [&](int id) {
    int tw = id ^ 1;
    const auto& out = rot[static_cast<std::size_t>(de[static_cast<std::size_t>(tw)].from)];
    int d = static_cast<int>(out.size());
    return out[static_cast<std::size_t>((rot_pos[static_cast<std::size_t>(tw)] + d - 1) % d)];
  };
  std::vector<int> face_of(de.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (int id = 0; id < static_cast<int>(de.size()); ++id) {
    if (face_of[static_cast<std::size_t>(id)] >= 0) continue;
    int f = static_cast<int>(orbits.size());
    orbits.emplace_back();
    int cur = id;
    do {
      face_of[static_cast<std::size_t>(cur)] = f;
      orbits.back().push_back(cur);
      cur = next_in_face(cur);
    } while (cur != id);
  }
  int outer = face_of[1];  // twin of circle edge 0 runs clockwise
  for (int k = 0; k < n; ++k)
    if (face_of[static_cast<std::size_t>(2 * k + 1)] != outer)
      throw StructureError("internal: disconnected outer face");

  ArrangementResult res;
  res.crossings = crossings;
  for (int f = 0; f < static_cast<int>(orbits.size()); ++f) {
    if (f == outer) continue;
    FacePoly poly;
    for (int id : orbits[static_cast<std::size_t>(f)]) {
      const DEdge& e = de[static_cast<std::size_t>(id)];
      if (e.circle) {
        if (!e.fwd) throw StructureError("internal: clockwise interior face");
        poly.sides.push_back(circle_tags[static_cast<std::size_t>(e.idx)]);
      } else {
        SideTag t;
        t.kind = SideTag::kCut;
        t.curve = chords[static_cast<std::size_t>(e.idx)].curve;
        t.lr = e.fwd ? 'L' : 'R';
        poly.sides.push_back(t);
      }
    }
    res.faces.push_back(std::move(poly));
  }
  return res;
}

ArrangementResult build_faces(int n, const std::vector<SideTag>& circle_tags,
                              const std::vector<ChordSpec>& chords) {
  if (static_cast<int>(circle_tags.size()) != n)
    throw StructureError("internal: circle tag count");
  for (long coef : {0L, 1L, 3L, 7L, 17L, 41L}) {
    try {
      return faces_attempt(n, circle_tags, chords, coef);
    } catch (const Degenerate&) {
      continue;
    }
  }
  throw StructureError("internal: degenerate chord arrangement");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

struct Analysis {
  CutReport report;
  int crossings = 0;
};

Analysis analyze_cut(const SurfacePtr& surface,
                     const std::vector<CurveWord>& system,
                     bool allow_crossings) {
  if (!surface) throw Error("null surface");
  for (const CurveWord& c : system) {
    if (!c.surface || !c.surface->same_as(*surface))
      throw Error("curve '" + c.name + "' lives on a different surface");
    if (int s = self_intersection(c); s != 0)
      throw Error("curve '" + c.name + "' is not embedded (self-intersection " +
                  std::to_string(s) + ")");
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      if (system[i].parallel_to(system[j]))
        throw Error("curves '" + system[i].name + "' and '" + system[j].name +
                    "' are parallel copies of one class");
      if (!allow_crossings) {
        if (int g = geometric_intersection(system[i], system[j]); g != 0)
          throw Error("curves '" + system[i].name + "' and '" + system[j].name +
                      "' intersect (" + std::to_string(g) + " points)");
      }
    }
  }

  const Surface& surf = *surface;
  int rank = surf.rank();
  CurveDiskData data = disk_data(std::span<const CurveWord>(system));
  int n_strands = static_cast<int>(data.strands.size());

  std::vector<int> cycle_of(static_cast<std::size_t>(2 * rank), -1);
  for (std::size_t b = 0; b < surf.boundary_cycles().size(); ++b)
    for (HalfEdge h : surf.boundary_cycles()[b])
      cycle_of[static_cast<std::size_t>(h)] = static_cast<int>(b);

  // strand offsets: strand of curve ci at letter j has global index off[ci]+j
  std::vector<int> off(system.size() + 1, 0);
  for (std::size_t ci = 0; ci < system.size(); ++ci)
    off[ci + 1] = off[ci] + static_cast<int>(system[ci].word.size());

  // endpoints on each arc, counterclockwise by ray order
  struct End {
    int strand;
    bool fwdend;
  };
  std::vector<std::vector<End>> arc_ends(static_cast<std::size_t>(2 * rank));
  for (int s = 0; s < n_strands; ++s) {
    const DiskStrand& st = data.strands[static_cast<std::size_t>(s)];
    arc_ends[static_cast<std::size_t>(st.fwd_arc)].push_back({s, true});
    arc_ends[static_cast<std::size_t>(st.back_arc)].push_back({s, false});
  }
  auto seq_of = [&](const End& e) -> const TurnSeq& {
    const DiskStrand& st = data.strands[static_cast<std::size_t>(e.strand)];
    return e.fwdend ? st.fwd : st.back;
  };
  std::vector<std::array<int, 2>> arc_pos(static_cast<std::size_t>(n_strands));
  for (auto& ends : arc_ends) {
    std::sort(ends.begin(), ends.end(),
              [&](const End& a, const End& b) { return seq_of(a) < seq_of(b); });
    for (std::size_t i = 0; i + 1 < ends.size(); ++i)
      if (seq_of(ends[i]) == seq_of(ends[i + 1]))
        throw StructureError("internal: indistinguishable strand rays");
    for (std::size_t i = 0; i < ends.size(); ++i)
      arc_pos[static_cast<std::size_t>(ends[i].strand)][ends[i].fwdend ? 1 : 0] =
          static_cast<int>(i);
  }

  // global portal ids: interval j of arc h (j = 0..m, between successive ends)
  std::vector<int> portal_base(static_cast<std::size_t>(2 * rank), 0);
  int n_portals = 0;
  for (int h = 0; h < 2 * rank; ++h) {
    portal_base[static_cast<std::size_t>(h)] = n_portals;
    n_portals += static_cast<int>(arc_ends[static_cast<std::size_t>(h)].size()) + 1;
  }

  // main disk: corners, endpoints and gaps around the fat vertex
  const auto& order = surf.ribbon().vertex_orders[0];
  std::vector<std::array<int, 2>> disk_node(static_cast<std::size_t>(n_strands));
  std::vector<SideTag> disk_tags;  // tag of the edge entering each new node
  int n_nodes = 0;
  auto add_node = [&](const SideTag& entering) {
    disk_tags.push_back(entering);
    return n_nodes++;
  };
  auto portal_tag = [&](HalfEdge h, int interval) {
    SideTag t;
    t.kind = SideTag::kPortal;
    t.portal = portal_base[static_cast<std::size_t>(h)] + interval;
    return t;
  };
  SideTag pending;  // tag of the wrap edge into node 0 (set by last gap)
  for (std::size_t p = 0; p < order.size(); ++p) {
    HalfEdge h = order[p];
    SideTag gap_before;
    gap_before.kind = SideTag::kGap;
    gap_before.cycle = surf.boundary_of_gap(static_cast<int>((p + order.size() - 1) % order.size()));
    if (p == 0)
      pending = gap_before;  // becomes the closing wrap edge below
    add_node(p == 0 ? SideTag{} : gap_before);  // corner at the arc start
    const auto& ends = arc_ends[static_cast<std::size_t>(h)];
    for (std::size_t i = 0; i < ends.size(); ++i) {
      int node = add_node(portal_tag(h, static_cast<int>(i)));
      disk_node[static_cast<std::size_t>(ends[i].strand)][ends[i].fwdend ? 1 : 0] = node;
    }
    add_node(portal_tag(h, static_cast<int>(ends.size())));  // corner at arc end
  }
  // edge i runs node i -> i+1; its tag was recorded on node i+1, so shift
  std::vector<SideTag> circle_tags;
  for (int i = 1; i < n_nodes; ++i)
    circle_tags.push_back(disk_tags[static_cast<std::size_t>(i)]);
  circle_tags.push_back(pending);  // wrap: the basepoint-side gap

  std::vector<ChordSpec> disk_chords;
  for (int s = 0; s < n_strands; ++s)
    disk_chords.push_back({disk_node[static_cast<std::size_t>(s)][0],
                           disk_node[static_cast<std::size_t>(s)][1],
                           data.strands[static_cast<std::size_t>(s)].curve});

  std::vector<FacePoly> cells;
  int total_crossings = 0;
  {
    ArrangementResult disk = build_faces(n_nodes, circle_tags, disk_chords);
    total_crossings += disk.crossings;
    for (auto& f : disk.faces) cells.push_back(std::move(f));
  }

  // one rectangle per band, glued along the two wall arcs
  for (int e = 0; e < rank; ++e) {
    HalfEdge h = static_cast<HalfEdge>(2 * e), hb = partner(h);
    int m = static_cast<int>(arc_ends[static_cast<std::size_t>(h)].size());
    if (static_cast<int>(arc_ends[static_cast<std::size_t>(hb)].size()) != m)
      throw StructureError("internal: band wall mismatch");
    // counterclockwise: wall h reversed, free side, wall hb reversed, free side
    int bn = 2 * m + 4;
    std::vector<SideTag> btags(static_cast<std::size_t>(bn));
    auto band_wall_node = [&](HalfEdge wall, int pos) {
      int base = (wall == h) ? 1 : m + 3;
      return base + (m - 1 - pos);
    };
    for (int j = 0; j <= m; ++j) {
      // edge entering band node for interval j of each wall
      btags[static_cast<std::size_t>(m - j)] = portal_tag(h, j);
      btags[static_cast<std::size_t>(2 * m + 2 - j)] = portal_tag(hb, j);
    }
    SideTag s1;
    s1.kind = SideTag::kBandSide;
    s1.cycle = cycle_of[static_cast<std::size_t>(h)];
    btags[static_cast<std::size_t>(m + 1)] = s1;
    SideTag s2;
    s2.kind = SideTag::kBandSide;
    s2.cycle = cycle_of[static_cast<std::size_t>(hb)];
    btags[static_cast<std::size_t>(2 * m + 3)] = s2;

    std::vector<ChordSpec> passages;
    for (int s = 0; s < n_strands; ++s) {
      const DiskStrand& st = data.strands[static_cast<std::size_t>(s)];
      if (edge_of(st.fwd_arc) != e) continue;
      int ci = st.curve;
      int len = off[static_cast<std::size_t>(ci) + 1] - off[static_cast<std::size_t>(ci)];
      int snext = off[static_cast<std::size_t>(ci)] + (st.index + 1) % len;
      const DiskStrand& nx = data.strands[static_cast<std::size_t>(snext)];
      if (edge_of(nx.back_arc) != e || nx.back_arc != partner(st.fwd_arc))
        throw StructureError("internal: broken band passage");
      passages.push_back({band_wall_node(st.fwd_arc, arc_pos[static_cast<std::size_t>(s)][1]),
                          band_wall_node(nx.back_arc, arc_pos[static_cast<std::size_t>(snext)][0]),
                          ci});
    }
    ArrangementResult band = build_faces(bn, btags, passages);
    total_crossings += band.crossings;
    for (auto& f : band.faces) cells.push_back(std::move(f));
  }

  // portal pairing
  std::vector<std::vector<std::pair<int, int>>> at_portal(static_cast<std::size_t>(n_portals));
  for (int c = 0; c < static_cast<int>(cells.size()); ++c)
    for (int s = 0; s < static_cast<int>(cells[static_cast<std::size_t>(c)].sides.size()); ++s) {
      const SideTag& t = cells[static_cast<std::size_t>(c)].sides[static_cast<std::size_t>(s)];
      if (t.kind == SideTag::kPortal)
        at_portal[static_cast<std::size_t>(t.portal)].push_back({c, s});
    }
  std::vector<std::vector<std::pair<int, int>>> partner_of(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    partner_of[c].assign(cells[c].sides.size(), {-1, -1});
  for (const auto& pair : at_portal) {
    if (pair.size() != 2) throw StructureError("internal: unpaired portal");
    partner_of[static_cast<std::size_t>(pair[0].first)][static_cast<std::size_t>(pair[0].second)] =
        pair[1];
    partner_of[static_cast<std::size_t>(pair[1].first)][static_cast<std::size_t>(pair[1].second)] =
        pair[0];
  }

  UnionFind uf(cells.size());
  for (const auto& pair : at_portal) uf.unite(pair[0].first, pair[1].first);

  // boundary circles of the cut surface
  struct Circle {
    int component;
    std::set<int> cycles;
    std::set<std::pair<int, char>> cuts;
  };
  std::vector<Circle> circles;
  std::vector<std::vector<char>> seen(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) seen[c].assign(cells[c].sides.size(), 0);
  auto succ = [&](std::pair<int, int> cur) {
    auto [c, s] = cur;
    int len = static_cast<int>(cells[static_cast<std::size_t>(c)].sides.size());
    int j = (s + 1) % len;
    while (cells[static_cast<std::size_t>(c)].sides[static_cast<std::size_t>(j)].kind ==
           SideTag::kPortal) {
      auto [c2, s2] = partner_of[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
      c = c2;
      j = (s2 + 1) % static_cast<int>(cells[static_cast<std::size_t>(c)].sides.size());
    }
    return std::pair<int, int>(c, j);
  };
  for (std::size_t c0 = 0; c0 < cells.size(); ++c0) {
    for (std::size_t s0 = 0; s0 < cells[c0].sides.size(); ++s0) {
      if (seen[c0][s0] || cells[c0].sides[s0].kind == SideTag::kPortal) continue;
      Circle circ;
      circ.component = uf.find(static_cast<int>(c0));
      std::pair<int, int> cur(static_cast<int>(c0), static_cast<int>(s0));
      do {
        seen[static_cast<std::size_t>(cur.first)][static_cast<std::size_t>(cur.second)] = 1;
        const SideTag& t =
            cells[static_cast<std::size_t>(cur.first)].sides[static_cast<std::size_t>(cur.second)];
        if (t.kind == SideTag::kCut)
          circ.cuts.insert({t.curve, t.lr});
        else
          circ.cycles.insert(t.cycle);
        cur = succ(cur);
      } while (cur != std::pair<int, int>(static_cast<int>(c0), static_cast<int>(s0)));
      if (!circ.cycles.empty() && (circ.cycles.size() > 1 || !circ.cuts.empty()))
        throw StructureError("internal: boundary circle mixes cycles");
      if (!allow_crossings && circ.cycles.empty() && circ.cuts.size() != 1)
        throw StructureError("internal: side circle mixes labels");
      circles.push_back(std::move(circ));
    }
  }

  // assemble components in root-discovery order
  std::map<int, int> comp_index;
  std::vector<int> comp_cells, comp_portals;
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
    int r = uf.find(c);
    if (!comp_index.count(r)) {
      comp_index[r] = static_cast<int>(comp_index.size());
      comp_cells.push_back(0);
      comp_portals.push_back(0);
    }
    ++comp_cells[static_cast<std::size_t>(comp_index[r])];
  }
  for (const auto& pair : at_portal)
    ++comp_portals[static_cast<std::size_t>(comp_index[uf.find(pair[0].first)])];

  int n_comp = static_cast<int>(comp_index.size());
  std::vector<int> chi(static_cast<std::size_t>(n_comp)), bpre(static_cast<std::size_t>(n_comp), 0);
  for (int i = 0; i < n_comp; ++i)
    chi[static_cast<std::size_t>(i)] = comp_cells[static_cast<std::size_t>(i)] -
                                       comp_portals[static_cast<std::size_t>(i)];

  Analysis out;
  out.crossings = total_crossings;
  out.report.components.assign(static_cast<std::size_t>(n_comp), {});
  std::set<int> cycles_seen;
  for (const Circle& circ : circles) {
    int i = comp_index[uf.find(circ.component)];
    CutComponent& comp = out.report.components[static_cast<std::size_t>(i)];
    ++bpre[static_cast<std::size_t>(i)];
    if (!circ.cycles.empty()) {
      int cyc = *circ.cycles.begin();
      if (!cycles_seen.insert(cyc).second)
        throw StructureError("internal: boundary cycle traced twice");
      if (surf.is_capped(cyc)) {
        ++comp.caps_absorbed;
      } else {
        comp.original_boundaries.push_back(cyc);
      }
    }
    for (const auto& cut : circ.cuts) {
      if (std::find(comp.curve_sides.begin(), comp.curve_sides.end(), cut) ==
          comp.curve_sides.end())
        comp.curve_sides.push_back(cut);
    }
  }
  if (static_cast<int>(cycles_seen.size()) != surf.bordered_boundary_count())
    throw StructureError("internal: lost boundary cycle");

  int chi_total = 0;
  for (int i = 0; i < n_comp; ++i) {
    CutComponent& comp = out.report.components[static_cast<std::size_t>(i)];
    int x = chi[static_cast<std::size_t>(i)], b = bpre[static_cast<std::size_t>(i)];
    chi_total += x;
    if ((2 - x - b) % 2 != 0 || 2 - x - b < 0)
      throw StructureError("internal: bad component Euler count");
    comp.genus = (2 - x - b) / 2;
    comp.boundary_count = b - comp.caps_absorbed;
    std::sort(comp.original_boundaries.begin(), comp.original_boundaries.end());
    std::sort(comp.curve_sides.begin(), comp.curve_sides.end());
  }
  if (chi_total != surf.euler_bordered() + total_crossings)
    throw StructureError("internal: Euler characteristic mismatch");
  out.report.euler_total = chi_total;
  return out;
}

}  // namespace

CutReport cut_along(const SurfacePtr& surface, const std::vector<CurveWord>& system) {
  return analyze_cut(surface, system, false).report;
}

bool is_separating(const SurfacePtr& surface, const CurveWord& c) {
  return analyze_cut(surface, {c}, false).report.components.size() == 2;
}

bool is_filling(const SurfacePtr& surface, const std::vector<CurveWord>& system) {
  if (system.empty()) return false;
  Analysis a = analyze_cut(surface, system, true);
  for (const CutComponent& comp : a.report.components) {
    bool disk = comp.genus == 0 && comp.boundary_count == 1 &&
                comp.original_boundaries.empty();
    bool peripheral_annulus = comp.genus == 0 && comp.boundary_count == 2 &&
                              comp.original_boundaries.size() == 1;
    if (!disk && !peripheral_annulus) return false;
  }
  return true;
}

ExistenceCertificate exists_mapping_class(const SurfacePtr& surface,
                                          const std::vector<CurveWord>& a,
                                          const std::vector<CurveWord>& b) {
  ExistenceCertificate cert;
  if (a.size() != b.size()) {
    cert.reason = "systems have different sizes";
    return cert;
  }
  if (a.empty()) {
    cert.exists = true;
    cert.reason = "empty systems match under the identity";
    return cert;
  }
  CutReport ra = cut_along(surface, a), rb = cut_along(surface, b);
  if (ra.components.size() != rb.components.size()) {
    cert.reason = "cut surfaces have " + std::to_string(ra.components.size()) +
                  " and " + std::to_string(rb.components.size()) + " components";
    return cert;
  }
  int nc = static_cast<int>(ra.components.size());
  int m = static_cast<int>(a.size());
  auto side_comp = [&](const CutReport& r, int curve, char lr) {
    for (int i = 0; i < static_cast<int>(r.components.size()); ++i) {
      const auto& cs = r.components[static_cast<std::size_t>(i)].curve_sides;
      if (std::find(cs.begin(), cs.end(), std::make_pair(curve, lr)) != cs.end())
        return i;
    }
    throw StructureError("internal: curve side not on any component");
  };
  auto stats_equal = [](const CutComponent& x, const CutComponent& y) {
    return x.genus == y.genus && x.boundary_count == y.boundary_count &&
           x.caps_absorbed == y.caps_absorbed &&
           x.original_boundaries.size() == y.original_boundaries.size() &&
           x.curve_sides.size() == y.curve_sides.size();
  };
  std::vector<int> perm(static_cast<std::size_t>(nc));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < nc && ok; ++i)
      ok = stats_equal(ra.components[static_cast<std::size_t>(i)],
                       rb.components[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    for (int i = 0; i < m && ok; ++i) {
      int la = perm[static_cast<std::size_t>(side_comp(ra, i, 'L'))];
      int rr = perm[static_cast<std::size_t>(side_comp(ra, i, 'R'))];
      int lb = side_comp(rb, i, 'L');
      int rb2 = side_comp(rb, i, 'R');
      ok = (la == lb && rr == rb2) || (la == rb2 && rr == lb);
    }
    if (ok) {
      cert.exists = true;
      cert.reason = "cut invariants match under a component bijection";
      return cert;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  cert.reason = "no component bijection matches genus, boundary and side data";
  return cert;
}

}  // namespace tc
