#include "twistcalc/intersection.hpp"

#include <algorithm>
#include <array>

namespace tc {

namespace {

constexpr HalfEdge kStar = -1;  // terminal symbol: the basepoint gap

struct DiskGeometry {
  const Surface* surface;
  std::vector<int> cp;  // circular position of each half-edge
  int m2;               // circle size

  explicit DiskGeometry(const Surface& s) : surface(&s) {
    const auto& order = s.ribbon().vertex_orders[0];
    cp.assign(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
      cp[static_cast<std::size_t>(order[i])] = static_cast<int>(2 * i + 1);
    m2 = static_cast<int>(2 * order.size() + 2);
  }

  int pos(HalfEdge h) const {
    return h == kStar ? 0 : cp[static_cast<std::size_t>(h)];
  }

  // Rays diverging at a vertex are ordered counterclockwise from the
  // backtracking direction; at the first step, from the basepoint gap.
  TurnSeq turns(std::span<const HalfEdge> symbols) const {
    TurnSeq t;
    t.reserve(symbols.size());
    int cut = 0;  // basepoint gap
    for (HalfEdge s : symbols) {
      t.push_back(((pos(s) - cut) % m2 + m2) % m2);
      if (s == kStar) break;
      cut = pos(partner(s));
    }
    return t;
  }
};

// Symbols of the forward/backward rays of strand `index` of a cyclic word,
// to the given depth.
std::vector<HalfEdge> ray_symbols(const FreeWord& w, std::size_t index,
                                  bool forward, std::size_t depth) {
  const auto& ls = w.letters();
  std::size_t n = ls.size();
  std::vector<HalfEdge> out;
  out.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    Letter l = forward ? ls[(index + i) % n]
                       : -ls[(index + n - 1 - (i % n)) % n];
    out.push_back(half_edge_of(l));
  }
  return out;
}

struct LabeledSeq {
  const TurnSeq* seq;
  int label;
};

}  // namespace

CurveDiskData disk_data(std::span<const CurveWord> curves) {
  if (curves.empty()) return {};
  const Surface& s = *curves[0].surface;
  for (const auto& c : curves) {
    if (!c.same_surface(curves[0]))
      throw Error("curves live on different surfaces");
    if (!c.word.is_cyclically_reduced() || c.word.empty())
      throw Error("curve '" + c.name + "' is not a cyclically reduced word");
  }
  DiskGeometry geo(s);
  std::size_t total = 0;
  for (const auto& c : curves) total += c.word.size();
  std::size_t depth = 2 * total + 4;

  CurveDiskData data;
  data.symbols = 2 * s.rank();
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const FreeWord& w = curves[ci].word;
    for (std::size_t j = 0; j < w.size(); ++j) {
      DiskStrand st;
      st.curve = static_cast<int>(ci);
      st.index = static_cast<int>(j);
      auto fwd = ray_symbols(w, j, true, depth);
      auto back = ray_symbols(w, j, false, depth);
      st.fwd_arc = fwd[0];
      st.back_arc = back[0];
      st.fwd = geo.turns(fwd);
      st.back = geo.turns(back);
      data.strands.push_back(std::move(st));
    }
  }
  return data;
}

int linked_sign(const DiskStrand& a, const DiskStrand& b) {
  std::array<LabeledSeq, 4> ends = {{{&a.back, 0}, {&a.fwd, 1}, {&b.back, 2}, {&b.fwd, 3}}};
  // equal rays never cross transversally
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*ends[static_cast<std::size_t>(i)].seq == *ends[static_cast<std::size_t>(j)].seq)
        return 0;
  std::sort(ends.begin(), ends.end(), [](const LabeledSeq& x, const LabeledSeq& y) {
    return *x.seq < *y.seq;
  });
  std::array<int, 4> ring;
  for (std::size_t i = 0; i < 4; ++i) ring[i] = ends[i].label;
  std::size_t p1 = static_cast<std::size_t>(
      std::find(ring.begin(), ring.end(), 1) - ring.begin());
  std::array<int, 4> rot;
  for (std::size_t i = 0; i < 4; ++i) rot[i] = ring[(p1 + i) % 4];
  if (rot == std::array<int, 4>{1, 3, 0, 2}) return 1;
  if (rot == std::array<int, 4>{1, 2, 0, 3}) return -1;
  return 0;
}

namespace {

// Two lifts sharing a path are linked at every common vertex; a crossing is
// charged only to the vertex where the shared path starts along strand a, so
// each crossing of the underlying curves is counted exactly once.
bool counted_here(const DiskStrand& a, const DiskStrand& b) {
  int t = a.back.front();
  return t != b.back.front() && t != b.fwd.front();
}

}  // namespace

int geometric_intersection(const CurveWord& a, const CurveWord& b) {
  if (!a.same_surface(b)) throw Error("curves live on different surfaces");
  if (a.parallel_to(b)) return 0;  // distinct parallel representatives
  std::array<CurveWord, 2> pair = {a, b};
  CurveDiskData data = disk_data(pair);
  int count = 0;
  for (const auto& s1 : data.strands) {
    if (s1.curve != 0) continue;
    for (const auto& s2 : data.strands) {
      if (s2.curve != 1) continue;
      if (linked_sign(s1, s2) != 0 && counted_here(s1, s2)) ++count;
    }
  }
  return count;
}

int self_intersection(const CurveWord& c) {
  std::array<CurveWord, 1> one = {c};
  CurveDiskData data = disk_data(one);
  // ordered pairs: each crossing is charged once per choice of base strand
  int twice = 0;
  for (std::size_t i = 0; i < data.strands.size(); ++i)
    for (std::size_t j = 0; j < data.strands.size(); ++j)
      if (i != j && linked_sign(data.strands[i], data.strands[j]) != 0 &&
          counted_here(data.strands[i], data.strands[j]))
        ++twice;
  if (twice % 2 != 0) throw StructureError("internal: odd self-crossing count");
  int count = twice / 2;
  // a proper power is never embedded even when its root is
  std::size_t n = c.word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (c.word.rotated(d) == c.word) {
      count += static_cast<int>(n / d) - 1;
      break;
    }
  }
  return count;
}

int algebraic_intersection(const CurveWord& a, const CurveWord& b) {
  if (!a.same_surface(b)) throw Error("curves live on different surfaces");
  std::array<CurveWord, 2> pair = {a, b};
  CurveDiskData data = disk_data(pair);
  int total = 0;
  for (const auto& s1 : data.strands) {
    if (s1.curve != 0) continue;
    for (const auto& s2 : data.strands) {
      if (s2.curve != 1) continue;
      if (counted_here(s1, s2)) total += linked_sign(s1, s2);
    }
  }
  return total;
}

CurveWord certify_embedded(CurveWord c) {
  c.embedded_certified = (self_intersection(c) == 0);
  return c;
}

GeneratorCrossings generator_crossings(int gen, const CurveWord& c) {
  const Surface& s = *c.surface;
  if (gen < 1 || gen > s.rank()) throw Error("generator out of range");
  DiskGeometry geo(s);
  HalfEdge out_h = half_edge_of(gen);

  std::array<CurveWord, 1> one = {c};
  CurveDiskData data = disk_data(one);

  TurnSeq star = {0};
  std::vector<HalfEdge> in_sym = {out_h, kStar};
  std::vector<HalfEdge> back_sym = {partner(out_h), kStar};
  DiskStrand chord_in;  // basepoint -> band
  chord_in.back = star;
  chord_in.fwd = geo.turns(in_sym);
  DiskStrand chord_out;  // band -> basepoint
  chord_out.back = geo.turns(back_sym);
  chord_out.fwd = star;

  struct Hit {
    TurnSeq low;
    TwistCrossing cross;
  };
  std::vector<Hit> before, after;
  for (const auto& st : data.strands) {
    TurnSeq low = std::min(st.back, st.fwd);
    if (int sg = linked_sign(chord_in, st); sg != 0)
      before.push_back({low, {st.index, sg}});
    if (int sg = linked_sign(chord_out, st); sg != 0)
      after.push_back({low, {st.index, sg}});
  }
  // disjoint strands crossing a chord are nested: walk order along the chord
  // is the nesting order
  std::sort(before.begin(), before.end(),
            [](const Hit& a, const Hit& b) { return a.low < b.low; });
  std::sort(after.begin(), after.end(),
            [](const Hit& a, const Hit& b) { return b.low < a.low; });
  GeneratorCrossings out;
  for (auto& h : before) out.before.push_back(h.cross);
  for (auto& h : after) out.after.push_back(h.cross);

  // crossings inside the generator's own band: the generator passage and the
  // curve's passages through that band are straight strips between the two
  // wall arcs, ordered by their ray endpoints
  HalfEdge arc_a = out_h, arc_b = partner(out_h);
  auto wall_seqs = [&](HalfEdge arc) {
    std::vector<const TurnSeq*> seqs;
    for (const auto& st : data.strands) {
      if (st.fwd_arc == arc) seqs.push_back(&st.fwd);
      if (st.back_arc == arc) seqs.push_back(&st.back);
    }
    std::sort(seqs.begin(), seqs.end(),
              [](const TurnSeq* x, const TurnSeq* y) { return *x < *y; });
    return seqs;
  };
  std::vector<const TurnSeq*> wall_a = wall_seqs(arc_a), wall_b = wall_seqs(arc_b);
  // doubled coordinates: strand rank p sits at 2p, the generator ray between
  // ranks r-1 and r sits at 2r-1; wall a counts negative, wall b positive
  auto strand_coord = [](const std::vector<const TurnSeq*>& wall, const TurnSeq& s) {
    for (std::size_t i = 0; i < wall.size(); ++i)
      if (*wall[i] == s) return 2 * static_cast<int>(i);
    throw StructureError("internal: strand ray missing from wall");
  };
  auto gen_coord = [](const std::vector<const TurnSeq*>& wall, const TurnSeq& s) {
    int r = 0;
    for (const TurnSeq* w : wall)
      if (*w < s) ++r;
    return 2 * r - 1;
  };
  int x1 = -gen_coord(wall_a, chord_in.fwd);
  int y1 = gen_coord(wall_b, chord_out.back);
  std::size_t n = c.word.size();
  struct MidHit {
    long num;  // crossing parameter num/den along the generator passage
    long den;
    TwistCrossing cross;
  };
  std::vector<MidHit> mids;
  for (const auto& st : data.strands) {
    if (st.fwd_arc != arc_a && st.fwd_arc != arc_b) continue;
    std::size_t j = static_cast<std::size_t>(st.index);
    const DiskStrand& nx = data.strands[(j + 1) % n];
    bool same_dir = st.fwd_arc == arc_a;
    int uc0, uc1;
    if (same_dir) {
      uc0 = -strand_coord(wall_a, st.fwd);
      uc1 = strand_coord(wall_b, nx.back);
    } else {
      uc0 = -strand_coord(wall_a, nx.back);
      uc1 = strand_coord(wall_b, st.fwd);
    }
    long s0 = x1 - uc0, s1 = y1 - uc1;
    if ((s0 > 0) == (s1 > 0)) continue;  // endpoint orders agree: parallel
    long den = (y1 - x1) - (uc1 - uc0);
    int sg = (den > 0 ? 1 : -1) * (same_dir ? 1 : -1);
    long num = uc0 - x1;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int rot = same_dir ? static_cast<int>(j) : static_cast<int>((j + 1) % n);
    mids.push_back({num, den, {rot, sg}});
  }
  std::sort(mids.begin(), mids.end(), [](const MidHit& a, const MidHit& b) {
    return a.num * b.den < b.num * a.den;
  });
  for (auto& h : mids) out.mid.push_back(h.cross);
  return out;
}

}  // namespace tc
