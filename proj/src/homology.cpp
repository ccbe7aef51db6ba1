#include "twistcalc/homology.hpp"

#include <algorithm>

#include "twistcalc/intersection.hpp"

namespace tc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.rows.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  std::size_t n = rows.size();
  if (x.size() != n) throw Error("matrix/vector size mismatch");
  IntVec y(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) y[i] += rows[i][k] * x[k];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.rows.size();
  if (b.rows.size() != n) throw Error("matrix size mismatch");
  IntMatrix c;
  c.rows.assign(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.rows[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c.rows[i][j] += a.rows[i][k] * b.rows[k][j];
    }
  return c;
}

IntMatrix IntMatrix::transposed() const {
  std::size_t n = rows.size();
  IntMatrix t;
  t.rows.assign(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.rows[j][i] = rows[i][j];
  return t;
}

namespace {

std::size_t pivot_of(const IntVec& v) {
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  return p;
}

// Lattice basis in echelon form: one vector per pivot row, zeros above each
// pivot, pivots strictly increasing. Enough for exact span membership.
std::vector<IntVec> hermite_span(std::vector<IntVec> cols) {
  std::vector<IntVec> basis;  // sorted by pivot
  for (IntVec& c : cols) {
    IntVec v = std::move(c);
    std::size_t p;
    while ((p = pivot_of(v)) < v.size()) {
      auto it = std::find_if(basis.begin(), basis.end(), [&](const IntVec& b) {
        return pivot_of(b) >= p;
      });
      if (it == basis.end() || pivot_of(*it) != p) {
        basis.insert(it, std::move(v));
        break;
      }
      IntVec& b = *it;
      // gcd-combine at the shared pivot: b becomes the gcd combo, v the
      // kernel combo (pivot strictly deeper)
      Int x = b[p], y = v[p];
      Int a0 = 1, b0 = 0, a1 = 0, b1 = 1, r0 = x, r1 = y;
      while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, a2 = a0 - q * a1, b2 = b0 - q * b1;
        r0 = r1; r1 = r2; a0 = a1; b0 = b1; a1 = a2; b1 = b2;
      }
      Int u = x / r0, w = y / r0;
      IntVec nb(b.size(), 0), nv(b.size(), 0);
      for (std::size_t i = 0; i < b.size(); ++i) {
        nb[i] = a0 * b[i] + b0 * v[i];
        nv[i] = u * v[i] - w * b[i];
      }
      b = std::move(nb);
      v = std::move(nv);
    }
  }
  return basis;
}

bool in_span(const std::vector<IntVec>& basis, IntVec v) {
  for (const IntVec& b : basis) {
    std::size_t p = pivot_of(b);
    if (p >= v.size() || v[p] == 0) continue;
    if (v[p] % b[p] != 0) return false;
    Int q = v[p] / b[p];
    for (std::size_t i = p; i < b.size(); ++i) v[i] -= q * b[i];
  }
  return std::all_of(v.begin(), v.end(), [](const Int& t) { return t == 0; });
}

}  // namespace

HomologyLattice::HomologyLattice(SurfacePtr surface) : surface_(std::move(surface)) {
  int n = surface_->rank();
  j_.rows.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
  std::vector<CurveWord> loops;
  for (int g = 1; g <= n; ++g)
    loops.emplace_back(surface_, FreeWord::generator(g));
  for (int e = 0; e < n; ++e)
    for (int f = e + 1; f < n; ++f) {
      int v = algebraic_intersection(loops[static_cast<std::size_t>(e)],
                                     loops[static_cast<std::size_t>(f)]);
      j_.rows[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] = v;
      j_.rows[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)] = -v;
    }
  std::vector<IntVec> caps;
  for (int b : surface_->caps())
    caps.push_back(homology_class(surface_->boundary_word(b)));
  cap_span_ = hermite_span(std::move(caps));
}

IntVec HomologyLattice::homology_class(const FreeWord& w) const {
  auto ab = w.abelianization(surface_->rank());
  IntVec v(ab.size());
  for (std::size_t i = 0; i < ab.size(); ++i) v[i] = ab[i];
  return v;
}

IntVec HomologyLattice::homology_class(const CurveWord& c) const {
  if (!c.surface->same_as(*surface_)) throw Error("curve on a different surface");
  return homology_class(c.word);
}

Int HomologyLattice::pairing(const IntVec& x, const IntVec& y) const {
  IntVec jy = j_.apply(y);
  Int s = 0;
  for (std::size_t i = 0; i < jy.size(); ++i) s += x[i] * jy[i];
  return s;
}

IntMatrix HomologyLattice::transvection(const IntVec& v) const {
  int n = rank();
  if (static_cast<int>(v.size()) != n) throw Error("class has wrong rank");
  IntVec jv = j_.apply(v);
  IntMatrix m = IntMatrix::identity(n);
  // x -> x + (x^T J v) v, columnwise: column k gains v * (Jv)_k... note
  // <e_k, v> = (J v)_k, so M = I + v (Jv)^T acting on columns
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
          v[static_cast<std::size_t>(i)] * jv[static_cast<std::size_t>(k)];
  return m;
}

IntMatrix HomologyLattice::matrix_of(const Automorphism& f) const {
  if (!f.surface()->same_as(*surface_)) throw Error("automorphism on a different surface");
  int n = rank();
  IntMatrix m = IntMatrix::identity(n);
  for (int g = 1; g <= n; ++g) {
    IntVec col = homology_class(f.image(g));
    for (int i = 0; i < n; ++i)
      m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(g - 1)] =
          col[static_cast<std::size_t>(i)];
  }
  return m;
}

IntMatrix HomologyLattice::matrix_of(const ExplicitTwistWord& w) const {
  // t1 t2 ... tn applies tn first, so the matrix is the product in word order
  IntMatrix m = IntMatrix::identity(rank());
  for (const SignedCurve& letter : w) {
    IntVec v = homology_class(letter.curve);
    IntVec jv = j_.apply(v);
    // since v^T J v = 0, the inverse of I + v(Jv)^T is I - v(Jv)^T
    IntMatrix t = IntMatrix::identity(rank());
    for (int i = 0; i < rank(); ++i)
      for (int k = 0; k < rank(); ++k)
        t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
            letter.sign * v[static_cast<std::size_t>(i)] * jv[static_cast<std::size_t>(k)];
    m = m * t;
  }
  return m;
}

bool HomologyLattice::equal_mod_caps(const IntMatrix& a, const IntMatrix& b) const {
  if (a.size() != rank() || b.size() != rank()) throw Error("matrix size mismatch");
  for (int k = 0; k < rank(); ++k) {
    IntVec diff(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i)
      diff[static_cast<std::size_t>(i)] =
          a.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
          b.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    if (!in_span(cap_span_, std::move(diff))) return false;
  }
  return true;
}

bool HomologyLattice::is_symplectic(const IntMatrix& m) const {
  return m.transposed() * j_ * m == j_;
}

bool HomologyLattice::screen_relation(const ExplicitTwistWord& lhs,
                                      const ExplicitTwistWord& rhs) const {
  return equal_mod_caps(matrix_of(lhs), matrix_of(rhs));
}

}  // namespace tc
