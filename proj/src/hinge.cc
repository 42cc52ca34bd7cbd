// Copyright 2026 The pdel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdel/hinge.h"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "pdel/cvp.h"

namespace pdel {

namespace {

constexpr int kMaxCompletionDoublings = 256;

QuadraticFunction ScaledPrimitive(const QuadraticFunction& f) {
  const RatVec coeffs = f.Coefficients();
  return QuadraticFunction::FromCoefficients(f.dim(), Primitive(coeffs));
}

// Candidate starting points: vertices reflected through ridge vertices.
std::optional<Point> StartingPoint(const HingePencil& pencil) {
  std::optional<Point> best;
  Rat best_rho;
  for (const Point& s : pencil.ridge) {
    for (const Point& v : pencil.off_ridge) {
      Point z(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) z[i] = 2 * s[i] - v[i];
      const Rat gz = pencil.g.Evaluate(z);
      if (gz >= 0) continue;
      const Rat rho = pencil.f.Evaluate(z) / -gz;
      if (!best || rho < best_rho || (rho == best_rho && z < *best)) {
        best = z;
        best_rho = rho;
      }
    }
  }
  if (best) return best;
  return InteriorPoint(pencil.g);
}

// Coefficients of det(gram(f) + rho gram(g)) in rho, by interpolation.
RatVec BarrierPolynomial(const Mat& gf, const Mat& gg) {
  const std::size_t n = gf.rows();
  std::vector<Rat> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Mat m = gf;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) += Rat(static_cast<long>(k)) * gg(r, c);
    xs.push_back(static_cast<long>(k));
    ys.push_back(Determinant(m));
  }
  // Newton divided differences, then expansion into monomials.
  std::vector<Rat> dd = ys;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  RatVec poly(n + 1);
  for (std::size_t i = n + 1; i-- > 0;) {
    // poly = poly * (x - xs[i]) + dd[i].
    RatVec next(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
      next[k + 1] += poly[k];
      next[k] -= xs[i] * poly[k];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return poly;
}

// The simplest rational (smallest denominator) in [lo, hi], 0 <= lo <= hi.
Rat SimplestBetween(const Rat& lo, const Rat& hi) {
  const Int c = CeilOf(lo);
  if (Rat(c) <= hi) return Rat(c);
  const Int k = FloorOf(lo);
  Rat inner = SimplestBetween(1 / (hi - k), 1 / (lo - k));
  Rat out = Rat(k) + 1 / inner;
  out.canonicalize();
  return out;
}

bool GramIndefinite(const QuadraticFunction& f, const QuadraticFunction& g, const Rat& rho) {
  return ClassifyDefiniteness((f + rho * g).gram()).kind == DefinitenessKind::kIndefinite;
}

// The largest rho in [0, hi) at which gram(f + rho g) is still positive
// semidefinite, given that it is positive definite at 0 and indefinite at hi.
// Returns the exact value when it is rational, and otherwise a rational in
// [0, rho*).
struct Barrier {
  std::optional<Rat> exact;
  Rat below;
};

Barrier GramBarrier(const QuadraticFunction& f, const QuadraticFunction& g, const Rat& hi_in) {
  const RatVec poly = BarrierPolynomial(f.gram(), g.gram());
  const IntVec ip = Primitive(poly);
  std::size_t deg = ip.size();
  while (deg > 0 && ip[deg - 1] == 0) --deg;
  if (deg == 0) throw std::logic_error("degenerate gram pencil");
  const Int lc = abs(ip[deg - 1]);
  // Distinct rationals with denominators dividing lc are 1/lc^2 apart.
  const Rat resolution(1, 2 * lc * lc);
  Rat lo = 0, hi = hi_in;
  while (hi - lo >= resolution) {
    Rat mid = (lo + hi) / 2;
    mid.canonicalize();
    const Definiteness d = ClassifyDefiniteness((f + mid * g).gram());
    if (d.kind == DefinitenessKind::kIndefinite) {
      hi = mid;
    } else if (d.kind == DefinitenessKind::kPositiveSemidefinite) {
      return Barrier{mid, mid};
    } else {
      lo = mid;
    }
  }
  const Rat c = SimplestBetween(lo, hi);
  if (ClassifyDefiniteness((f + c * g).gram()).kind == DefinitenessKind::kPositiveSemidefinite)
    return Barrier{c, c};
  return Barrier{std::nullopt, lo};
}

// A zero of h off the ridge, for results without a lattice witness on the
// pencil's descent path.
Point ZeroOffRidge(const PolytopeRecord& rec, const std::vector<Point>& ridge) {
  for (const Point& z : ZeroSetSample(rec))
    if (!std::binary_search(ridge.begin(), ridge.end(), z)) return z;
  throw std::logic_error("new zero set lies in the ridge");
}

}  // namespace

HingePencil RidgeGenerator(const PolytopeRecord& p, std::span<const Point> ridge) {
  HingePencil pencil;
  pencil.f = p.function;
  pencil.ridge.assign(ridge.begin(), ridge.end());
  std::sort(pencil.ridge.begin(), pencil.ridge.end());
  pencil.ridge.erase(std::unique(pencil.ridge.begin(), pencil.ridge.end()),
                     pencil.ridge.end());
  std::vector<Point> zeros = p.vertices;
  if (!p.bounded) {
    for (const Point& z : ZeroSetSample(p)) zeros.push_back(z);
    for (const Point& z : ZeroSetInBox(p, 1)) zeros.push_back(z);
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
  }
  for (const Point& s : pencil.ridge) {
    const bool on = p.bounded ? std::binary_search(p.vertices.begin(), p.vertices.end(), s)
                              : s.size() == p.dim && p.function.Evaluate(s) == 0;
    if (!on) throw std::invalid_argument("ridge point is not a vertex");
  }
  std::set_difference(zeros.begin(), zeros.end(), pencil.ridge.begin(), pencil.ridge.end(),
                      std::back_inserter(pencil.off_ridge));
  const std::vector<QuadraticFunction> space = VanishingSpace(pencil.ridge, p.dim);
  if (space.size() != 2) throw QrankMismatch(space.size());

  const RatVec fc = p.function.Coefficients();
  std::size_t pivot = 0;
  while (pivot < fc.size() && fc[pivot] == 0) ++pivot;
  if (pivot == fc.size()) throw std::invalid_argument("zero function");
  QuadraticFunction g;
  for (const QuadraticFunction& h : space) {
    const Rat hp = h.Coefficients()[pivot];
    const QuadraticFunction candidate = fc[pivot] * h - hp * p.function;
    if (!candidate.IsZero()) {
      g = candidate;
      break;
    }
  }
  if (g.IsZero()) throw std::invalid_argument("function does not vanish on ridge");

  int sign = 0;
  for (const Point& v : pencil.off_ridge) {
    const Rat gv = g.Evaluate(v);
    const int s = gv > 0 ? 1 : (gv < 0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) throw SignAmbiguous();
    sign = s;
  }
  if (sign == 0) throw SignAmbiguous();
  g = sign > 0 ? g : Rat(-1) * g;
  // The flip target is the second extreme ray of the cone of lattice
  // nonnegative members of span{f, g}. It is reached at finite rho exactly
  // when g is negative somewhere on Z^n; f vanishes on the vertices, so
  // subtracting multiples of f keeps the sign normalization.
  Rat shift = 1;
  for (int doubling = 0; !InteriorPoint(g); ++doubling) {
    if (doubling > kMaxCompletionDoublings) throw UnboundedRidge();
    g = g - shift * p.function;
    shift *= 2;
  }
  pencil.g = ScaledPrimitive(g);
  return pencil;
}

FlipResult Flip(const HingePencil& pencil, std::size_t max_iterations) {
  std::optional<Point> z = StartingPoint(pencil);
  if (!z) throw UnboundedRidge();
  FlipResult result;
  Rat rho = pencil.f.Evaluate(*z) / -pencil.g.Evaluate(*z);
  bool at_barrier = false;
  while (true) {
    if (++result.iterations > max_iterations)
      throw std::logic_error("hinge iteration cap reached");
    if (GramIndefinite(pencil.f, pencil.g, rho)) {
      // f + rho g is negative somewhere, but interior points far along
      // negative directions only approach the gram barrier.
      const Barrier b = GramBarrier(pencil.f, pencil.g, rho);
      if (b.exact) {
        rho = *b.exact;
        at_barrier = true;
        continue;
      }
      Rat probe = b.below;
      std::optional<Point> next;
      for (int refine = 0; !(next = InteriorPoint(pencil.f + probe * pencil.g)); ++refine) {
        if (refine > 256) throw std::logic_error("hinge parameter at an irrational barrier");
        probe = (probe + rho) / 2;
        if (GramIndefinite(pencil.f, pencil.g, probe)) throw std::logic_error("barrier bracket");
      }
      z = next;
      rho = pencil.f.Evaluate(*z) / -pencil.g.Evaluate(*z);
      at_barrier = false;
      continue;
    }
    const QuadraticFunction h = pencil.f + rho * pencil.g;
    const std::optional<Point> next = InteriorPoint(h);
    if (!next) break;
    const Rat gz = pencil.g.Evaluate(*next);
    if (gz >= 0) throw std::logic_error("interior point with g >= 0");
    const Rat next_rho = pencil.f.Evaluate(*next) / -gz;
    if (next_rho >= rho) throw std::logic_error("hinge parameter did not decrease");
    z = next;
    rho = next_rho;
    at_barrier = false;
  }
  const QuadraticFunction h = pencil.f + rho * pencil.g;
  result.rho_m = rho;
  result.new_record = VertexSetOf(h);
  result.witness = at_barrier ? ZeroOffRidge(result.new_record, pencil.ridge) : *z;
  return result;
}

FlipResult FlipAcross(const PolytopeRecord& p, std::span<const Point> ridge) {
  return Flip(RidgeGenerator(p, ridge));
}

PolytopeRecord GrowDelaunayCell(const Mat& q, std::span<const Rat> c) {
  const std::size_t n = q.rows();
  const CvpResult closest = ClosestVectors(q, c);
  // f(x) = q[x - c] - d.
  RatVec lin(n);
  const RatVec qc = q * c;
  for (std::size_t i = 0; i < n; ++i) lin[i] = -2 * qc[i];
  QuadraticFunction f(q, lin, Bilinear(q, c, c) - closest.squared_distance);
  PolytopeRecord rec = VertexSetOf(f);
  while (true) {
    IntMat affine(0, n + 1);
    for (const Point& v : rec.vertices) {
      IntVec row(n + 1);
      for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<long>(v[i]);
      row[n] = 1;
      affine.AppendRow(row);
    }
    const std::vector<IntVec> normals = Nullspace(affine);
    if (normals.empty()) return rec;
    RatVec g_lin(n);
    for (std::size_t i = 0; i < n; ++i) g_lin[i] = Rat(normals.front()[i]);
    HingePencil pencil;
    pencil.f = rec.function;
    pencil.g = QuadraticFunction(Mat(n, n), g_lin, Rat(normals.front()[n]));
    pencil.ridge = rec.vertices;
    rec = Flip(pencil).new_record;
  }
}

}  // namespace pdel
