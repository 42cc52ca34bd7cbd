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

#include "pdel/ridges.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "pdel/canon.h"
#include "pdel/group.h"
#include "pdel/hull.h"
#include "pdel/qfunc.h"

namespace pdel {

namespace {

using Subset = std::vector<int>;

constexpr std::size_t kFullEnumerationMaxVertices = 128;

struct Facet {
  Subset points;
  IntVec functional;
};

enum class FacetMethod { kDoubleDescription, kGiftWrapping };

class FacetWalker {
 public:
  explicit FacetWalker(const IntMat& a, FacetMethod method = FacetMethod::kDoubleDescription)
      : a_(a), m_(a.cols()), method_(method) {}

  std::size_t RankOf(const Subset& s) const {
    if (s.empty()) return 0;
    return Rank(Rows(s));
  }

  Int Value(const IntVec& h, int i) const {
    Int acc = 0;
    for (std::size_t k = 0; k < m_; ++k)
      if (h[k] != 0) acc += h[k] * a_(i, k);
    return acc;
  }

  Facet InitialFacet(const Subset& p) const {
    const std::size_t r = RankOf(p);
    IntVec h(m_);
    h[m_ - 1] = 1;  // the constant monomial: positive on every point
    Subset zeros;
    while (RankOf(zeros) + 1 < r) {
      const std::vector<IntVec> basis = NullBasis(zeros);
      std::optional<IntVec> d;
      for (const IntVec& cand : basis) {
        if (!ProportionalOn(cand, h, p)) {
          d = cand;
          break;
        }
      }
      if (!d) throw std::logic_error("no descent direction");
      bool has_negative = false;
      for (int i : p)
        if (Value(*d, i) < 0) has_negative = true;
      if (!has_negative)
        for (Int& x : *d) x = -x;
      // t* = max over points off the zero set of -d(x) / h(x).
      std::optional<Rat> t;
      for (int i : p) {
        const Int hv = Value(h, i);
        if (hv == 0) continue;
        const Rat ratio(-Value(*d, i), hv);
        if (!t || ratio > *t) t = ratio;
      }
      h = Combine(*d, h, *t);
      zeros = ZerosOf(h, p);
    }
    return Facet{zeros, h};
  }

  // The other facet of conv(p) through the ridge r of facet f.
  Facet Rotate(const Subset& p, const Facet& f, const Subset& r) const {
    const std::vector<IntVec> basis = NullBasis(r);
    std::optional<IntVec> b;
    int sign = 0;
    for (const IntVec& cand : basis) {
      for (int i : f.points) {
        const Int v = Value(cand, i);
        if (v != 0) {
          sign = v > 0 ? 1 : -1;
          break;
        }
      }
      if (sign != 0) {
        b = cand;
        break;
      }
    }
    if (!b) throw std::logic_error("ridge spans its facet");
    if (sign < 0)
      for (Int& x : *b) x = -x;
    std::optional<Rat> lambda;
    for (int i : p) {
      if (std::binary_search(f.points.begin(), f.points.end(), i)) continue;
      const Rat ratio(-Value(*b, i), Value(f.functional, i));
      if (!lambda || ratio > *lambda) lambda = ratio;
    }
    if (!lambda) throw std::logic_error("facet contains every point");
    const IntVec c = Combine(*b, f.functional, *lambda);
    return Facet{ZerosOf(c, p), c};
  }

  std::vector<Subset> FacetsOf(const Subset& p) const {
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    std::vector<Subset> out = ComputeFacets(p);
    memo_.emplace(p, out);
    return out;
  }

 private:
  std::vector<Subset> ComputeFacets(const Subset& p) const {
    const std::size_t r = RankOf(p);
    std::vector<Subset> out;
    if (r <= 1) {
      out.push_back({});
      return out;
    }
    if (p.size() == r) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        Subset s;
        for (std::size_t j = 0; j < p.size(); ++j)
          if (j != k) s.push_back(p[j]);
        out.push_back(std::move(s));
      }
      return out;
    }
    if (method_ == FacetMethod::kDoubleDescription) {
      for (const Subset& local : ConeFacets(Rows(p))) {
        Subset s;
        for (int i : local) s.push_back(p[i]);
        out.push_back(std::move(s));
      }
      return out;
    }
    std::map<Subset, std::size_t> known;
    std::vector<Facet> facets;
    facets.push_back(InitialFacet(p));
    known[facets.front().points] = 0;
    std::set<Subset> crossed;
    for (std::size_t k = 0; k < facets.size(); ++k) {
      const Facet f = facets[k];
      for (const Subset& ridge : FacetsOf(f.points)) {
        if (!crossed.insert(ridge).second) continue;
        Facet g = Rotate(p, f, ridge);
        if (known.emplace(g.points, facets.size()).second) facets.push_back(std::move(g));
      }
    }
    for (const Facet& f : facets) out.push_back(f.points);
    return out;
  }

  IntMat Rows(const Subset& s) const {
    IntMat out(s.size(), m_);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = 0; k < m_; ++k) out(i, k) = a_(s[i], k);
    return out;
  }

  std::vector<IntVec> NullBasis(const Subset& s) const {
    if (s.empty()) {
      std::vector<IntVec> unit;
      for (std::size_t k = 0; k < m_; ++k) {
        IntVec e(m_);
        e[k] = 1;
        unit.push_back(std::move(e));
      }
      return unit;
    }
    return Nullspace(Rows(s));
  }

  bool ProportionalOn(const IntVec& d, const IntVec& h, const Subset& p) const {
    // h > 0 off its zero set, and d vanishes on that zero set.
    std::optional<std::pair<Int, Int>> ref;
    for (int i : p) {
      const Int hv = Value(h, i);
      const Int dv = Value(d, i);
      if (hv == 0) {
        if (dv != 0) return false;
        continue;
      }
      if (!ref) {
        ref = std::make_pair(dv, hv);
      } else if (dv * ref->second != ref->first * hv) {
        return false;
      }
    }
    return true;
  }

  // Primitive integer vector on the ray of d + t h.
  static IntVec Combine(const IntVec& d, const IntVec& h, const Rat& t) {
    RatVec v(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) v[k] = Rat(d[k]) + t * Rat(h[k]);
    return Primitive(v);
  }

  Subset ZerosOf(const IntVec& h, const Subset& p) const {
    Subset z;
    for (int i : p)
      if (Value(h, i) == 0) z.push_back(i);
    return z;
  }

  const IntMat& a_;
  std::size_t m_;
  FacetMethod method_;
  mutable std::map<Subset, std::vector<Subset>> memo_;
};

// Orbit keys for vertex subsets under the automorphism group.
class OrbitKeyer {
 public:
  OrbitKeyer(const PolytopeRecord& p, const AutGroup& aut)
      : graph_(BuildInvariantGraph(p).graph), aut_(aut), m_(p.vertices.size()) {
    const CanonicalForm cf = Canonicalize(graph_);
    use_graph_ = PermGroup(m_, cf.automorphisms).Order() == aut.order;
  }

  // (key, stabilizer order).
  std::pair<std::vector<int>, Int> Key(const Subset& s) const {
    if (use_graph_) {
      ColoredGraph g = graph_;
      for (int i : s) g.vertex_color[i] = 1;
      const CanonicalForm cf = Canonicalize(g);
      return {cf.form, PermGroup(m_, cf.automorphisms).Order()};
    }
    const PermGroup group(m_, aut_.generators);
    std::vector<int> best;
    Int stabilizer = 0;
    group.ForEachElement([&](const Perm& g) {
      std::vector<int> image;
      for (int i : s) image.push_back(g[i]);
      std::sort(image.begin(), image.end());
      if (image == s) stabilizer += 1;
      if (best.empty() || image < best) best = image;
      return true;
    });
    return {best, stabilizer};
  }

 private:
  ColoredGraph graph_;
  const AutGroup& aut_;
  std::size_t m_;
  bool use_graph_ = true;
};

RidgeOrbit MakeOrbit(const PolytopeRecord& p, const Subset& s, const Int& stabilizer,
                     const Int& group_order) {
  RidgeOrbit o;
  for (int i : s) o.representative.push_back(p.vertices[i]);
  o.stabilizer_order = stabilizer;
  const Int size = group_order / stabilizer;
  if (size * stabilizer != group_order) throw std::logic_error("stabilizer order");
  o.orbit_size = size.get_ui();
  return o;
}

// Orders orbits by representative size, then by canonical key, so the
// output does not depend on the coordinates of the record.
std::vector<RidgeOrbit> InvariantOrder(std::vector<RidgeOrbit> orbits,
                                       const std::map<std::vector<int>, std::size_t>& keys) {
  std::vector<std::pair<std::size_t, const std::vector<int>*>> order;
  for (const auto& [key, i] : keys) order.emplace_back(orbits[i].representative.size(), &key);
  std::vector<std::size_t> idx;
  for (const auto& [key, i] : keys) idx.push_back(i);
  std::vector<std::size_t> perm(order.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (order[a].first != order[b].first) return order[a].first < order[b].first;
    return *order[a].second < *order[b].second;
  });
  std::vector<RidgeOrbit> out;
  for (std::size_t k : perm) out.push_back(std::move(orbits[idx[k]]));
  return out;
}

}  // namespace

std::vector<std::vector<int>> LiftedFacets(const IntMat& points,
                                           const std::vector<int>& subset) {
  std::vector<std::vector<int>> out = FacetWalker(points).FacetsOf(subset);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> LiftedFacetsByGiftWrapping(const IntMat& points,
                                                         const std::vector<int>& subset) {
  std::vector<std::vector<int>> out =
      FacetWalker(points, FacetMethod::kGiftWrapping).FacetsOf(subset);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FirstLiftedFacet(const IntMat& points, const std::vector<int>& subset) {
  return FacetWalker(points).InitialFacet(subset).points;
}

bool Qrank2Check(std::span<const Point> s, std::size_t dim) { return Qrank(s, dim) == 2; }

std::vector<RidgeOrbit> RidgeOrbits(const PolytopeRecord& p, const AutGroup& aut,
                                    RidgeBackend backend) {
  if (!p.bounded) throw std::invalid_argument("ridge orbits of unbounded records");
  if (!IsPerfect(p)) throw std::invalid_argument("record is not perfect");
  const IntMat a = EvaluationMatrix(p.vertices, p.dim);
  const FacetWalker walker(a);
  const OrbitKeyer keyer(p, aut);
  Subset all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  if (backend == RidgeBackend::kAuto) {
    backend = p.vertices.size() <= kFullEnumerationMaxVertices ||
                      p.vertices.size() == walker.RankOf(all)
                  ? RidgeBackend::kFullEnumeration
                  : RidgeBackend::kAdjacencyDecomposition;
  }

  std::vector<RidgeOrbit> out;
  std::map<std::vector<int>, std::size_t> seen;
  if (backend == RidgeBackend::kFullEnumeration) {
    const std::vector<Subset> facets = walker.FacetsOf(all);
    std::map<Subset, std::size_t> index;
    for (std::size_t k = 0; k < facets.size(); ++k) index.emplace(facets[k], k);
    std::vector<std::size_t> parent(facets.size());
    for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
    const auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& g : aut.generators) {
      for (std::size_t k = 0; k < facets.size(); ++k) {
        Subset image;
        for (int i : facets[k]) image.push_back(g[i]);
        std::sort(image.begin(), image.end());
        const auto it = index.find(image);
        if (it == index.end()) throw std::logic_error("automorphism does not permute facets");
        const std::size_t a = find(k), b = find(it->second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t k = 0; k < facets.size(); ++k) ++counts[find(k)];
    for (const auto& [root, count] : counts) {
      auto [key, stab] = keyer.Key(facets[root]);
      if (!seen.emplace(std::move(key), out.size()).second)
        throw std::logic_error("two facet orbits share a key");
      out.push_back(MakeOrbit(p, facets[root], stab, aut.order));
      if (out.back().orbit_size != count)
        throw std::logic_error("orbit size disagrees with facet count");
    }
    return InvariantOrder(std::move(out), seen);
  }

  std::vector<Facet> reps;
  {
    Facet f0 = walker.InitialFacet(all);
    auto [key, stab] = keyer.Key(f0.points);
    seen.emplace(std::move(key), 0);
    out.push_back(MakeOrbit(p, f0.points, stab, aut.order));
    reps.push_back(std::move(f0));
  }
  std::set<Subset> keyed;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const Facet f = reps[k];
    for (const Subset& ridge : walker.FacetsOf(f.points)) {
      Facet g = walker.Rotate(all, f, ridge);
      if (!keyed.insert(g.points).second) continue;
      auto [key, stab] = keyer.Key(g.points);
      if (seen.emplace(std::move(key), reps.size()).second) {
        out.push_back(MakeOrbit(p, g.points, stab, aut.order));
        reps.push_back(std::move(g));
      }
    }
  }
  return InvariantOrder(std::move(out), seen);
}

}  // namespace pdel
