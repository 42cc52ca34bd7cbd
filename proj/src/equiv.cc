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

#include "pdel/equiv.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <map>

namespace pdel {

namespace {

// Enumerating a graph automorphism group is only used when some graph
// automorphism has no integral affine realization.
constexpr long kMaxEnumeratedGroupOrder = 5'000'000;

IntMat UnimodularInverse(const IntMat& l) {
  const auto inv = Solve(ToRat(l), Mat::Identity(l.rows()));
  if (!inv) throw std::invalid_argument("matrix is singular");
  return ToInt(*inv);
}

// Indices of n + 1 affinely independent vertices, greedily from the front.
std::vector<std::size_t> AffineBasis(const PolytopeRecord& p) {
  const std::size_t n = p.dim;
  std::vector<std::size_t> basis = {0};
  IntMat diffs(0, n);
  for (std::size_t i = 1; i < p.vertices.size() && basis.size() <= n; ++i) {
    IntVec d(n);
    for (std::size_t k = 0; k < n; ++k)
      d[k] = static_cast<long>(p.vertices[i][k] - p.vertices[0][k]);
    IntMat trial = diffs;
    trial.AppendRow(d);
    if (Rank(trial) == trial.rows()) {
      diffs = std::move(trial);
      basis.push_back(i);
    }
  }
  if (basis.size() != n + 1) throw std::invalid_argument("vertices are not full-dimensional");
  return basis;
}

void RequirePerfectBounded(const PolytopeRecord& p) {
  if (!p.bounded) throw std::invalid_argument("record is unbounded");
  if (!IsPerfect(p)) throw std::invalid_argument("record is not perfect");
}

Perm LabelingMap(const CanonicalForm& from, const CanonicalForm& to) {
  // from.labeling[i] == to.labeling[result[i]].
  Perm inv_to(to.labeling.size());
  for (std::size_t j = 0; j < to.labeling.size(); ++j) inv_to[to.labeling[j]] = static_cast<int>(j);
  Perm out(from.labeling.size());
  for (std::size_t i = 0; i < from.labeling.size(); ++i) out[i] = inv_to[from.labeling[i]];
  return out;
}

}  // namespace

Point AffineMap::Apply(const Point& z) const {
  Point out(l.rows());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    Int acc = t[i];
    for (std::size_t j = 0; j < l.cols(); ++j) acc += l(i, j) * static_cast<long>(z[j]);
    out[i] = ToInt64(acc);
  }
  return out;
}

InvariantGraph BuildInvariantGraph(const PolytopeRecord& p) {
  RequirePerfectBounded(p);
  const std::size_t m = p.vertices.size();
  const Mat& q = p.function.gram();
  std::vector<Rat> values(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      RatVec d(p.dim);
      for (std::size_t k = 0; k < p.dim; ++k) d[k] = p.vertices[i][k] - p.vertices[j][k];
      values[i * m + j] = values[j * m + i] = Bilinear(q, d, d);
    }
  }
  InvariantGraph out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.colors.push_back(values[i * m + j]);
  std::sort(out.colors.begin(), out.colors.end());
  out.colors.erase(std::unique(out.colors.begin(), out.colors.end()), out.colors.end());
  out.graph.n = m;
  out.graph.vertex_color.assign(m, 0);
  out.graph.edge_color.assign(m * m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      out.graph.edge_color[i * m + j] = static_cast<int>(
          std::lower_bound(out.colors.begin(), out.colors.end(), values[i * m + j]) -
          out.colors.begin());
    }
  }
  return out;
}

std::optional<AffineMap> RealizePermutation(const PolytopeRecord& p,
                                            const PolytopeRecord& q,
                                            const Perm& perm) {
  const std::size_t n = p.dim;
  if (q.dim != n || perm.size() != p.vertices.size() ||
      q.vertices.size() != p.vertices.size())
    return std::nullopt;
  const std::vector<std::size_t> basis = AffineBasis(p);
  // Rows are (v_bi - v_b0)^T and (w_perm(bi) - w_perm(b0))^T, so
  // D L^T = E for the unknown linear part L.
  Mat d(n, n), e(n, n);
  const Point& v0 = p.vertices[basis[0]];
  const Point& w0 = q.vertices[perm[basis[0]]];
  for (std::size_t r = 0; r < n; ++r) {
    const Point& v = p.vertices[basis[r + 1]];
    const Point& w = q.vertices[perm[basis[r + 1]]];
    for (std::size_t k = 0; k < n; ++k) {
      d(r, k) = v[k] - v0[k];
      e(r, k) = w[k] - w0[k];
    }
  }
  const auto lt = Solve(d, e);
  if (!lt) return std::nullopt;
  AffineMap a;
  a.l = IntMat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = (*lt)(j, i);
      if (x.get_den() != 1) return std::nullopt;
      a.l(i, j) = x.get_num();
    }
  }
  const Int det = Determinant(a.l);
  if (det != 1 && det != -1) return std::nullopt;
  a.t = IntVec(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int acc = w0[i];
    for (std::size_t j = 0; j < n; ++j) acc -= a.l(i, j) * static_cast<long>(v0[j]);
    a.t[i] = acc;
  }
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (a.Apply(p.vertices[i]) != q.vertices[perm[i]]) return std::nullopt;
  return a;
}

AutGroup Automorphisms(const PolytopeRecord& p) {
  const InvariantGraph ig = BuildInvariantGraph(p);
  const CanonicalForm cf = Canonicalize(ig.graph);
  AutGroup out;
  bool all_realized = true;
  for (const Perm& g : cf.automorphisms) {
    auto a = RealizePermutation(p, p, g);
    if (!a) {
      all_realized = false;
      continue;
    }
    out.generators.push_back(g);
    out.affine_realizations.push_back(std::move(*a));
  }
  if (all_realized) {
    out.order = PermGroup(p.vertices.size(), out.generators).Order();
    return out;
  }
  // The realizable subgroup, by enumeration of the graph group.
  const PermGroup graph_group(p.vertices.size(), cf.automorphisms);
  if (graph_group.Order() > kMaxEnumeratedGroupOrder)
    throw std::runtime_error("graph automorphism group too large to filter");
  PermGroup sub(p.vertices.size(), out.generators);
  graph_group.ForEachElement([&](const Perm& g) {
    if (sub.Contains(g)) return true;
    auto a = RealizePermutation(p, p, g);
    if (!a) return true;
    out.generators.push_back(g);
    out.affine_realizations.push_back(std::move(*a));
    sub = PermGroup(p.vertices.size(), out.generators);
    return true;
  });
  out.order = sub.Order();
  return out;
}

PolytopeRecord Transform(const PolytopeRecord& p, const AffineMap& a) {
  PolytopeRecord out = p;
  for (Point& v : out.vertices) v = a.Apply(v);
  std::sort(out.vertices.begin(), out.vertices.end());
  // f'(z) = f(L^{-1} (z - t)).
  const IntMat inv = UnimodularInverse(a.l);
  IntVec shift(p.dim);
  for (std::size_t i = 0; i < p.dim; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < p.dim; ++j) acc -= inv(i, j) * a.t[j];
    shift[i] = acc;
  }
  out.function = p.function.Substitute(inv, shift).Normalized();
  for (Point& k : out.kernel) {
    Point image(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < p.dim; ++j) acc += a.l(i, j) * static_cast<long>(k[j]);
      image[i] = ToInt64(acc);
    }
    k = image;
  }
  return out;
}

AffineMap AreEquivalent(const PolytopeRecord& p, const PolytopeRecord& q) {
  if (p.dim != q.dim || p.vertices.size() != q.vertices.size()) throw NotEquivalent();
  const InvariantGraph gp = BuildInvariantGraph(p);
  const InvariantGraph gq = BuildInvariantGraph(q);
  if (gp.colors != gq.colors) throw NotEquivalent();
  const CanonicalForm cp = Canonicalize(gp.graph);
  const CanonicalForm cq = Canonicalize(gq.graph);
  if (cp.form != cq.form) throw NotEquivalent();
  const Perm sigma = LabelingMap(cp, cq);

  std::optional<AffineMap> found = RealizePermutation(p, q, sigma);
  if (!found) {
    bool all_realized = true;
    for (const Perm& g : cp.automorphisms)
      if (!RealizePermutation(p, p, g)) all_realized = false;
    if (!all_realized) {
      // Graph automorphisms of p that are not affine: try sigma * g.
      const PermGroup group(p.vertices.size(), cp.automorphisms);
      if (group.Order() > kMaxEnumeratedGroupOrder)
        throw std::runtime_error("graph automorphism group too large to search");
      group.ForEachElement([&](const Perm& g) {
        found = RealizePermutation(p, q, Compose(sigma, g));
        return !found.has_value();
      });
    }
  }
  if (!found) throw NotEquivalent();
  const PolytopeRecord image = Transform(p, *found);
  if (image.vertices != q.vertices)
    throw std::logic_error("equivalence map does not match vertex sets");
  if (!(image.function == q.function))
    throw std::logic_error("equivalence map does not match the gram form");
  return *found;
}

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string Certificate(const PolytopeRecord& p) {
  const InvariantGraph ig = BuildInvariantGraph(p);
  const CanonicalForm cf = Canonicalize(ig.graph);
  std::string s = "pdel-cert/1|dim=" + std::to_string(p.dim) +
                  "|m=" + std::to_string(p.vertices.size()) + "|colors=";
  for (std::size_t i = 0; i < ig.colors.size(); ++i) {
    if (i) s += ',';
    s += RatToString(ig.colors[i]);
  }
  s += "|form=";
  const std::size_t m = p.vertices.size();
  for (std::size_t k = m; k < cf.form.size(); ++k) {
    if (k > m) s += ',';
    s += std::to_string(cf.form[k]);
  }
  return Sha256Hex(s);
}

std::string UnboundedKey(const PolytopeRecord& p) {
  const Decomposition d = Decompose(p);
  return "unbounded:" + Certificate(d.factor) + ":" + std::to_string(d.gamma.size());
}

}  // namespace pdel
