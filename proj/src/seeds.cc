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

#include "pdel/seeds.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pdel/cvp.h"
#include "pdel/hull.h"

namespace pdel {

namespace {

Mat Cartan(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Mat a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  for (auto [i, j] : edges) {
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  }
  return a;
}

}  // namespace

RatVec FundamentalWeight(const Mat& a, std::size_t k) {
  Mat e(a.rows(), 1);
  e(k - 1, 0) = 1;
  const auto w = Solve(a, e);
  if (!w) throw std::logic_error("singular Cartan matrix");
  return w->column(0);
}

Mat CartanA(std::size_t n) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Cartan(n, edges);
}

Mat CartanD(std::size_t n) {
  if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 2, n);
  return Cartan(n, edges);
}

Mat CartanE6() { return Cartan(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}}); }
Mat CartanE7() { return Cartan(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}}); }
Mat CartanE8() {
  return Cartan(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}});
}

PolytopeRecord DeepHoleCell(const Mat& q, std::span<const Rat> c) {
  const std::size_t n = q.rows();
  const CvpResult closest = ClosestVectors(q, c);
  RatVec lin(n);
  const RatVec qc = q * c;
  for (std::size_t i = 0; i < n; ++i) lin[i] = -2 * qc[i];
  const QuadraticFunction f(q, lin, Bilinear(q, c, c) - closest.squared_distance);
  PolytopeRecord rec = VertexSetOf(f);
  IntMat affine(0, n + 1);
  for (const Point& v : rec.vertices) {
    IntVec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<long>(v[i]);
    row[n] = 1;
    affine.AppendRow(row);
  }
  if (Rank(affine) != n + 1) throw std::invalid_argument("cell is not full-dimensional");
  return rec;
}

PolytopeRecord SegmentSeed() {
  const Mat q{{Rat(1)}};
  const RatVec c{Rat(1, 2)};
  return DeepHoleCell(q, c);
}

PolytopeRecord Gosset221Seed() {
  const Mat a = CartanE6();
  return DeepHoleCell(a, FundamentalWeight(a, 1));
}

PolytopeRecord Gosset321Seed() {
  const Mat a = CartanE7();
  return DeepHoleCell(a, FundamentalWeight(a, 7));
}

PolytopeRecord UnitSlab(std::size_t n) {
  Mat g(n, n);
  g(0, 0) = 1;
  RatVec lin(n);
  lin[0] = -1;
  return VertexSetOf(QuadraticFunction(g, lin, Rat(0)));
}

PolytopeRecord ProductWithLine(const PolytopeRecord& p, std::size_t extra) {
  const std::size_t n = p.dim + extra;
  Mat g(n, n);
  RatVec lin(n);
  for (std::size_t i = 0; i < p.dim; ++i) {
    lin[i] = p.function.linear()[i];
    for (std::size_t j = 0; j < p.dim; ++j) g(i, j) = p.function.gram()(i, j);
  }
  return VertexSetOf(QuadraticFunction(g, lin, p.function.constant()));
}

std::vector<std::vector<int>> AffineFacets(const PolytopeRecord& p) {
  IntMat a(p.vertices.size(), p.dim + 1);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    for (std::size_t k = 0; k < p.dim; ++k) a(i, k) = p.vertices[i][k];
    a(i, p.dim) = 1;
  }
  return ConeFacets(a);
}

HingePencil LaminationPencil(const PolytopeRecord& p, const std::vector<int>& facet) {
  if (!p.bounded) throw std::invalid_argument("lamination of an unbounded record");
  const std::size_t n = p.dim;
  IntMat rows(facet.size(), n + 1);
  for (std::size_t i = 0; i < facet.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) rows(i, k) = p.vertices[facet[i]][k];
    rows(i, n) = 1;
  }
  const std::vector<IntVec> normal = IntegerKernel(rows);
  if (normal.size() != 1) throw std::invalid_argument("not a facet");
  std::vector<Int> value;
  for (const Point& v : p.vertices) {
    Int s = normal[0][n];
    for (std::size_t k = 0; k < n; ++k) s += normal[0][k] * v[k];
    value.push_back(s);
  }
  const Int lo = *std::min_element(value.begin(), value.end());
  const Int hi = *std::max_element(value.begin(), value.end());
  if (lo < 0 && hi > 0) throw std::invalid_argument("not a facet");
  const Int sign = hi > 0 ? 1 : -1;
  Int unit = 0;
  for (const Int& x : value) unit = gcd(unit, x);
  const Int top = sign * (hi > 0 ? hi : lo) / unit;

  // l(x) = sign (normal . (x, 1)) / unit.
  Mat gram(n + 1, n + 1);
  RatVec lin(n + 1);
  Rat c(top, 2);
  c.canonicalize();
  gram(n, n) = c;
  for (std::size_t k = 0; k < n; ++k) {
    Rat half(sign * normal[0][k], 2 * unit);
    half.canonicalize();
    gram(n, k) = gram(k, n) = half;
  }
  Rat shift(sign * normal[0][n], unit);
  shift.canonicalize();
  lin[n] = shift - c;
  lin[n].canonicalize();

  HingePencil pencil;
  pencil.f = ProductWithLine(p, 1).function;
  pencil.g = QuadraticFunction(gram, lin, 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Point x = p.vertices[i];
    x.push_back(0);
    pencil.ridge.push_back(x);
    const Int layer = sign * value[i] / unit;
    if (layer == 0 || layer == top) {
      x.back() = layer == 0 ? 1 : -1;
      pencil.ridge.push_back(x);
    }
  }
  std::sort(pencil.ridge.begin(), pencil.ridge.end());
  return pencil;
}

PolytopeRecord Laminated321Seed() {
  const PolytopeRecord p = Gosset321Seed();
  for (const std::vector<int>& facet : AffineFacets(p))
    if (facet.size() == p.dim) return Flip(LaminationPencil(p, facet)).new_record;
  throw std::logic_error("3_21 has no simplex facet");
}

}  // namespace pdel
