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

#include "pdel/delaunay.h"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "pdel/cvp.h"

namespace pdel {

namespace {

Point ColumnAsPoint(const IntMat& m, std::size_t c) {
  const IntVec col = m.column(c);
  return ToPoint(std::span<const Int>(col));
}

Point Apply(const IntMat& m, const Point& y, const Point& shift) {
  Point x = shift.empty() ? Point(m.rows(), 0) : shift;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int acc = x[i];
    for (std::size_t j = 0; j < m.cols(); ++j)
      acc += m(i, j) * static_cast<long>(y[j]);
    x[i] = ToInt64(acc);
  }
  return x;
}

Point Add(const Point& a, const Point& b, std::int64_t scale = 1) {
  Point c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + scale * b[i];
  return c;
}

IntMat ColumnsOf(std::span<const Point> cols, std::size_t n) {
  IntMat m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = static_cast<long>(cols[j][i]);
  return m;
}

// Integer solution y of m y = x, or nullopt.
std::optional<Point> SolveIntegral(const IntMat& m, const Point& x) {
  Mat rhs(x.size(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) rhs(i, 0) = static_cast<long>(x[i]);
  const auto sol = Solve(ToRat(m), rhs);
  if (!sol) return std::nullopt;
  // Columns of m are independent in every caller, so the solution is unique.
  Point y(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Rat& v = (*sol)(j, 0);
    if (v.get_den() != 1) return std::nullopt;
    y[j] = ToInt64(v.get_num());
  }
  return y;
}

void ForEachInBox(std::size_t n, std::int64_t radius,
                  const std::function<void(const Point&)>& fn) {
  Point z(n, -radius);
  if (n == 0) {
    fn(z);
    return;
  }
  while (true) {
    fn(z);
    std::size_t i = 0;
    while (i < n && z[i] == radius) z[i++] = -radius;
    if (i == n) return;
    ++z[i];
  }
}

bool InBox(const Point& z, std::int64_t radius) {
  return std::all_of(z.begin(), z.end(), [radius](std::int64_t c) {
    return c >= -radius && c <= radius;
  });
}

}  // namespace

std::vector<QuadraticFunction> Circumscribe(std::span<const Point> points,
                                            std::size_t dim) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  return VanishingSpace(points, dim);
}

PolytopeRecord VertexSetOf(const QuadraticFunction& f) {
  const std::size_t n = f.dim();
  PolytopeRecord rec;
  rec.dim = n;
  if (n == 0) {
    rec.vertices = {Point{}};
    rec.function = QuadraticFunction(0);
    return rec;
  }
  const Definiteness def = ClassifyDefiniteness(f.gram());
  switch (def.kind) {
    case DefinitenessKind::kIndefinite:
      throw NotDelaunay("indefinite gram part");
    case DefinitenessKind::kPositiveDefinite: {
      LatticeMinimum m = MinimumOverLattice(f);
      rec.vertices = std::move(m.minimizers);
      rec.function =
          (f - QuadraticFunction(Mat(n, n), RatVec(n), m.value)).Normalized();
      return rec;
    }
    case DefinitenessKind::kPositiveSemidefinite:
      break;
  }
  const KernelSplit split = SplitKernel(f.gram());
  for (std::size_t k = 0; k < split.kernel.cols(); ++k) {
    Rat slope = 0;
    for (std::size_t i = 0; i < n; ++i)
      slope += f.linear()[i] * Rat(split.kernel(i, k));
    if (slope != 0) throw NotDelaunay("unbounded below along the kernel");
  }
  rec.bounded = false;
  for (std::size_t k = 0; k < split.kernel.cols(); ++k)
    rec.kernel.push_back(ColumnAsPoint(split.kernel, k));
  const QuadraticFunction reduced = f.Substitute(split.complement, IntVec(n));
  Rat minimum;
  if (reduced.dim() == 0) {
    minimum = reduced.constant();
    rec.vertices = {Point(n, 0)};
  } else {
    LatticeMinimum m = MinimumOverLattice(reduced);
    minimum = m.value;
    for (const Point& y : m.minimizers)
      rec.vertices.push_back(Apply(split.complement, y, {}));
    std::sort(rec.vertices.begin(), rec.vertices.end());
  }
  rec.function =
      (f - QuadraticFunction(Mat(n, n), RatVec(n), minimum)).Normalized();
  return rec;
}

std::vector<Point> ZeroSetSample(const PolytopeRecord& p) {
  std::vector<Point> sample;
  for (const Point& v : p.vertices) {
    sample.push_back(v);
    for (std::size_t j = 0; j < p.kernel.size(); ++j) {
      sample.push_back(Add(v, p.kernel[j]));
      sample.push_back(Add(v, p.kernel[j], 2));
      for (std::size_t i = 0; i < j; ++i)
        sample.push_back(Add(Add(v, p.kernel[i]), p.kernel[j]));
    }
  }
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  return sample;
}

bool IsPerfect(const PolytopeRecord& p) {
  return Qrank(ZeroSetSample(p), p.dim) == 1;
}

bool IsPerfect(const QuadraticFunction& f) { return IsPerfect(VertexSetOf(f)); }

std::vector<Point> ZeroSetInBox(const PolytopeRecord& p, std::int64_t radius) {
  std::vector<Point> out;
  ForEachInBox(p.dim, radius, [&](const Point& z) {
    if (p.function.Evaluate(z) == 0) out.push_back(z);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition Decompose(const PolytopeRecord& p) {
  if (p.bounded) throw std::invalid_argument("record is bounded");
  if (!IsPerfect(p)) throw std::invalid_argument("record is not perfect");
  const std::size_t n = p.dim;
  Decomposition out;
  out.origin = p.vertices.front();
  out.gamma = p.kernel;

  // Z^n cap (aff D - aff D): saturate the difference lattice.
  IntMat diffs(0, n);
  for (const Point& v : p.vertices) {
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<long>(v[i] - out.origin[i]);
    diffs.AppendRow(d);
  }
  const std::vector<IntVec> normals = Nullspace(diffs);
  IntMat normal_rows(0, n);
  for (const IntVec& r : normals) normal_rows.AppendRow(r);
  const std::vector<IntVec> basis = IntegerKernel(normal_rows);
  out.embedding = IntMat(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) out.embedding(i, j) = basis[j][i];

  // Direct sum: [L_D | Gamma] must be a basis of Z^n.
  if (basis.size() + out.gamma.size() != n)
    throw std::invalid_argument("bounded factor is not complementary");
  IntMat joint(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) joint(i, j) = basis[j][i];
    for (std::size_t j = 0; j < out.gamma.size(); ++j)
      joint(i, basis.size() + j) = static_cast<long>(out.gamma[j][i]);
  }
  const Int det = Determinant(joint);
  if (det != 1 && det != -1)
    throw std::invalid_argument("aff D and Gamma do not split Z^n");

  // D in coordinates of the sublattice.
  IntVec shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<long>(out.origin[i]);
  const QuadraticFunction restricted = p.function.Substitute(out.embedding, shift);
  std::vector<Point> ys;
  for (const Point& v : p.vertices) {
    const auto y = SolveIntegral(out.embedding, Add(v, out.origin, -1));
    if (!y) throw std::invalid_argument("vertex outside the sublattice");
    ys.push_back(*y);
  }
  std::sort(ys.begin(), ys.end());
  out.factor = VertexSetOf(restricted);
  if (!out.factor.bounded || out.factor.vertices != ys || !IsPerfect(out.factor))
    throw std::invalid_argument("bounded factor is not a perfect polytope");

  // Reconstruction on a probe box.
  const std::int64_t radius = n <= 4 ? 2 : 1;
  const IntMat gamma = ColumnsOf(out.gamma, n);
  for (const Point& z : ZeroSetInBox(p, radius)) {
    bool hit = false;
    for (const Point& v : p.vertices) {
      if (SolveIntegral(gamma, Add(z, v, -1))) {
        hit = true;
        break;
      }
    }
    if (!hit) throw std::invalid_argument("reconstruction misses a zero");
  }
  for (const Point& v : p.vertices) {
    ForEachInBox(out.gamma.size(), radius, [&](const Point& t) {
      const Point z = Apply(gamma, t, v);
      if (InBox(z, radius) && p.function.Evaluate(z) != 0)
        throw std::invalid_argument("reconstruction adds a non-zero");
    });
  }
  return out;
}

nlohmann::ordered_json PointToJson(const Point& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::int64_t c : p) j.push_back(c);
  return j;
}

Point PointFromJson(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be an array");
  Point p;
  for (const auto& c : j) {
    if (!c.is_number_integer())
      throw std::invalid_argument("point coordinates must be integers");
    p.push_back(c.get<std::int64_t>());
  }
  return p;
}

nlohmann::ordered_json ToJson(const PolytopeRecord& p) {
  nlohmann::ordered_json j;
  j["dim"] = p.dim;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const Point& v : p.vertices) j["vertices"].push_back(PointToJson(v));
  j["function"] = ToJson(p.function);
  j["bounded"] = p.bounded;
  j["kernel"] = nlohmann::ordered_json::array();
  for (const Point& k : p.kernel) j["kernel"].push_back(PointToJson(k));
  return j;
}

PolytopeRecord PolytopeRecordFromJson(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("record must be an object");
  for (const char* key : {"dim", "vertices", "function"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing ") + key);
  if (!j["dim"].is_number_unsigned())
    throw std::invalid_argument("dim must be a nonnegative integer");
  PolytopeRecord p;
  p.dim = j["dim"].get<std::size_t>();
  if (!j["vertices"].is_array()) throw std::invalid_argument("vertices");
  for (const auto& v : j["vertices"]) {
    p.vertices.push_back(PointFromJson(v));
    if (p.vertices.back().size() != p.dim)
      throw std::invalid_argument("vertex dimension mismatch");
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  p.function = QuadraticFunctionFromJson(j["function"]);
  if (p.function.dim() != p.dim)
    throw std::invalid_argument("function dimension mismatch");
  p.bounded = j.value("bounded", true);
  if (j.contains("kernel")) {
    for (const auto& k : j["kernel"]) {
      p.kernel.push_back(PointFromJson(k));
      if (p.kernel.back().size() != p.dim)
        throw std::invalid_argument("kernel dimension mismatch");
    }
  }
  if (p.bounded != p.kernel.empty())
    throw std::invalid_argument("bounded flag disagrees with kernel");
  return p;
}

}  // namespace pdel
