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

// Delaunay polyhedra of Z^n as zero sets of nonnegative quadratic functions,
// and their perfection certificates.

#ifndef PDEL_DELAUNAY_H_
#define PDEL_DELAUNAY_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdel/exact.h"
#include "pdel/qfunc.h"

namespace pdel {

class NotDelaunay : public std::domain_error {
 public:
  explicit NotDelaunay(const std::string& why)
      : std::domain_error("not a Delaunay function: " + why) {}
};

// A Delaunay polyhedron {z : function(z) = 0} with function >= 0 on Z^n.
//
// Bounded records list every vertex. Unbounded records list the vertices of
// one bounded factor; the full lattice point set is vertices + span_Z(kernel).
struct PolytopeRecord {
  std::size_t dim = 0;
  std::vector<Point> vertices;  // sorted lexicographically
  QuadraticFunction function;   // normalized, lattice minimum 0
  bool bounded = true;
  std::vector<Point> kernel;

  friend bool operator==(const PolytopeRecord&, const PolytopeRecord&) = default;
};

// Quadratic functions through all of `points`: the vanishing space. The
// caller picks members with a suitable gram part.
std::vector<QuadraticFunction> Circumscribe(std::span<const Point> points,
                                            std::size_t dim);

// Shifts f so its minimum over Z^n is 0 and returns the zero set. Throws
// NotDelaunay when f is indefinite or unbounded below on Z^n. (The kernel of
// a rational form is always spanned by lattice vectors, so the irrational
// kernel case cannot arise here.)
PolytopeRecord VertexSetOf(const QuadraticFunction& f);

// The lattice point sample whose vanishing space equals that of the full
// (possibly infinite) zero set: the vertices, translated by 0, k_j, 2 k_j and
// k_i + k_j for the kernel basis vectors k. A quadratic function vanishing on
// it restricts to a polynomial of degree <= 2 on each translate line/plane
// that vanishes on a unisolvent set, hence vanishes on the whole zero set.
std::vector<Point> ZeroSetSample(const PolytopeRecord& p);

// qrank of the zero set equals 1.
bool IsPerfect(const PolytopeRecord& p);
bool IsPerfect(const QuadraticFunction& f);

// Splitting of an unbounded perfect record into a bounded
// perfect polytope and a complementary lattice.
struct Decomposition {
  // The bounded factor in coordinates y of the sublattice origin + L y.
  PolytopeRecord factor;
  Point origin;
  IntMat embedding;     // n x (n - k), basis of Z^n cap (aff D - aff D)
  std::vector<Point> gamma;
};

// Throws std::invalid_argument when p is bounded or not perfect, or when the
// direct-sum condition fails.
Decomposition Decompose(const PolytopeRecord& p);

// Lattice points of the zero set inside the box [-radius, radius]^n, sorted.
std::vector<Point> ZeroSetInBox(const PolytopeRecord& p, std::int64_t radius);

nlohmann::ordered_json ToJson(const PolytopeRecord& p);
PolytopeRecord PolytopeRecordFromJson(const nlohmann::ordered_json& j);

nlohmann::ordered_json PointToJson(const Point& p);
Point PointFromJson(const nlohmann::ordered_json& j);

}  // namespace pdel

#endif  // PDEL_DELAUNAY_H_
