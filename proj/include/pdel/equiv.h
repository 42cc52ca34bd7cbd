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

// Arithmetic equivalence of perfect Delaunay polytopes under affine
// automorphisms z -> L z + t of Z^n.
//
// A perfect polytope determines its circumscribing function up to scale, so
// any arithmetic equivalence is an isometry for the normalized gram forms and
// preserves the pairwise values Q[v_i - v_j]. Equivalences are searched as
// color-preserving bijections of the complete graph colored by these values
// and then confirmed by solving for (L, t) on an affinely spanning vertex
// subset. That check is exact, so the procedure never reports a false
// equivalence.
//
// Certificates are the lowercase hex SHA-256 digest of
//   "pdel-cert/1|dim=<n>|m=<#vertices>|colors=<c_0>,<c_1>,...|form=<...>"
// where the colors are the distinct values Q[v_i - v_j] in increasing order
// and form is the canonical color matrix (strict upper triangle, color
// indices).

#ifndef PDEL_EQUIV_H_
#define PDEL_EQUIV_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdel/canon.h"
#include "pdel/delaunay.h"
#include "pdel/exact.h"
#include "pdel/group.h"

namespace pdel {

class NotEquivalent : public std::runtime_error {
 public:
  NotEquivalent() : std::runtime_error("records are not arithmetically equivalent") {}
};

// z -> l z + t.
struct AffineMap {
  IntMat l;
  IntVec t;

  Point Apply(const Point& z) const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct AutGroup {
  std::vector<Perm> generators;  // permutations of the vertex list
  Int order;
  std::vector<AffineMap> affine_realizations;  // one per generator
};

struct InvariantGraph {
  ColoredGraph graph;
  std::vector<Rat> colors;  // color id -> value, increasing
};

// Throws std::invalid_argument if p is unbounded or not perfect.
InvariantGraph BuildInvariantGraph(const PolytopeRecord& p);

// The affine map sending vertex i of p to vertex perm[i] of q, when one
// exists in Aff_n(Z).
std::optional<AffineMap> RealizePermutation(const PolytopeRecord& p,
                                            const PolytopeRecord& q,
                                            const Perm& perm);

AutGroup Automorphisms(const PolytopeRecord& p);

// Some A in Aff_n(Z) with A(vertices(p)) = vertices(q). Throws NotEquivalent.
AffineMap AreEquivalent(const PolytopeRecord& p, const PolytopeRecord& q);

std::string Certificate(const PolytopeRecord& p);

// Key for unbounded records: certificate of the bounded factor and the
// rank of the complementary lattice.
std::string UnboundedKey(const PolytopeRecord& p);

// Image of a record under an affine map; vertices re-sorted and the
// function transformed and normalized.
PolytopeRecord Transform(const PolytopeRecord& p, const AffineMap& a);

std::string Sha256Hex(const std::string& data);

}  // namespace pdel

#endif  // PDEL_EQUIV_H_
