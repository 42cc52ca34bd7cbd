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

// Maximal qrank-2 vertex subsets of a perfect Delaunay polytope, up to its
// automorphism group.
//
// A linear functional on the monomial coordinates is a quadratic function,
// so the facets of the convex hull of the lifted vertices Monomials(v) are
// exactly the zero sets of quadratic functions that are nonnegative on the
// vertices and vanish on a subset of rank r - 1, where r is the rank of the
// whole lifted configuration. For a perfect polytope these are the maximal
// subsets of qrank 2.
//
// Facets are enumerated by the double description method. The adjacency
// decomposition backend finds one facet by descent from the constant
// function and rotates it across the ridges of each orbit representative.
// A gift-wrapping enumerator, recursive in the dimension, is kept as an
// independent cross-check.

#ifndef PDEL_RIDGES_H_
#define PDEL_RIDGES_H_

#include <cstddef>
#include <functional>
#include <vector>

#include "pdel/delaunay.h"
#include "pdel/equiv.h"
#include "pdel/exact.h"

namespace pdel {

struct RidgeOrbit {
  std::vector<Point> representative;  // sorted
  std::size_t orbit_size = 0;
  Int stabilizer_order;
};

enum class RidgeBackend {
  kAuto,
  // Every facet of the lifted configuration, grouped into orbits afterwards.
  kFullEnumeration,
  // One facet per orbit; only representatives are rotated.
  kAdjacencyDecomposition,
};

// Facets of conv(rows of `points`) restricted to `subset`, each as a sorted
// list of row indices. Deterministic order.
std::vector<std::vector<int>> LiftedFacets(const IntMat& points,
                                           const std::vector<int>& subset);

// The same facets by recursive gift wrapping; sorted. Exponential in the
// excess of the configuration, so meant for small inputs.
std::vector<std::vector<int>> LiftedFacetsByGiftWrapping(const IntMat& points,
                                                         const std::vector<int>& subset);

// One facet of conv(rows of `points`) restricted to `subset`, found by
// descent from the constant function.
std::vector<int> FirstLiftedFacet(const IntMat& points, const std::vector<int>& subset);

// Ridge orbits of a perfect bounded record under `aut`.
std::vector<RidgeOrbit> RidgeOrbits(const PolytopeRecord& p, const AutGroup& aut,
                                    RidgeBackend backend = RidgeBackend::kAuto);

bool Qrank2Check(std::span<const Point> s, std::size_t dim);

}  // namespace pdel

#endif  // PDEL_RIDGES_H_
