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

// Known perfect Delaunay polytopes used to seed explorations.

#ifndef PDEL_SEEDS_H_
#define PDEL_SEEDS_H_

#include <vector>

#include "pdel/delaunay.h"
#include "pdel/exact.h"
#include "pdel/hinge.h"

namespace pdel {

// Coordinates of the k-th fundamental weight (1-based) in the root basis.
RatVec FundamentalWeight(const Mat& cartan, std::size_t k);

// Cartan matrices in Bourbaki numbering (for E_n, node 2 hangs off node 4).
Mat CartanA(std::size_t n);
Mat CartanD(std::size_t n);
Mat CartanE6();
Mat CartanE7();
Mat CartanE8();

// The Delaunay polytope of the lattice with gram matrix q whose
// circumcenter is c, as a record (throws if the cell is not full-dimensional).
PolytopeRecord DeepHoleCell(const Mat& q, std::span<const Rat> c);

// [0, 1] in Z^1.
PolytopeRecord SegmentSeed();
// The Gosset polytope 2_21 as the deep hole of E6 at the fundamental weight 1.
PolytopeRecord Gosset221Seed();
// The Gosset polytope 3_21 as the deep hole of E7 at the fundamental weight 7.
PolytopeRecord Gosset321Seed();

// The unit slab {0 <= x_1 <= 1} in Z^n.
PolytopeRecord UnitSlab(std::size_t n);

// p x Z^extra: the function ignores the new coordinates.
PolytopeRecord ProductWithLine(const PolytopeRecord& p, std::size_t extra);

// Facets of conv(p.vertices) as sorted vertex index lists.
std::vector<std::vector<int>> AffineFacets(const PolytopeRecord& p);

// A pencil on the lamination p x Z, for a bounded perfect p and a facet
// {l = 0} of conv(p.vertices), with l scaled to take the values 0..top on the
// vertices. The ridge is p x {0}, the facet at height 1 and the layer
// {l = top} at height -1; g = (top / 2) t (t - 1) + t l(x) where t is the new
// coordinate. Throws std::invalid_argument if `facet` is not a facet.
HingePencil LaminationPencil(const PolytopeRecord& p, const std::vector<int>& facet);

// A perfect Delaunay polytope in Z^8 with 72 vertices: the flip of 3_21 x Z
// across the pencil of its first simplex facet.
PolytopeRecord Laminated321Seed();

}  // namespace pdel

#endif  // PDEL_SEEDS_H_
