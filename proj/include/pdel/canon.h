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

// Canonical labeling and automorphisms of vertex- and edge-colored complete
// graphs by individualization and refinement.
//
// The search tree is the usual one: refine an ordered partition to an
// equitable one, individualize each vertex of a target cell in turn, and
// recurse until the partition is discrete. Leaves are ranked by the trace of
// refinement invariants along their path and then by the permuted color
// matrix; the smallest leaf defines the canonical form. Subtrees are pruned
// by traces, by orbits of automorphisms fixing the current path, and by
// jumping back to the common ancestor whenever a leaf repeats a known one.

#ifndef PDEL_CANON_H_
#define PDEL_CANON_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdel/group.h"

namespace pdel {

struct ColoredGraph {
  std::size_t n = 0;
  std::vector<int> vertex_color;  // size n
  std::vector<int> edge_color;    // n * n, symmetric; diagonal ignored

  int color(std::size_t i, std::size_t j) const { return edge_color[i * n + j]; }
};

struct CanonicalForm {
  // labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
  // Vertex colors, then the strict upper triangle of the edge colors, in
  // canonical positions.
  std::vector<int> form;
  // Generators of the automorphism group of the graph.
  std::vector<Perm> automorphisms;
  std::size_t leaves_visited = 0;
};

CanonicalForm Canonicalize(const ColoredGraph& g);

// True iff p preserves all vertex and edge colors.
bool IsAutomorphism(const ColoredGraph& g, const Perm& p);

}  // namespace pdel

#endif  // PDEL_CANON_H_
