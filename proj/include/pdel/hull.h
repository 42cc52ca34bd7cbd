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

// Facets of a finitely generated pointed cone by the double description
// method, in exact integer arithmetic.
//
// The generators are expressed in coordinates of a basis chosen among them,
// which makes the cone full-dimensional in its linear span. The dual cone is
// then built one generator at a time starting from the orthant of the
// basis; adjacency of extreme rays is decided combinatorially from their
// zero sets.

#ifndef PDEL_HULL_H_
#define PDEL_HULL_H_

#include <cstddef>
#include <vector>

#include "pdel/exact.h"

namespace pdel {

// Facets of cone(rows of `generators`) relative to its linear span, each as
// the sorted list of generator indices it contains; sorted
// lexicographically. The cone must be pointed and no generator may be zero.
// A cone of dimension 1 has the single facet {}.
std::vector<std::vector<int>> ConeFacets(const IntMat& generators);

}  // namespace pdel

#endif  // PDEL_HULL_H_
