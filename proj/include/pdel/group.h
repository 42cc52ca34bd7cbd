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

// Permutation groups on {0, ..., n-1} given by generators, with a
// Schreier-Sims base and strong generating set for order computations and
// membership tests.

#ifndef PDEL_GROUP_H_
#define PDEL_GROUP_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pdel/exact.h"

namespace pdel {

// perm[i] is the image of i.
using Perm = std::vector<int>;

Perm IdentityPerm(std::size_t n);
// (a * b)(i) = a(b(i)): apply b first.
Perm Compose(const Perm& a, const Perm& b);
Perm Inverse(const Perm& p);
bool IsIdentity(const Perm& p);

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  Int Order() const;
  bool Contains(const Perm& p) const;

  // Orbits of the whole group, each sorted, ordered by smallest element.
  std::vector<std::vector<int>> Orbits() const;

  // Calls fn on every element until it returns false. Elements are visited
  // in a fixed order determined by the stabilizer chain.
  void ForEachElement(const std::function<bool(const Perm&)>& fn) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<int> strong;  // indices into strong_ fixing earlier base points
    // transversal[x] maps base_point to x, for x in the basic orbit.
    std::vector<std::optional<Perm>> transversal;
    std::vector<int> orbit;
  };

  // Returns the residue of sifting p and the level where it stopped.
  std::pair<Perm, std::size_t> Sift(const Perm& p) const;
  void RebuildLevel(std::size_t level);

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<Level> chain_;
};

}  // namespace pdel

#endif  // PDEL_GROUP_H_
