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

#include "pdel/group.h"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"

namespace pdel {
namespace {

// Closure of the generators under composition, by breadth-first search.
std::set<Perm> Closure(std::size_t n, const std::vector<Perm>& gens) {
  std::set<Perm> seen{IdentityPerm(n)};
  std::vector<Perm> queue{IdentityPerm(n)};
  while (!queue.empty()) {
    const Perm p = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm q = Compose(g, p);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return seen;
}

// 1-based cycle notation.
Perm FromCycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Perm p = IdentityPerm(n);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  return p;
}

Perm RandomPerm(std::size_t n, std::mt19937_64& rng) {
  Perm p = IdentityPerm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(GroupTest, ComposeAppliesRightFactorFirst) {
  const Perm a{1, 2, 0};
  const Perm b{1, 0, 2};
  EXPECT_EQ(Compose(a, b), (Perm{2, 1, 0}));
  EXPECT_TRUE(IsIdentity(Compose(a, Inverse(a))));
}

TEST(GroupTest, SymmetricAndDihedralOrders) {
  for (std::size_t n = 2; n <= 9; ++n) {
    Perm cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>((i + 1) % n);
    Perm swap = IdentityPerm(n);
    std::swap(swap[0], swap[1]);
    Int factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= static_cast<unsigned long>(i);
    EXPECT_EQ(PermGroup(n, {cycle, swap}).Order(), factorial);
    if (n < 3) continue;
    Perm reflect(n);
    for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<int>((n - i) % n);
    EXPECT_EQ(PermGroup(n, {cycle, reflect}).Order(), Int(2 * n));
  }
}

TEST(GroupTest, MathieuGroupM11) {
  const PermGroup m11(11, {FromCycles(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                           FromCycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})});
  EXPECT_EQ(m11.Order(), 7920);
  // An odd permutation is not in M11.
  EXPECT_FALSE(m11.Contains(FromCycles(11, {{1, 2}})));
}

TEST(GroupTest, OrderAndMembershipMatchClosure) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 5;
    std::vector<Perm> gens;
    const int count = 1 + trial % 3;
    for (int i = 0; i < count; ++i) {
      // Sparse generators keep some groups small and intransitive.
      Perm p = IdentityPerm(n);
      if (trial % 2) {
        std::swap(p[rng() % n], p[rng() % n]);
      } else {
        p = RandomPerm(n, rng);
      }
      gens.push_back(p);
    }
    const PermGroup g(n, gens);
    const std::set<Perm> closure = Closure(n, gens);
    EXPECT_EQ(g.Order(), Int(static_cast<unsigned long>(closure.size())));
    for (int probe = 0; probe < 20; ++probe) {
      const Perm p = RandomPerm(n, rng);
      EXPECT_EQ(g.Contains(p), closure.count(p) > 0);
    }
    std::set<Perm> visited;
    g.ForEachElement([&](const Perm& p) {
      visited.insert(p);
      return true;
    });
    EXPECT_EQ(visited, closure);
  }
}

TEST(GroupTest, OrbitsOfIntransitiveGroup) {
  const PermGroup g(6, {FromCycles(6, {{1, 3}}), FromCycles(6, {{3, 5}}), FromCycles(6, {{2, 4}})});
  EXPECT_EQ(g.Orbits(), (std::vector<std::vector<int>>{{0, 2, 4}, {1, 3}, {5}}));
  EXPECT_EQ(g.Order(), 12);
}

TEST(GroupTest, ForEachElementStopsEarly) {
  const PermGroup g(5, {FromCycles(5, {{1, 2, 3, 4, 5}}), FromCycles(5, {{1, 2}})});
  int calls = 0;
  g.ForEachElement([&](const Perm&) { return ++calls < 7; });
  EXPECT_EQ(calls, 7);
}

TEST(GroupTest, TrivialGroup) {
  const PermGroup g(4, {});
  EXPECT_EQ(g.Order(), 1);
  EXPECT_TRUE(g.Contains(IdentityPerm(4)));
  EXPECT_FALSE(g.Contains(Perm{1, 0, 2, 3}));
}

}  // namespace
}  // namespace pdel
