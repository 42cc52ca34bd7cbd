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

#include "pdel/canon.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

namespace pdel {
namespace {

ColoredGraph RandomGraph(std::size_t n, int colors, std::mt19937_64& rng) {
  ColoredGraph g{n, std::vector<int>(n, 0), std::vector<int>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.edge_color[i * n + j] = g.edge_color[j * n + i] = static_cast<int>(rng() % colors);
  return g;
}

// h(p(i), p(j)) = g(i, j).
ColoredGraph Relabel(const ColoredGraph& g, const Perm& p) {
  ColoredGraph h{g.n, std::vector<int>(g.n), std::vector<int>(g.n * g.n)};
  for (std::size_t i = 0; i < g.n; ++i) {
    h.vertex_color[p[i]] = g.vertex_color[i];
    for (std::size_t j = 0; j < g.n; ++j) h.edge_color[p[i] * g.n + p[j]] = g.color(i, j);
  }
  return h;
}

// Number of automorphisms by trying every permutation.
std::size_t BruteAutCount(const ColoredGraph& g) {
  Perm p = IdentityPerm(g.n);
  std::size_t count = 0;
  do {
    count += IsAutomorphism(g, p) ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

ColoredGraph Cycle(std::size_t n) {
  ColoredGraph g{n, std::vector<int>(n, 0), std::vector<int>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    g.edge_color[i * n + j] = g.edge_color[j * n + i] = 1;
  }
  return g;
}

// Petersen graph: Kneser graph K(5, 2).
ColoredGraph Petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  ColoredGraph g{10, std::vector<int>(10, 0), std::vector<int>(100, 0)};
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      g.edge_color[i * 10 + j] = (a != c && a != d && b != c && b != d) ? 1 : 0;
    }
  return g;
}

Int AutOrder(const CanonicalForm& c, std::size_t n) {
  return PermGroup(n, c.automorphisms).Order();
}

TEST(CanonTest, FormIsInvariantUnderRelabeling) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 10;
    ColoredGraph g = RandomGraph(n, 2 + trial % 3, rng);
    for (auto& c : g.vertex_color) c = static_cast<int>(rng() % 2);
    Perm p = IdentityPerm(n);
    std::shuffle(p.begin(), p.end(), rng);
    const CanonicalForm a = Canonicalize(g);
    const CanonicalForm b = Canonicalize(Relabel(g, p));
    EXPECT_EQ(a.form, b.form) << "trial " << trial;
    // The labeling realizes the form.
    const ColoredGraph canon = Relabel(g, a.labeling);
    std::vector<int> form = canon.vertex_color;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) form.push_back(canon.color(i, j));
    EXPECT_EQ(form, a.form);
  }
}

TEST(CanonTest, NonIsomorphicGraphsGetDifferentForms) {
  // C6 versus two triangles: same degree sequence.
  ColoredGraph triangles{6, std::vector<int>(6, 0), std::vector<int>(36, 0)};
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) triangles.edge_color[(base + i) * 6 + base + j] = 1;
  EXPECT_NE(Canonicalize(Cycle(6)).form, Canonicalize(triangles).form);
}

TEST(CanonTest, AutomorphismCountsMatchBruteForce) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const ColoredGraph g = RandomGraph(n, 2, rng);
    const CanonicalForm c = Canonicalize(g);
    for (const Perm& a : c.automorphisms) EXPECT_TRUE(IsAutomorphism(g, a));
    EXPECT_EQ(AutOrder(c, n), Int(static_cast<unsigned long>(BruteAutCount(g))))
        << "trial " << trial;
  }
}

TEST(CanonTest, KnownAutomorphismGroups) {
  EXPECT_EQ(AutOrder(Canonicalize(Cycle(7)), 7), 14);
  EXPECT_EQ(AutOrder(Canonicalize(Petersen()), 10), 120);
  ColoredGraph complete{8, std::vector<int>(8, 0), std::vector<int>(64, 1)};
  const CanonicalForm k8 = Canonicalize(complete);
  EXPECT_EQ(AutOrder(k8, 8), 40320);
  // Orbit pruning keeps the search tiny on a fully symmetric graph.
  EXPECT_LT(k8.leaves_visited, 64u);
}

TEST(CanonTest, VertexColorsRestrictAutomorphisms) {
  ColoredGraph g = Cycle(6);
  g.vertex_color[0] = 1;
  EXPECT_EQ(AutOrder(Canonicalize(g), 6), 2);
}

}  // namespace
}  // namespace pdel
