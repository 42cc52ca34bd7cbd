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

#include "pdel/equiv.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "pdel/seeds.h"
#include "test_util.h"

namespace pdel {
namespace {

using testing::RandomAffine;

std::vector<Point> Image(const AffineMap& a, const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (const Point& p : pts) out.push_back(a.Apply(p));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(EquivTest, Sha256KnownVector) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(EquivTest, AutomorphismGroupOrders) {
  EXPECT_EQ(Automorphisms(SegmentSeed()).order, 2);
  EXPECT_EQ(Automorphisms(Gosset221Seed()).order, 51840);
}

TEST(EquivTest, GeneratorsAreRealizedAffinely) {
  const PolytopeRecord p = Gosset221Seed();
  const AutGroup aut = Automorphisms(p);
  ASSERT_EQ(aut.generators.size(), aut.affine_realizations.size());
  for (std::size_t k = 0; k < aut.generators.size(); ++k) {
    const AffineMap& a = aut.affine_realizations[k];
    EXPECT_EQ(abs(Determinant(a.l)), 1);
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      EXPECT_EQ(a.Apply(p.vertices[i]), p.vertices[aut.generators[k][i]]);
    EXPECT_EQ(Transform(p, a), p);
  }
}

TEST(EquivTest, CertificateIsInvariantUnderAffineMaps) {
  std::mt19937_64 rng(81);
  for (const PolytopeRecord& p : {SegmentSeed(), Gosset221Seed()}) {
    const std::string cert = Certificate(p);
    EXPECT_EQ(cert.size(), 64u);
    for (int t = 0; t < 8; ++t) {
      const PolytopeRecord q = Transform(p, RandomAffine(p.dim, rng));
      EXPECT_TRUE(IsPerfect(q));
      EXPECT_EQ(Certificate(q), cert);
      const AffineMap a = AreEquivalent(p, q);
      EXPECT_EQ(Image(a, p.vertices), q.vertices);
    }
  }
}

TEST(EquivTest, RealizePermutationRejectsNonAutomorphism) {
  const PolytopeRecord p = Gosset221Seed();
  Perm swap = IdentityPerm(p.vertices.size());
  std::swap(swap[0], swap[1]);
  // A transposition of two vertices fixes 25 of them, hence an affine basis.
  EXPECT_FALSE(RealizePermutation(p, p, swap).has_value());
  EXPECT_TRUE(RealizePermutation(p, p, IdentityPerm(p.vertices.size())).has_value());
}

TEST(EquivTest, DifferentShapesAreNotEquivalent) {
  EXPECT_THROW(AreEquivalent(SegmentSeed(), Gosset221Seed()), NotEquivalent);
  EXPECT_NE(Certificate(SegmentSeed()), Certificate(Gosset221Seed()));
}

TEST(EquivTest, InvariantGraphColors) {
  const InvariantGraph g = BuildInvariantGraph(Gosset221Seed());
  // Normalized 2_21 function: two distinct nonzero distances between
  // vertices, in a strongly regular pattern (degrees 16 and 10).
  ASSERT_EQ(g.colors.size(), 2u);
  EXPECT_LT(g.colors[0], g.colors[1]);
  for (std::size_t i = 0; i < g.graph.n; ++i) {
    int near = 0;
    for (std::size_t j = 0; j < g.graph.n; ++j) near += (i != j && g.graph.color(i, j) == 0);
    EXPECT_EQ(near, 16);
  }
  EXPECT_THROW(BuildInvariantGraph(UnitSlab(2)), std::invalid_argument);
}

TEST(EquivTest, UnboundedKeysOfTransformedSlabsAgree) {
  std::mt19937_64 rng(82);
  const std::string key = UnboundedKey(UnitSlab(3));
  EXPECT_EQ(key.rfind("unbounded:", 0), 0u);
  for (int t = 0; t < 5; ++t) EXPECT_EQ(UnboundedKey(Transform(UnitSlab(3), RandomAffine(3, rng))), key);
  EXPECT_NE(UnboundedKey(UnitSlab(2)), key);
}

}  // namespace
}  // namespace pdel
