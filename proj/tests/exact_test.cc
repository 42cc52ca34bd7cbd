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

#include "pdel/exact.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace pdel {
namespace {

using testing::Frac;
using testing::LaplaceDeterminant;
using testing::RandomUnimodular;
using testing::Uniform;

Mat RandomMatrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Frac(Uniform(rng, -4, 4), Uniform(rng, 1, 3));
  return m;
}

// Rank-deficient matrix: product of random rows x k and k x cols.
Mat RandomRank(std::size_t rows, std::size_t cols, std::size_t k, std::mt19937_64& rng) {
  return RandomMatrix(rows, k, rng) * RandomMatrix(k, cols, rng);
}

TEST(ExactTest, DeterminantMatchesLaplaceExpansion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Mat m = RandomMatrix(n, n, rng);
    EXPECT_EQ(Determinant(m), LaplaceDeterminant(m));
  }
}

TEST(ExactTest, IntegerDeterminant) {
  const IntMat m{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  EXPECT_EQ(Determinant(m), Int(0 + 2 * (3 - 2) - 0 + 1 * (1 - 3)));
}

TEST(ExactTest, RankOfLowRankProducts) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + trial % 4, cols = 3 + trial % 3;
    const std::size_t k = 1 + trial % std::min(rows, cols);
    const Mat m = RandomRank(rows, cols, k, rng);
    // Rank is at most k; a nonzero minor of size r certifies rank >= r.
    const std::size_t r = Rank(m);
    EXPECT_LE(r, k);
    EXPECT_EQ(Nullspace(m).size(), cols - r);
  }
}

TEST(ExactTest, NullspaceVectorsAreKernelVectors) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat m = RandomRank(3, 6, 2, rng);
    for (const IntVec& v : Nullspace(m)) {
      const RatVec image = m * ToRat(v);
      for (const Rat& x : image) EXPECT_EQ(x, 0);
      Int g = 0;
      for (const Int& x : v) g = gcd(g, x);
      EXPECT_EQ(g, 1);
    }
  }
}

TEST(ExactTest, SolveFindsSolutionOrReportsInconsistency) {
  const Mat a{{1, 2}, {2, 4}};
  EXPECT_FALSE(Solve(a, Mat{{1}, {3}}).has_value());
  const auto x = Solve(a, Mat{{1}, {2}});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, (Mat{{1}, {2}}));
}

TEST(ExactTest, HermiteFormIsUnimodularTransform) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat m(4, 3);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = Uniform(rng, -5, 5);
    const HermiteForm h = Hnf(m);
    EXPECT_EQ(h.u * m, h.h);
    EXPECT_EQ(abs(Determinant(h.u)), 1);
    EXPECT_EQ(h.rank, Rank(m));
    // Upper echelon with positive, dominating pivots.
    std::size_t col = 0;
    for (std::size_t r = 0; r < h.rank; ++r) {
      while (h.h(r, col) == 0) ++col;
      EXPECT_GT(h.h(r, col), 0);
      for (std::size_t above = 0; above < r; ++above) {
        EXPECT_GE(h.h(above, col), 0);
        EXPECT_LT(h.h(above, col), h.h(r, col));
      }
      for (std::size_t below = r + 1; below < 4; ++below) EXPECT_EQ(h.h(below, col), 0);
    }
  }
}

TEST(ExactTest, IntegerKernelIsSaturated) {
  // A common factor in the row must not leak into the kernel basis.
  const IntMat m{{2, 4, 6}};
  const std::vector<IntVec> k = IntegerKernel(m);
  ASSERT_EQ(k.size(), 2u);
  // Saturated iff the 2x2 minors of the basis have gcd 1.
  Int g = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) g = gcd(g, k[0][i] * k[1][j] - k[0][j] * k[1][i]);
  EXPECT_EQ(g, 1);
}

TEST(ExactTest, SplitKernelCompletesToUnimodularBasis) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    // Q = U^T diag(d, 0...) U for unimodular U has a saturated kernel.
    const std::size_t n = 2 + trial % 3;
    const IntMat u = RandomUnimodular(n, rng);
    Mat d(n, n);
    d(0, 0) = 1 + trial % 3;
    const Mat q = ToRat(u).Transposed() * d * ToRat(u);
    const KernelSplit s = SplitKernel(q);
    ASSERT_EQ(s.kernel.cols(), n - 1);
    IntMat basis(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < s.complement.cols(); ++c) basis(r, c) = s.complement(r, c);
      for (std::size_t c = 0; c < s.kernel.cols(); ++c)
        basis(r, s.complement.cols() + c) = s.kernel(r, c);
    }
    EXPECT_EQ(abs(Determinant(basis)), 1);
    const Mat qk = q * ToRat(s.kernel);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < qk.cols(); ++c) EXPECT_EQ(qk(r, c), 0);
  }
}

// Definiteness from principal minors: PSD iff every principal minor is >= 0,
// PD iff additionally the determinant is nonzero.
DefinitenessKind ByPrincipalMinors(const Mat& q) {
  const std::size_t n = q.rows();
  bool psd = true;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Mat sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = q(idx[r], idx[c]);
    if (LaplaceDeterminant(sub) < 0) psd = false;
  }
  if (!psd) return DefinitenessKind::kIndefinite;
  return LaplaceDeterminant(q) != 0 ? DefinitenessKind::kPositiveDefinite
                                    : DefinitenessKind::kPositiveSemidefinite;
}

TEST(ExactTest, DefinitenessMatchesPrincipalMinorTest) {
  std::mt19937_64 rng(16);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    // Gram matrices of a few random vectors, sometimes with a negative term.
    Mat q(n, n);
    const int terms = static_cast<int>(Uniform(rng, 1, n + 1));
    for (int t = 0; t < terms; ++t) {
      RatVec v(n);
      for (auto& x : v) x = Uniform(rng, -2, 2);
      const Rat w = (trial % 5 == 0 && t == 0) ? Rat(-1) : Rat(1);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) q(r, c) += w * v[r] * v[c];
    }
    const Definiteness d = ClassifyDefiniteness(q);
    const DefinitenessKind expected = ByPrincipalMinors(q);
    ASSERT_EQ(d.kind, expected) << "trial " << trial;
    ++counts[static_cast<int>(expected)];
    if (d.kind == DefinitenessKind::kIndefinite) {
      const RatVec x = ToRat(d.negative_direction);
      EXPECT_LT(Bilinear(q, x, x), 0);
    }
    if (d.kind == DefinitenessKind::kPositiveSemidefinite) {
      EXPECT_EQ(d.kernel.size(), n - Rank(q));
      for (const IntVec& k : d.kernel)
        for (const Rat& x : q * ToRat(k)) EXPECT_EQ(x, 0);
    }
  }
  for (int c : counts) EXPECT_GT(c, 0);
}

TEST(ExactTest, ClassifyRejectsNonSymmetric) {
  EXPECT_THROW(ClassifyDefiniteness(Mat{{1, 2}, {0, 1}}), std::invalid_argument);
}

TEST(ExactTest, RoundingHelpers) {
  EXPECT_EQ(FloorOf(Rat(-7, 2)), -4);
  EXPECT_EQ(CeilOf(Rat(-7, 2)), -3);
  EXPECT_EQ(RoundOf(Rat(-7, 2)), -3);
  EXPECT_EQ(RoundOf(Rat(5, 3)), 2);
  EXPECT_THROW(ToInt(Rat(1, 2)), std::domain_error);
  const RatVec v{Rat(2, 3), Rat(-4, 9), 0};
  EXPECT_EQ(Primitive(v), (IntVec{3, -2, 0}));
}

}  // namespace
}  // namespace pdel
