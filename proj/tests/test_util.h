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

// Random instances and brute-force oracles shared by the tests.

#ifndef PDEL_TESTS_TEST_UTIL_H_
#define PDEL_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "pdel/cvp.h"
#include "pdel/equiv.h"
#include "pdel/exact.h"

namespace pdel::testing {

inline std::int64_t Uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// a / b in canonical form.
inline Rat Frac(std::int64_t a, std::int64_t b) {
  Rat q(a, b);
  q.canonicalize();
  return q;
}

// Product of random elementary column operations, a permutation and signs.
inline IntMat RandomUnimodular(std::size_t n, std::mt19937_64& rng, int steps = 6) {
  IntMat m = IntMat::Identity(n);
  if (n < 2) {
    if (n == 1 && Uniform(rng, 0, 1)) m(0, 0) = -1;
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(Uniform(rng, 0, n - 1));
    auto j = static_cast<std::size_t>(Uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    const Int k = Uniform(rng, -1, 1);
    for (std::size_t r = 0; r < n; ++r) m(r, j) += k * m(r, i);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMat out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const int sign = Uniform(rng, 0, 1) ? 1 : -1;
    for (std::size_t r = 0; r < n; ++r) out(r, c) = m(r, perm[c]) * sign;
  }
  return out;
}

inline AffineMap RandomAffine(std::size_t n, std::mt19937_64& rng) {
  AffineMap a;
  a.l = RandomUnimodular(n, rng);
  a.t.resize(n);
  for (auto& x : a.t) x = Uniform(rng, -3, 3);
  return a;
}

// B^T B + D with small random integer B and positive diagonal D.
inline Mat RandomPositiveDefinite(std::size_t n, std::mt19937_64& rng) {
  Mat b(n, n), q(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b(r, c) = Uniform(rng, -2, 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < n; ++k) q(r, c) += b(k, r) * b(k, c);
      if (r == c) q(r, c) += Frac(Uniform(rng, 1, 4), Uniform(rng, 1, 3));
    }
  return q;
}

// Laplace expansion along the first row.
inline Rat LaplaceDeterminant(const Mat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rat det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Rat term = m(0, c) * LaplaceDeterminant(minor);
    det += (c % 2 == 0) ? term : Rat(-term);
  }
  return det;
}

// Calls fn on every point of [lo, hi]^n in lexicographic order.
inline void ForEachInBox(std::size_t n, std::int64_t lo, std::int64_t hi,
                         const std::function<void(const Point&)>& fn) {
  Point x(n, lo);
  while (true) {
    fn(x);
    std::size_t i = n;
    while (i > 0 && x[i - 1] == hi) x[--i] = lo;
    if (i == 0) return;
    ++x[i - 1];
  }
}

inline Rat SquaredDistance(const Mat& q, const Point& x, std::span<const Rat> c) {
  RatVec d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = Rat(x[i]) - c[i];
  return Bilinear(q, d, d);
}

// Every x in the box with distance <= bound. The box [c - r, c + r] with
// r_i^2 = bound * (q^-1)_ii contains the whole ellipsoid.
inline std::vector<Point> ExhaustiveEllipsoid(const Mat& q, std::span<const Rat> c,
                                              const Rat& bound) {
  const std::size_t n = q.rows();
  const Mat inv = *Solve(q, Mat::Identity(n));
  std::int64_t radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rat r2 = bound * inv(i, i);
    std::int64_t r = 0;
    while (Rat(r * r) < r2) ++r;
    radius = std::max(radius, r);
  }
  std::int64_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lo = std::min<std::int64_t>(lo, FloorOf(c[i]).get_si() - radius - 1);
    hi = std::max<std::int64_t>(hi, CeilOf(c[i]).get_si() + radius + 1);
  }
  std::vector<Point> out;
  ForEachInBox(n, lo, hi, [&](const Point& x) {
    if (SquaredDistance(q, x, c) <= bound) out.push_back(x);
  });
  return out;
}

}  // namespace pdel::testing

#endif  // PDEL_TESTS_TEST_UTIL_H_
