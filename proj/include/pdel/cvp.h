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

// Exact lattice point enumeration in ellipsoids: closest vectors, sublevel
// sets of quadratic functions and emptiness certificates.
//
// Enumeration is Fincke-Pohst style over the decomposition
//   Q[y] = sum_i d_i (y_i + sum_{j>i} mu_ij y_j)^2
// with every bound compared in exact rational arithmetic. Coordinates are
// visited in zig-zag order around each level's center, so each side of the
// walk is abandoned as soon as its partial sum exceeds the bound.

#ifndef PDEL_CVP_H_
#define PDEL_CVP_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pdel/exact.h"
#include "pdel/qfunc.h"

namespace pdel {

class NotPositiveDefinite : public std::domain_error {
 public:
  NotPositiveDefinite() : std::domain_error("form is not positive definite") {}
};

struct CvpResult {
  // All integer minimizers, sorted lexicographically.
  std::vector<Point> minimizers;
  Rat squared_distance;
};

// All integer x minimizing (x - c)^T q (x - c). Throws NotPositiveDefinite.
CvpResult ClosestVectors(const Mat& q, std::span<const Rat> c);

// Every integer x with (x - c)^T q (x - c) <= bound, sorted.
std::vector<Point> PointsInEllipsoid(const Mat& q, std::span<const Rat> c,
                                     const Rat& bound);

// {z in Z^n : f(z) <= bound}, sorted. Throws NotPositiveDefinite unless the
// gram part of f is positive definite.
std::vector<Point> PointsAtMost(const QuadraticFunction& f, const Rat& bound);

struct LatticeMinimum {
  Rat value;
  std::vector<Point> minimizers;
};

// min over Z^n of f and all minimizers; gram(f) positive definite.
LatticeMinimum MinimumOverLattice(const QuadraticFunction& f);

// A lattice point z with f(z) < 0, or nullopt when f >= 0 on all of Z^n.
// Positive definite forms are settled by a closest-vector computation (the
// returned point is a lexicographically first minimizer of f). Semidefinite
// forms are reduced modulo the kernel lattice, and indefinite forms are
// probed along a direction of negative curvature.
std::optional<Point> InteriorPoint(const QuadraticFunction& f);

}  // namespace pdel

#endif  // PDEL_CVP_H_
