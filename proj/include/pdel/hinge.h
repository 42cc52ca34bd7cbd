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

// Crossing a ridge of the cone of nonnegative quadratic functions.
//
// For a perfect function f and a vertex subset S of qrank 2, the functions
// vanishing on S form a pencil span{f, g}. Rotating the supporting hyperplane
// around S means following f + rho * g for growing rho until it stops being
// nonnegative on Z^n; the last admissible rho_m gives the neighbouring
// perfect function.

#ifndef PDEL_HINGE_H_
#define PDEL_HINGE_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "pdel/delaunay.h"
#include "pdel/exact.h"
#include "pdel/qfunc.h"

namespace pdel {

class QrankMismatch : public std::invalid_argument {
 public:
  explicit QrankMismatch(std::size_t qrank)
      : std::invalid_argument("ridge has qrank " + std::to_string(qrank) +
                              ", expected 2"),
        qrank_(qrank) {}
  std::size_t qrank() const { return qrank_; }

 private:
  std::size_t qrank_;
};

class SignAmbiguous : public std::invalid_argument {
 public:
  SignAmbiguous()
      : std::invalid_argument(
            "no pencil member is positive on the vertices off the ridge") {}
};

// g >= 0 on all of Z^n: the hinge never stops.
class UnboundedRidge : public std::domain_error {
 public:
  UnboundedRidge() : std::domain_error("hinge parameter is unbounded") {}
};

struct HingePencil {
  QuadraticFunction f;
  QuadraticFunction g;
  std::vector<Point> ridge;       // sorted
  std::vector<Point> off_ridge;   // source zeros not on the ridge
};

struct FlipResult {
  Rat rho_m;
  PolytopeRecord new_record;
  Point witness;
  std::size_t iterations = 0;
};

// The pencil of `p` around `ridge`. g is the member of vanishing_space(S)
// whose coefficient at the first nonzero monomial of f is zero, signed so
// that g > 0 on vertices(p) \ S. If that g is nonnegative on all of Z^n,
// multiples of f are subtracted (f, 2f, 4f, ...) until it is not, so the
// flip ends at a finite rho_m. Scaled to primitive integers. For an
// unbounded p the sign is fixed on the zero set sample and the zeros in the
// box of radius 1 instead.
// Throws std::invalid_argument if S is not in the zero set of p,
// QrankMismatch if qrank(S) != 2, SignAmbiguous if no member has a uniform
// sign off the ridge, UnboundedRidge if no finite completion is found.
HingePencil RidgeGenerator(const PolytopeRecord& p, std::span<const Point> ridge);

// Follows the pencil to rho_m. Deterministic. Throws UnboundedRidge, and
// std::logic_error if the iteration cap is hit.
FlipResult Flip(const HingePencil& pencil, std::size_t max_iterations = 100000);

// Convenience: RidgeGenerator then Flip.
FlipResult FlipAcross(const PolytopeRecord& p, std::span<const Point> ridge);

// A Delaunay polytope of Z^n for the metric q whose circumsphere passes
// through the lattice points closest to c. The empty ellipsoid through the
// closest vectors is rotated around its zero set until that set is affinely
// full-dimensional.
PolytopeRecord GrowDelaunayCell(const Mat& q, std::span<const Rat> c);

}  // namespace pdel

#endif  // PDEL_HINGE_H_
