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

// Quadratic functions on R^n and the lift of lattice points into the space of
// constant-free quadratic functions.
//
// A quadratic function is stored as F(x) = x^T G x + b.x + k with G
// symmetric. The monomial coordinates used for fitting and normalization are
// the coefficients of x_i x_j (i <= j), then x_i, then 1, in that order; the
// coefficient of x_i x_j for i < j is 2 G_ij.

#ifndef PDEL_QFUNC_H_
#define PDEL_QFUNC_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdel/exact.h"

namespace pdel {

// Number of monomials of degree <= 2 in n variables: dim of the space of
// quadratic functions on R^n.
constexpr std::size_t MonomialCount(std::size_t n) {
  return n * (n + 1) / 2 + n + 1;
}

// Dimension of the constant-free subspace.
constexpr std::size_t LiftedDimension(std::size_t n) {
  return MonomialCount(n) - 1;
}

class QuadraticFunction {
 public:
  QuadraticFunction() = default;
  explicit QuadraticFunction(std::size_t dim);
  // Throws std::invalid_argument if `gram` is not symmetric or sizes differ.
  QuadraticFunction(Mat gram, RatVec linear, Rat constant);

  // From monomial coefficients (see file comment).
  static QuadraticFunction FromCoefficients(std::size_t dim,
                                            std::span<const Rat> coeffs);
  static QuadraticFunction FromCoefficients(std::size_t dim,
                                            std::span<const Int> coeffs);

  std::size_t dim() const { return dim_; }
  const Mat& gram() const { return gram_; }
  const RatVec& linear() const { return linear_; }
  const Rat& constant() const { return constant_; }

  Rat Evaluate(std::span<const std::int64_t> x) const;
  Rat Evaluate(std::span<const Rat> x) const;

  RatVec Coefficients() const;

  // The representative of the ray R_+ F with primitive integer monomial
  // coefficients. The sign makes the gram part positive semidefinite when
  // one of the two signs does; otherwise the leading nonzero coefficient is
  // positive. The zero function is returned unchanged.
  QuadraticFunction Normalized() const;

  // Rational center c with G c = -b/2, when G is invertible.
  RatVec Center() const;

  // F(L x + t), for an integer matrix L and translation t.
  QuadraticFunction Substitute(const IntMat& l, std::span<const Int> t) const;

  bool IsZero() const;

  friend QuadraticFunction operator+(const QuadraticFunction& a,
                                     const QuadraticFunction& b);
  friend QuadraticFunction operator-(const QuadraticFunction& a,
                                     const QuadraticFunction& b);
  friend QuadraticFunction operator*(const Rat& s, const QuadraticFunction& f);
  friend bool operator==(const QuadraticFunction& a,
                         const QuadraticFunction& b) {
    return a.dim_ == b.dim_ && a.gram_ == b.gram_ && a.linear_ == b.linear_ &&
           a.constant_ == b.constant_;
  }

  std::string DebugString() const;

 private:
  std::size_t dim_ = 0;
  Mat gram_;
  RatVec linear_;
  Rat constant_;
};

// Element of the constant-free function space: sym-matrix block plus vector
// block.
struct LiftedPoint {
  Mat sym;
  RatVec vec;
};

// u -> (x -> x^T (u u^T) x + u^T x).
LiftedPoint DMap(std::span<const std::int64_t> u);
// u -> u u^T.
Mat VMap(std::span<const std::int64_t> u);
// The lifted point of x -> x^T x.
LiftedPoint IdentityPoint(std::size_t n);

// trace(G * sym) + b . vec.
Rat Pairing(const QuadraticFunction& f, const LiftedPoint& p);

// Monomial values of a point, in coefficient order.
IntVec Monomials(std::span<const std::int64_t> x);

// One row of monomial values per point.
IntMat EvaluationMatrix(std::span<const Point> points, std::size_t dim);

// Dimension of the space of quadratic functions vanishing on `points`.
std::size_t Qrank(std::span<const Point> points, std::size_t dim);

// A basis of that space; each element has primitive integer coefficients.
std::vector<QuadraticFunction> VanishingSpace(std::span<const Point> points,
                                              std::size_t dim);

// Rational strings: "p/q" or an integer.
std::string RatToString(const Rat& q);
// Throws std::invalid_argument on malformed input or a zero denominator.
Rat RatFromString(const std::string& s);

nlohmann::ordered_json ToJson(const QuadraticFunction& f);
// Throws std::invalid_argument on schema violations.
QuadraticFunction QuadraticFunctionFromJson(const nlohmann::ordered_json& j);

}  // namespace pdel

#endif  // PDEL_QFUNC_H_
