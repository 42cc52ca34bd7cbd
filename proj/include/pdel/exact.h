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

// Exact integer and rational linear algebra. Everything in the library that
// certifies a geometric fact goes through here; there is no floating point.

#ifndef PDEL_EXACT_H_
#define PDEL_EXACT_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdel {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// A point of the integer lattice Z^n. Coordinates of the points this library
// handles stay tiny; conversions from Int are checked.
using Point = std::vector<std::int64_t>;

// Row-major dense matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix Identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) {
    return std::span<T>(data_.data() + r * cols_, cols_);
  }
  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_.data() + r * cols_, cols_);
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix Transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void AppendRow(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row width");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

using Mat = Matrix<Rat>;
using IntMat = Matrix<Int>;

Mat operator*(const Mat& a, const Mat& b);
IntMat operator*(const IntMat& a, const IntMat& b);
RatVec operator*(const Mat& a, std::span<const Rat> x);

Mat ToRat(const IntMat& m);
// Throws std::domain_error if some entry is not an integer.
IntMat ToInt(const Mat& m);
RatVec ToRat(std::span<const Int> v);
RatVec ToRat(std::span<const std::int64_t> v);
Int ToInt(const Rat& q);  // throws if q is not integral
std::int64_t ToInt64(const Int& z);  // throws on overflow
Point ToPoint(std::span<const Int> v);
Point ToPoint(std::span<const Rat> v);

Int FloorOf(const Rat& q);
Int CeilOf(const Rat& q);
// Nearest integer, halves rounded up.
Int RoundOf(const Rat& q);

// Scales a rational vector to the primitive integer vector on the same ray
// (gcd of entries 1). The zero vector maps to itself.
IntVec Primitive(std::span<const Rat> v);
IntVec Primitive(std::span<const Int> v);

// Rank over Q, by fraction-free (Bareiss) elimination.
std::size_t Rank(const Mat& m);
std::size_t Rank(const IntMat& m);

// Basis of the right kernel as primitive integer vectors. Empty iff the
// matrix has full column rank. The basis is the reduced-echelon one, so it is
// a deterministic function of the input.
std::vector<IntVec> Nullspace(const Mat& m);
std::vector<IntVec> Nullspace(const IntMat& m);

// Some exact solution x of a * x = b, or nullopt when the system is
// inconsistent. Free variables are set to zero.
std::optional<Mat> Solve(const Mat& a, const Mat& b);

Rat Determinant(const Mat& m);
Int Determinant(const IntMat& m);

// Row Hermite normal form: h = u * m with u unimodular, h upper echelon with
// positive pivots and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMat h;
  IntMat u;
  std::size_t rank = 0;
};
HermiteForm Hnf(const IntMat& m);

// Basis of {x in Z^cols : m x = 0}, saturated (the basis spans the full
// integer kernel, not a finite-index sublattice).
std::vector<IntVec> IntegerKernel(const IntMat& m);

// Unimodular completion data for the integer kernel of a symmetric matrix:
// the columns of `complement` and `kernel` together form a basis of Z^n.
struct KernelSplit {
  IntMat complement;  // n x (n - k)
  IntMat kernel;      // n x k
};
KernelSplit SplitKernel(const Mat& q);

enum class DefinitenessKind { kPositiveDefinite, kPositiveSemidefinite,
                              kIndefinite };

struct Definiteness {
  DefinitenessKind kind;
  // Kernel basis (primitive integer columns) in the semidefinite case.
  std::vector<IntVec> kernel;
  // A primitive integer vector x with x^T q x < 0 in the indefinite case.
  IntVec negative_direction;
};

// Classifies a symmetric rational matrix by exact symmetric elimination.
// Throws std::invalid_argument on non-symmetric input.
Definiteness ClassifyDefiniteness(const Mat& q);

bool IsSymmetric(const Mat& q);

// x^T q y.
Rat Bilinear(const Mat& q, std::span<const Rat> x, std::span<const Rat> y);

}  // namespace pdel

#endif  // PDEL_EXACT_H_
