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

#include <algorithm>
#include <utility>

namespace pdel {

namespace {

struct Echelon {
  IntMat m;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;  // parity of the row swaps
};

// Bareiss elimination to row echelon form. Every entry produced is a minor of
// the input, so the divisions are exact.
Echelon FractionFreeEchelon(IntMat m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      e.sign = -e.sign;
    }
    const Int pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int v = pivot * m(i, j) - lead * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, c) = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

IntMat ClearRowDenominators(const Mat& m) {
  IntMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (const Rat& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                          q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rat& q = m(r, c);
      out(r, c) = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

std::vector<IntVec> NullspaceFromEchelon(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(cols);
    x[f] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rat acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (x[j] != 0 && e.m(k, j) != 0) acc += Rat(e.m(k, j)) * x[j];
      }
      x[pc] = -acc / Rat(e.m(k, pc));
    }
    basis.push_back(Primitive(x));
  }
  return basis;
}

void AddRowMultiple(IntMat& m, std::size_t dst, std::size_t src,
                    const Int& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

}  // namespace

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  IntMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RatVec operator*(const Mat& a, std::span<const Rat> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("shape mismatch");
  RatVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

Mat ToRat(const IntMat& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
  return out;
}

IntMat ToInt(const Mat& m) {
  IntMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ToInt(m(r, c));
  return out;
}

RatVec ToRat(std::span<const Int> v) {
  RatVec out;
  out.reserve(v.size());
  for (const Int& z : v) out.emplace_back(z);
  return out;
}

RatVec ToRat(std::span<const std::int64_t> v) {
  RatVec out;
  out.reserve(v.size());
  for (std::int64_t z : v) out.emplace_back(Int(static_cast<long>(z)));
  return out;
}

Int ToInt(const Rat& q) {
  if (q.get_den() != 1) throw std::domain_error("not an integer: " + q.get_str());
  return q.get_num();
}

std::int64_t ToInt64(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coordinate overflow");
  return z.get_si();
}

Point ToPoint(std::span<const Int> v) {
  Point p;
  p.reserve(v.size());
  for (const Int& z : v) p.push_back(ToInt64(z));
  return p;
}

Point ToPoint(std::span<const Rat> v) {
  Point p;
  p.reserve(v.size());
  for (const Rat& q : v) p.push_back(ToInt64(ToInt(q)));
  return p;
}

Int FloorOf(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int CeilOf(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int RoundOf(const Rat& q) { return FloorOf(q + Rat(1, 2)); }

IntVec Primitive(std::span<const Rat> v) {
  Int l = 1;
  for (const Rat& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                 q.get_den_mpz_t());
  IntVec out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(q.get_num() * (l / q.get_den()));
  return Primitive(std::span<const Int>(out));
}

IntVec Primitive(std::span<const Int> v) {
  Int g = 0;
  for (const Int& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  IntVec out(v.begin(), v.end());
  if (g > 1) {
    for (Int& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

std::size_t Rank(const Mat& m) { return Rank(ClearRowDenominators(m)); }

std::size_t Rank(const IntMat& m) {
  return FractionFreeEchelon(m).pivot_cols.size();
}

std::vector<IntVec> Nullspace(const Mat& m) {
  return Nullspace(ClearRowDenominators(m));
}

std::vector<IntVec> Nullspace(const IntMat& m) {
  return NullspaceFromEchelon(FractionFreeEchelon(m), m.cols());
}

std::optional<Mat> Solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch");
  Mat aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  const Echelon e = FractionFreeEchelon(ClearRowDenominators(aug));
  for (std::size_t pc : e.pivot_cols) {
    if (pc >= a.cols()) return std::nullopt;
  }
  Mat x(a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rat acc = Rat(e.m(k, a.cols() + col));
      for (std::size_t j = pc + 1; j < a.cols(); ++j) {
        if (e.m(k, j) != 0) acc -= Rat(e.m(k, j)) * x(j, col);
      }
      x(pc, col) = acc / Rat(e.m(k, pc));
    }
  }
  return x;
}

Rat Determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  if (m.rows() == 0) return 1;
  // Scaling rows by the denominators' lcms scales the determinant likewise.
  Rat scale = 1;
  IntMat im(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (const Rat& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                          q.get_den_mpz_t());
    scale *= Rat(l);
    for (std::size_t c = 0; c < m.cols(); ++c)
      im(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return Rat(Determinant(im)) / scale;
}

Int Determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  const Echelon e = FractionFreeEchelon(m);
  if (e.pivot_cols.size() < n) return 0;
  return e.sign * e.m(n - 1, n - 1);
}

HermiteForm Hnf(const IntMat& m) {
  HermiteForm out;
  IntMat& h = out.h;
  IntMat& u = out.u;
  h = m;
  u = IntMat::Identity(m.rows());
  const std::size_t rows = m.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h(i, c) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
      const Int x = h(r, c) / g;
      const Int y = h(i, c) / g;
      // [s t; -y x] has determinant s*x + t*y = 1.
      for (IntMat* mat : {&h, &u}) {
        for (std::size_t j = 0; j < mat->cols(); ++j) {
          const Int a = (*mat)(r, j);
          const Int b = (*mat)(i, j);
          (*mat)(r, j) = s * a + t * b;
          (*mat)(i, j) = x * b - y * a;
        }
      }
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      const Int neg = -q;
      AddRowMultiple(h, i, r, neg);
      AddRowMultiple(u, i, r, neg);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<IntVec> IntegerKernel(const IntMat& m) {
  const HermiteForm hf = Hnf(m.Transposed());
  std::vector<IntVec> basis;
  for (std::size_t i = hf.rank; i < hf.u.rows(); ++i) {
    const auto row = hf.u.row(i);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

KernelSplit SplitKernel(const Mat& q) {
  if (!IsSymmetric(q)) throw std::invalid_argument("matrix is not symmetric");
  const std::size_t n = q.rows();
  Int l = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (const Rat& x : q.row(r))
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntMat scaled(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      scaled(r, c) = q(r, c).get_num() * (l / q(r, c).get_den());
  const HermiteForm hf = Hnf(scaled);
  KernelSplit split;
  split.complement = IntMat(n, hf.rank);
  split.kernel = IntMat(n, n - hf.rank);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < hf.rank) {
        split.complement(j, i) = hf.u(i, j);
      } else {
        split.kernel(j, i - hf.rank) = hf.u(i, j);
      }
    }
  }
  return split;
}

bool IsSymmetric(const Mat& q) {
  if (q.rows() != q.cols()) return false;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = i + 1; j < q.cols(); ++j)
      if (q(i, j) != q(j, i)) return false;
  return true;
}

Definiteness ClassifyDefiniteness(const Mat& q) {
  if (!IsSymmetric(q)) throw std::invalid_argument("matrix is not symmetric");
  const std::size_t n = q.rows();
  // Invariant: a == e * q * e^T restricted to the active indices.
  Mat a = q;
  Mat e = Mat::Identity(n);
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  Definiteness out;
  while (remaining > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i] && a(i, i) != 0) {
        p = i;
        break;
      }
    }
    if (p == n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!active[i] || !active[j] || a(i, j) == 0) continue;
          const int s = sgn(a(i, j));
          RatVec v(n);
          for (std::size_t k = 0; k < n; ++k) v[k] = e(i, k) - s * e(j, k);
          out.kind = DefinitenessKind::kIndefinite;
          out.negative_direction = Primitive(v);
          return out;
        }
      }
      break;
    }
    if (a(p, p) < 0) {
      out.kind = DefinitenessKind::kIndefinite;
      out.negative_direction = Primitive(e.row(p));
      return out;
    }
    const Rat pivot = a(p, p);
    for (std::size_t j = 0; j < n; ++j) {
      if (!active[j] || j == p || a(j, p) == 0) continue;
      const Rat f = a(j, p) / pivot;
      for (std::size_t l = 0; l < n; ++l) {
        if (!active[l] || l == p) continue;
        a(j, l) -= f * a(p, l);
      }
      for (std::size_t k = 0; k < n; ++k) e(j, k) -= f * e(p, k);
    }
    // Restore symmetry of the trailing block and clear row/column p.
    for (std::size_t j = 0; j < n; ++j) {
      if (!active[j] || j == p) continue;
      for (std::size_t l = j + 1; l < n; ++l) {
        if (active[l] && l != p) a(l, j) = a(j, l);
      }
      a(j, p) = 0;
      a(p, j) = 0;
    }
    active[p] = false;
    --remaining;
  }
  if (remaining == 0) {
    out.kind = DefinitenessKind::kPositiveDefinite;
  } else {
    out.kind = DefinitenessKind::kPositiveSemidefinite;
    out.kernel = Nullspace(q);
  }
  return out;
}

Rat Bilinear(const Mat& q, std::span<const Rat> x, std::span<const Rat> y) {
  Rat acc = 0;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (y[j] != 0 && q(i, j) != 0) row += q(i, j) * y[j];
    }
    acc += x[i] * row;
  }
  return acc;
}

}  // namespace pdel
