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

#include "pdel/cvp.h"

#include <algorithm>
#include <utility>

namespace pdel {

namespace {

// Upper-triangular decomposition of a positive definite form.
struct Decomposition {
  std::size_t n = 0;
  RatVec d;
  Mat mu;  // mu(i, j) for j > i
};

Decomposition Decompose(const Mat& q) {
  if (!IsSymmetric(q)) throw std::invalid_argument("form is not symmetric");
  Decomposition dec;
  dec.n = q.rows();
  dec.d.resize(dec.n);
  dec.mu = Mat(dec.n, dec.n);
  for (std::size_t i = 0; i < dec.n; ++i) {
    Rat di = q(i, i);
    for (std::size_t k = 0; k < i; ++k) di -= dec.d[k] * dec.mu(k, i) * dec.mu(k, i);
    if (di <= 0) throw NotPositiveDefinite();
    dec.d[i] = di;
    for (std::size_t j = i + 1; j < dec.n; ++j) {
      Rat acc = q(i, j);
      for (std::size_t k = 0; k < i; ++k)
        acc -= dec.d[k] * dec.mu(k, i) * dec.mu(k, j);
      dec.mu(i, j) = acc / di;
    }
  }
  return dec;
}

// Depth-first enumeration from the last coordinate down. In shrinking mode
// the bound tightens to the best value seen and ties are kept.
class Enumerator {
 public:
  Enumerator(const Decomposition& dec, std::span<const Rat> center,
             std::optional<Rat> bound, bool shrinking)
      : dec_(dec),
        center_(center.begin(), center.end()),
        bound_(std::move(bound)),
        shrinking_(shrinking),
        x_(dec.n) {}

  void Run() {
    if (dec_.n == 0) {
      Leaf(Rat(0));
      return;
    }
    Recurse(dec_.n - 1, Rat(0));
  }

  std::vector<Point>& found() { return found_; }
  const std::optional<Rat>& bound() const { return bound_; }

 private:
  bool Exceeds(const Rat& v) const { return bound_ && v > *bound_; }

  void Leaf(const Rat& value) {
    if (shrinking_ && (!bound_ || value < *bound_)) {
      bound_ = value;
      found_.clear();
    }
    found_.push_back(ToPoint(std::span<const Int>(x_)));
  }

  void Recurse(std::size_t level, const Rat& partial) {
    Rat ctr = center_[level];
    for (std::size_t j = level + 1; j < dec_.n; ++j) {
      if (dec_.mu(level, j) != 0) ctr -= dec_.mu(level, j) * (Rat(x_[j]) - center_[j]);
    }
    const Int nearest = RoundOf(ctr);
    Int up = nearest;
    Int down = nearest - 1;
    bool up_open = true;
    bool down_open = true;
    while (up_open || down_open) {
      bool take_up;
      if (up_open && down_open) {
        // Closer side first; on a tie prefer the upper value.
        take_up = abs(Rat(up) - ctr) <= abs(ctr - Rat(down));
      } else {
        take_up = up_open;
      }
      Int& xi = take_up ? up : down;
      const Rat diff = Rat(xi) - ctr;
      const Rat value = partial + dec_.d[level] * diff * diff;
      if (Exceeds(value)) {
        (take_up ? up_open : down_open) = false;
        continue;
      }
      x_[level] = xi;
      if (level == 0) {
        Leaf(value);
      } else {
        Recurse(level - 1, value);
      }
      if (take_up) {
        ++up;
      } else {
        --down;
      }
    }
  }

  const Decomposition& dec_;
  RatVec center_;
  std::optional<Rat> bound_;
  bool shrinking_;
  IntVec x_;
  std::vector<Point> found_;
};

QuadraticFunction RestrictToComplement(const QuadraticFunction& f,
                                       const IntMat& complement) {
  return f.Substitute(complement, IntVec(f.dim()));
}

Point Embed(const IntMat& basis, const Point& y) {
  Point x(basis.rows(), 0);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < basis.cols(); ++j) acc += basis(i, j) * static_cast<long>(y[j]);
    x[i] = ToInt64(acc);
  }
  return x;
}

}  // namespace

CvpResult ClosestVectors(const Mat& q, std::span<const Rat> c) {
  if (c.size() != q.rows()) throw std::invalid_argument("dimension mismatch");
  const Decomposition dec = Decompose(q);
  Enumerator e(dec, c, std::nullopt, /*shrinking=*/true);
  e.Run();
  CvpResult out;
  out.minimizers = std::move(e.found());
  std::sort(out.minimizers.begin(), out.minimizers.end());
  out.squared_distance = *e.bound();
  return out;
}

std::vector<Point> PointsInEllipsoid(const Mat& q, std::span<const Rat> c,
                                     const Rat& bound) {
  if (c.size() != q.rows()) throw std::invalid_argument("dimension mismatch");
  const Decomposition dec = Decompose(q);
  if (bound < 0) return {};
  Enumerator e(dec, c, bound, /*shrinking=*/false);
  e.Run();
  std::vector<Point> out = std::move(e.found());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> PointsAtMost(const QuadraticFunction& f, const Rat& bound) {
  if (ClassifyDefiniteness(f.gram()).kind != DefinitenessKind::kPositiveDefinite)
    throw NotPositiveDefinite();
  // f(x) = Q[x - c] + f(c).
  const RatVec c = f.Center();
  return PointsInEllipsoid(f.gram(), c, bound - f.Evaluate(c));
}

LatticeMinimum MinimumOverLattice(const QuadraticFunction& f) {
  if (ClassifyDefiniteness(f.gram()).kind != DefinitenessKind::kPositiveDefinite)
    throw NotPositiveDefinite();
  const RatVec c = f.Center();
  CvpResult r = ClosestVectors(f.gram(), c);
  return LatticeMinimum{r.squared_distance + f.Evaluate(c),
                        std::move(r.minimizers)};
}

std::optional<Point> InteriorPoint(const QuadraticFunction& f) {
  const std::size_t n = f.dim();
  if (n == 0) {
    if (f.constant() < 0) return Point{};
    return std::nullopt;
  }
  const Definiteness def = ClassifyDefiniteness(f.gram());
  switch (def.kind) {
    case DefinitenessKind::kPositiveDefinite: {
      LatticeMinimum m = MinimumOverLattice(f);
      if (m.value < 0) return m.minimizers.front();
      return std::nullopt;
    }
    case DefinitenessKind::kPositiveSemidefinite: {
      const KernelSplit split = SplitKernel(f.gram());
      // A linear part that is not orthogonal to the kernel makes f unbounded
      // below along that kernel vector.
      for (std::size_t k = 0; k < split.kernel.cols(); ++k) {
        Rat slope = 0;
        for (std::size_t i = 0; i < n; ++i)
          slope += f.linear()[i] * Rat(split.kernel(i, k));
        if (slope == 0) continue;
        // f(t v) = t * slope + f(0).
        const Rat c0 = f.constant();
        Int t = (c0 < 0) ? Int(0) : FloorOf(c0 / abs(slope)) + 1;
        if (slope > 0) t = -t;
        Point z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = ToInt64(t * split.kernel(i, k));
        return z;
      }
      const QuadraticFunction reduced = RestrictToComplement(f, split.complement);
      if (reduced.dim() == 0) {
        if (f.constant() < 0) return Point(n, 0);
        return std::nullopt;
      }
      const auto y = InteriorPoint(reduced);
      if (!y) return std::nullopt;
      return Embed(split.complement, *y);
    }
    case DefinitenessKind::kIndefinite: {
      const IntVec& w = def.negative_direction;
      for (long step = 0;; ++step) {
        for (long t : {step, -step}) {
          Point z(n);
          for (std::size_t i = 0; i < n; ++i) z[i] = ToInt64(w[i] * t);
          if (f.Evaluate(z) < 0) return z;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pdel
