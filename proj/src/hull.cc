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

#include "pdel/hull.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace pdel {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void Set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool Test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  Bits And(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  bool SubsetOf(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  std::size_t AndCount(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
    return c;
  }
  // (*this & o) is a subset of z.
  bool AndSubsetOf(const Bits& o, const Bits& z) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k] & ~z.words_[k]) return false;
    return true;
  }
  std::size_t Words() const { return words_.size(); }
  const std::uint64_t* Data() const { return words_.data(); }
  std::size_t Count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Checked arithmetic: machine integers report overflow, Int never does.
bool MulAdd(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  std::int64_t p;
  return !__builtin_mul_overflow(a, b, &p) && !__builtin_add_overflow(acc, p, &acc);
}
bool MulAdd(Int& acc, const Int& a, const Int& b) {
  acc += a * b;
  return true;
}
std::int64_t Gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
Int Gcd(const Int& a, const Int& b) { return gcd(a, b); }

struct Overflow {};

template <typename T>
struct Ray {
  std::vector<T> y;
  Bits zeros;  // processed constraints on which the ray vanishes
};

template <typename T>
T Dot(const std::vector<T>& a, const std::vector<T>& b) {
  T acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0 && !MulAdd(acc, a[k], b[k])) throw Overflow{};
  return acc;
}

template <typename T>
void MakePrimitive(std::vector<T>& v) {
  T g = 0;
  for (const T& x : v) g = Gcd(g, x);
  if (g > 1)
    for (T& x : v) x /= g;
}

// Double description over the coordinates c of the generators in a basis;
// the generators at `basis` have unit coordinates.
template <typename T>
std::vector<Ray<T>> Describe(const std::vector<std::vector<T>>& c, const std::vector<int>& basis) {
  const std::size_t m = c.size();
  const std::size_t r = basis.size();
  // Start from the orthant of the basis: ray j is positive only on basis j.
  std::vector<Ray<T>> rays;
  std::vector<bool> processed(m, false);
  for (int b : basis) processed[b] = true;
  for (std::size_t j = 0; j < r; ++j) {
    Ray<T> ray{std::vector<T>(r, 0), Bits(m)};
    ray.y[j] = 1;
    for (std::size_t k = 0; k < r; ++k)
      if (k != j) ray.zeros.Set(basis[k]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<T> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = Dot(c[i], rays[k].y);
      if (value[k] > 0) pos.push_back(k);
      if (value[k] < 0) neg.push_back(k);
      if (value[k] == 0) rays[k].zeros.Set(i);
    }
    if (neg.empty()) continue;

    // Zero sets packed contiguously for the pair scan.
    const std::size_t w = rays.front().zeros.Words();
    std::vector<std::uint64_t> all_zeros(rays.size() * w), neg_zeros(neg.size() * w);
    for (std::size_t k = 0; k < rays.size(); ++k)
      std::copy_n(rays[k].zeros.Data(), w, all_zeros.begin() + k * w);
    for (std::size_t k = 0; k < neg.size(); ++k)
      std::copy_n(rays[neg[k]].zeros.Data(), w, neg_zeros.begin() + k * w);
    std::vector<std::uint64_t> common(w);
    std::vector<Ray<T>> fresh;
    for (std::size_t a : pos) {
      const std::uint64_t* za = rays[a].zeros.Data();
      for (std::size_t nb = 0; nb < neg.size(); ++nb) {
        const std::size_t b = neg[nb];
        const std::uint64_t* zb = &neg_zeros[nb * w];
        std::size_t count = 0;
        for (std::size_t t = 0; t < w; ++t) {
          common[t] = za[t] & zb[t];
          count += std::popcount(common[t]);
        }
        if (count + 2 < r) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == a || k == b) continue;
          const std::uint64_t* zk = &all_zeros[k * w];
          bool contains = true;
          for (std::size_t t = 0; t < w && contains; ++t) contains = !(common[t] & ~zk[t]);
          adjacent = !contains;
        }
        if (!adjacent) continue;
        const Bits& za_bits = rays[a].zeros;
        const Bits& zb_bits = rays[b].zeros;
        // Positive combination vanishing on generator i.
        Ray<T> ray{std::vector<T>(r, 0), za_bits.And(zb_bits)};
        const T va = value[a], vb = -value[b];
        for (std::size_t t = 0; t < r; ++t)
          if (!MulAdd(ray.y[t], va, rays[b].y[t]) || !MulAdd(ray.y[t], vb, rays[a].y[t]))
            throw Overflow{};
        MakePrimitive(ray.y);
        ray.zeros.Set(i);
        fresh.push_back(std::move(ray));
      }
    }
    std::vector<Ray<T>> kept;
    kept.reserve(rays.size() - neg.size() + fresh.size());
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (value[k] >= 0) kept.push_back(std::move(rays[k]));
    for (Ray<T>& ray : fresh) kept.push_back(std::move(ray));
    rays = std::move(kept);
  }
  return rays;
}

template <typename T>
std::vector<std::vector<int>> FacetsOf(const std::vector<Ray<T>>& rays, std::size_t m) {
  std::vector<std::vector<int>> facets;
  for (const Ray<T>& ray : rays) {
    std::vector<int> f;
    for (std::size_t i = 0; i < m; ++i)
      if (ray.zeros.Test(i)) f.push_back(static_cast<int>(i));
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

// Indices of a maximal linearly independent set of rows, greedily.
std::vector<int> RowBasis(const IntMat& m) {
  std::vector<int> basis;
  IntMat acc(0, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntMat trial = acc;
    trial.AppendRow(m.row(i));
    if (Rank(trial) == trial.rows()) {
      acc = std::move(trial);
      basis.push_back(static_cast<int>(i));
    }
  }
  return basis;
}

}  // namespace

std::vector<std::vector<int>> ConeFacets(const IntMat& generators) {
  const std::size_t m = generators.rows();
  const std::vector<int> basis = RowBasis(generators);
  const std::size_t r = basis.size();
  if (r == 0) throw std::invalid_argument("cone of zero generators");
  if (r == 1) return {{}};

  // c_i: coordinates of generator i in the basis, scaled to integers.
  Mat bt(generators.cols(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < generators.cols(); ++k) bt(k, j) = generators(basis[j], k);
  Mat rhs(generators.cols(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < generators.cols(); ++k) rhs(k, i) = generators(i, k);
  const std::optional<Mat> x = Solve(bt, rhs);
  if (!x) throw std::logic_error("generator outside the span of the basis");
  std::vector<IntVec> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = Primitive(x->column(i));

  try {
    std::vector<std::vector<std::int64_t>> small(m);
    for (std::size_t i = 0; i < m; ++i)
      for (const Int& x : c[i]) {
        if (!x.fits_slong_p()) throw Overflow{};
        small[i].push_back(x.get_si());
      }
    return FacetsOf(Describe(small, basis), m);
  } catch (const Overflow&) {
    return FacetsOf(Describe(c, basis), m);
  }
}

}  // namespace pdel
