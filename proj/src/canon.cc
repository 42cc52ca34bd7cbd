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

#include "pdel/canon.h"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace pdel {

namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

class Searcher {
 public:
  explicit Searcher(const ColoredGraph& g) : g_(g) {}

  CanonicalForm Run() {
    CanonicalForm out;
    const std::size_t n = g_.n;
    if (n == 0) return out;
    // Initial partition by vertex color.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return g_.vertex_color[a] < g_.vertex_color[b];
    });
    Cells cells;
    for (int v : order) {
      if (cells.empty() || g_.vertex_color[cells.back().front()] != g_.vertex_color[v])
        cells.emplace_back();
      cells.back().push_back(v);
    }
    std::vector<std::uint64_t> trace;
    trace.push_back(Refine(cells));
    std::vector<int> path;
    Search(cells, path, trace);

    out.labeling.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) out.labeling[best_order_[k]] = static_cast<int>(k);
    out.form = best_matrix_;
    out.automorphisms = generators_;
    out.leaves_visited = leaves_;
    return out;
  }

 private:
  // Refines to an equitable ordered partition. Returns a hash of the
  // splitting data, which depends only on the isomorphism class of
  // (graph, partition).
  std::uint64_t Refine(Cells& cells) const {
    const std::size_t n = g_.n;
    std::vector<int> cell_of(n);
    std::uint64_t h = 0;
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      Cells next;
      bool split = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = cells[c];
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature: sorted (cell, color) multiset of the other vertices.
        std::vector<std::pair<std::vector<std::int64_t>, int>> sigs;
        sigs.reserve(cell.size());
        for (int v : cell) {
          std::vector<std::int64_t> s;
          s.reserve(n);
          for (std::size_t u = 0; u < n; ++u) {
            if (static_cast<int>(u) == v) continue;
            s.push_back((static_cast<std::int64_t>(cell_of[u]) << 32) |
                        static_cast<std::uint32_t>(g_.color(v, u)));
          }
          std::sort(s.begin(), s.end());
          sigs.emplace_back(std::move(s), v);
        }
        std::sort(sigs.begin(), sigs.end());
        for (std::size_t k = 0; k < sigs.size(); ++k) {
          if (k == 0 || sigs[k].first != sigs[k - 1].first) {
            if (k > 0) split = true;
            next.emplace_back();
            h = Mix(h, c);
            h = Mix(h, k);
            for (std::int64_t x : sigs[k].first) h = Mix(h, static_cast<std::uint64_t>(x));
          }
          next.back().push_back(sigs[k].second);
        }
      }
      cells = std::move(next);
      if (!split) break;
    }
    h = Mix(h, cells.size());
    return h;
  }

  std::vector<int> LeafMatrix(const std::vector<int>& order) const {
    const std::size_t n = g_.n;
    std::vector<int> m;
    m.reserve(n + n * (n - 1) / 2);
    for (std::size_t k = 0; k < n; ++k) m.push_back(g_.vertex_color[order[k]]);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) m.push_back(g_.color(order[k], order[l]));
    return m;
  }

  static std::size_t CommonPrefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  void AddAutomorphism(const std::vector<int>& from, const std::vector<int>& to) {
    Perm p(g_.n);
    for (std::size_t k = 0; k < g_.n; ++k) p[from[k]] = to[k];
    if (IsIdentity(p)) return;
    if (!IsAutomorphism(g_, p)) throw std::logic_error("leaf map is not an automorphism");
    generators_.push_back(std::move(p));
  }

  // Returns the depth to resume at, or INT_MAX to continue normally.
  int Leaf(const Cells& cells, const std::vector<int>& path,
           const std::vector<std::uint64_t>& trace) {
    ++leaves_;
    std::vector<int> order;
    order.reserve(g_.n);
    for (const auto& c : cells) order.push_back(c.front());
    std::vector<int> matrix = LeafMatrix(order);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_order_ = best_order_ = order;
      first_path_ = best_path_ = path;
      first_trace_ = best_trace_ = trace;
      first_matrix_ = best_matrix_ = std::move(matrix);
      return INT_MAX;
    }
    if (trace == first_trace_ && matrix == first_matrix_) {
      AddAutomorphism(first_order_, order);
      return static_cast<int>(CommonPrefix(path, first_path_));
    }
    const auto cmp = std::tie(trace, matrix) <=> std::tie(best_trace_, best_matrix_);
    if (cmp == 0) {
      AddAutomorphism(best_order_, order);
      return static_cast<int>(CommonPrefix(path, best_path_));
    }
    if (cmp < 0) {
      best_order_ = order;
      best_path_ = path;
      best_trace_ = trace;
      best_matrix_ = std::move(matrix);
    }
    return INT_MAX;
  }

  // Trace prefix strictly above both recorded leaves: nothing below can
  // become best or match a known leaf.
  bool PruneByTrace(const std::vector<std::uint64_t>& trace) const {
    if (!have_leaf_) return false;
    const auto above = [&](const std::vector<std::uint64_t>& ref) {
      const std::size_t len = std::min(trace.size(), ref.size());
      for (std::size_t k = 0; k < len; ++k) {
        if (trace[k] != ref[k]) return trace[k] > ref[k];
      }
      return false;
    };
    const auto differs = [&](const std::vector<std::uint64_t>& ref) {
      const std::size_t len = std::min(trace.size(), ref.size());
      for (std::size_t k = 0; k < len; ++k)
        if (trace[k] != ref[k]) return true;
      return false;
    };
    return above(best_trace_) && differs(first_trace_);
  }

  int Search(const Cells& cells, std::vector<int>& path,
             std::vector<std::uint64_t>& trace) {
    if (PruneByTrace(trace)) return INT_MAX;
    if (cells.size() == g_.n) return Leaf(cells, path, trace);
    const int depth = static_cast<int>(path.size());

    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() < 2) continue;
      if (target == cells.size() || cells[c].size() < cells[target].size()) target = c;
    }
    const std::vector<int> candidates = cells[target];
    std::vector<int> explored;
    for (int v : candidates) {
      if (InExploredOrbit(v, explored, path)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      trace.push_back(Mix(Refine(child), target));
      path.push_back(v);
      const int jump = Search(child, path, trace);
      path.pop_back();
      trace.pop_back();
      explored.push_back(v);
      if (jump < depth) return jump;
    }
    return INT_MAX;
  }

  // Whether v is in the orbit of an explored sibling under the automorphisms
  // found so far that fix the current path pointwise.
  bool InExploredOrbit(int v, const std::vector<int>& explored,
                       const std::vector<int>& path) const {
    if (explored.empty()) return false;
    std::vector<int> parent(g_.n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& p : generators_) {
      bool fixes = true;
      for (int x : path)
        if (p[x] != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (std::size_t x = 0; x < g_.n; ++x) {
        const int a = find(static_cast<int>(x));
        const int b = find(p[x]);
        if (a != b) parent[a] = b;
      }
    }
    const int rv = find(v);
    for (int u : explored)
      if (find(u) == rv) return true;
    return false;
  }

  const ColoredGraph& g_;
  bool have_leaf_ = false;
  std::vector<int> first_order_, best_order_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::uint64_t> first_trace_, best_trace_;
  std::vector<int> first_matrix_, best_matrix_;
  std::vector<Perm> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace

bool IsAutomorphism(const ColoredGraph& g, const Perm& p) {
  if (p.size() != g.n) return false;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (g.vertex_color[i] != g.vertex_color[p[i]]) return false;
    for (std::size_t j = i + 1; j < g.n; ++j)
      if (g.color(i, j) != g.color(p[i], p[j])) return false;
  }
  return true;
}

CanonicalForm Canonicalize(const ColoredGraph& g) {
  if (g.vertex_color.size() != g.n || g.edge_color.size() != g.n * g.n)
    throw std::invalid_argument("colored graph size mismatch");
  return Searcher(g).Run();
}

}  // namespace pdel
