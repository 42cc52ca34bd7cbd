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

#include "pdel/group.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pdel {

Perm IdentityPerm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm Compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm Inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

bool IsIdentity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

int FirstMoved(const Perm& p) {
  int x = 0;
  while (p[x] == x) ++x;
  return x;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Perm& g : generators_) {
    if (g.size() != degree_) throw std::invalid_argument("permutation degree");
    Perm check = g;
    std::sort(check.begin(), check.end());
    if (check != IdentityPerm(degree_))
      throw std::invalid_argument("not a permutation");
  }
  for (const Perm& g : generators_) {
    if (IsIdentity(g)) continue;
    strong_.push_back(g);
    bool moves_base = false;
    for (const Level& level : chain_)
      if (g[level.base_point] != level.base_point) moves_base = true;
    if (!moves_base) {
      Level fresh;
      fresh.base_point = FirstMoved(g);
      chain_.push_back(std::move(fresh));
    }
  }
  for (std::size_t l = 0; l < chain_.size(); ++l) RebuildLevel(l);

  // Deterministic Schreier-Sims: verify levels from the bottom up, jumping
  // back down whenever a new strong generator appears.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const Level& level = chain_[i];
    for (std::size_t k = 0; !extended && k < level.orbit.size(); ++k) {
      const int x = level.orbit[k];
      for (int si : level.strong) {
        const Perm& s = strong_[si];
        const Perm& ux = *level.transversal[x];
        const Perm& usx = *level.transversal[s[x]];
        const Perm schreier = Compose(Inverse(usx), Compose(s, ux));
        if (IsIdentity(schreier)) continue;
        auto [residue, stop] = Sift(schreier);
        if (IsIdentity(residue)) continue;
        strong_.push_back(residue);
        if (stop == chain_.size()) {
          Level fresh;
          fresh.base_point = FirstMoved(residue);
          chain_.push_back(std::move(fresh));
        }
        for (std::size_t l = 0; l <= stop; ++l) RebuildLevel(l);
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

void PermGroup::RebuildLevel(std::size_t l) {
  Level& level = chain_[l];
  level.strong.clear();
  for (std::size_t k = 0; k < strong_.size(); ++k) {
    bool fixes = true;
    for (std::size_t j = 0; j < l && fixes; ++j)
      fixes = strong_[k][chain_[j].base_point] == chain_[j].base_point;
    if (fixes) level.strong.push_back(static_cast<int>(k));
  }
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base_point] = IdentityPerm(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int x = level.orbit[k];
    for (int si : level.strong) {
      const Perm& s = strong_[si];
      const int y = s[x];
      if (!level.transversal[y]) {
        level.transversal[y] = Compose(s, *level.transversal[x]);
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::Sift(const Perm& p) const {
  Perm g = p;
  std::size_t i = 0;
  for (; i < chain_.size(); ++i) {
    const Level& level = chain_[i];
    const int image = g[level.base_point];
    if (!level.transversal[image]) return {g, i};
    g = Compose(Inverse(*level.transversal[image]), g);
  }
  return {g, i};
}

Int PermGroup::Order() const {
  Int order = 1;
  for (const Level& level : chain_) order *= static_cast<unsigned long>(level.orbit.size());
  return order;
}

bool PermGroup::Contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  return IsIdentity(Sift(p).first);
}

std::vector<std::vector<int>> PermGroup::Orbits() const {
  std::vector<int> label(degree_, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < degree_; ++start) {
    if (label[start] >= 0) continue;
    std::vector<int> orbit = {static_cast<int>(start)};
    label[start] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& g : generators_) {
        const int y = g[orbit[k]];
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

void PermGroup::ForEachElement(const std::function<bool(const Perm&)>& fn) const {
  // Every element is u_0 * u_1 * ... * u_k with u_i from level i's transversal.
  std::function<bool(std::size_t, const Perm&)> rec =
      [&](std::size_t level, const Perm& prefix) -> bool {
    if (level == chain_.size()) return fn(prefix);
    for (int x : chain_[level].orbit) {
      if (!rec(level + 1, Compose(prefix, *chain_[level].transversal[x])))
        return false;
    }
    return true;
  };
  rec(0, IdentityPerm(degree_));
}

}  // namespace pdel
