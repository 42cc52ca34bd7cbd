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

// Breadth-first exploration of the adjacency component of perfect Delaunay
// polytopes reachable from a set of seeds by flips across ridges.
//
// Bounded flip results are deduplicated up to arithmetic equivalence and
// queued. Unbounded results are recorded as terminal nodes keyed by their
// bounded factor and never expanded. Every committed flip adds one directed
// edge (source node, target node) labeled by the ridge orbit it came from.

#ifndef PDEL_EXPLORE_H_
#define PDEL_EXPLORE_H_

#include <atomic>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pdel/delaunay.h"
#include "pdel/ridges.h"

namespace pdel {

struct GraphNode {
  std::string key;  // certificate, or "unbounded:..." for unbounded nodes
  PolytopeRecord record;
  // Filled when the node is expanded.
  std::optional<std::vector<RidgeOrbit>> orbits;
  Int aut_order;
};

struct GraphEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t orbit = 0;
  std::vector<Point> ridge;
  Rat rho_m;
  Point witness;
};

struct AdjacencyGraph {
  std::size_t dim = 0;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
};

struct ExplorationState {
  AdjacencyGraph graph;
  std::deque<std::size_t> frontier;  // bounded nodes not yet fully expanded
  // Number of ridge orbits of each node whose flip has been committed.
  std::vector<std::size_t> next_orbit;
  std::map<std::string, std::vector<std::size_t>> registry;  // key -> nodes
  std::size_t flips = 0;
  // Ridges whose flip raised UnboundedRidge: (node, orbit).
  std::vector<std::pair<std::size_t, std::size_t>> unbounded_ridges;
};

struct ExploreLimits {
  std::optional<std::size_t> max_nodes;
  std::optional<std::size_t> max_flips;
  std::optional<double> wall_clock_seconds;
  std::size_t threads = 1;
  RidgeBackend backend = RidgeBackend::kAuto;
};

enum class StopReason { kComplete, kMaxNodes, kMaxFlips, kWallClock, kInterrupted };

std::string StopReasonName(StopReason r);

// Seeds must be perfect; bounded seeds are queued, unbounded ones recorded.
// Equivalent seeds collapse to one node. Throws std::invalid_argument on
// dimension mismatch or a non-perfect seed.
ExplorationState InitialState(const std::vector<PolytopeRecord>& seeds);

// Runs until the frontier is empty or a limit is hit. `on_commit` runs after
// every committed flip (and once at the end); `stop` is polled between flips.
StopReason Explore(ExplorationState& state, const ExploreLimits& limits,
                   const std::function<void(const ExplorationState&)>& on_commit = {},
                   const std::atomic<bool>* stop = nullptr);

// Bounded nodes only, numbered 1.. in discovery order; edges listed under
// their source node, loops as [k, k], multiplicities repeated. With
// include_unbounded every node is listed.
std::string ExportGap(const AdjacencyGraph& g, bool include_unbounded = false);

nlohmann::ordered_json GraphToJson(const AdjacencyGraph& g);

nlohmann::ordered_json StateToJson(const ExplorationState& s);
// Throws std::invalid_argument on schema or version mismatch.
ExplorationState StateFromJson(const nlohmann::ordered_json& j);

// Indented JSON with arrays of scalars kept on one line; ends with a newline.
std::string FormatJson(const nlohmann::ordered_json& j);

struct Diagnostic {
  enum class Kind { kParse, kCertificate };
  Kind kind;
  std::string message;
};

// Reads a PolytopeRecord file and re-certifies it: the function is Delaunay
// with lattice minimum 0, its zero set is exactly the listed vertices (plus
// the kernel lattice when unbounded), and qrank is 1.
std::variant<PolytopeRecord, Diagnostic> ValidateSeed(const std::string& path);
std::variant<PolytopeRecord, Diagnostic> ValidateRecord(const PolytopeRecord& p);

}  // namespace pdel

#endif  // PDEL_EXPLORE_H_
