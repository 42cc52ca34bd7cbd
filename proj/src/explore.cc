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

#include "pdel/explore.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "pdel/equiv.h"
#include "pdel/hinge.h"

namespace pdel {

namespace {

constexpr const char* kStateFormat = "pdel-state/1";
constexpr const char* kGraphFormat = "pdel-graph/1";

std::string NodeKey(const PolytopeRecord& p) {
  return p.bounded ? Certificate(p) : UnboundedKey(p);
}

struct FlipOutcome {
  std::optional<FlipResult> result;  // empty: unbounded ridge
  std::string key;
};

FlipOutcome ComputeFlip(const PolytopeRecord& p, const RidgeOrbit& orbit) {
  FlipOutcome out;
  try {
    out.result = FlipAcross(p, orbit.representative);
  } catch (const UnboundedRidge&) {
    return out;
  }
  out.key = NodeKey(out.result->new_record);
  return out;
}

bool SameType(const PolytopeRecord& a, const PolytopeRecord& b) {
  if (a.bounded != b.bounded) return false;
  if (!a.bounded) return true;  // equal keys: same bounded factor and rank
  try {
    AreEquivalent(a, b);
    return true;
  } catch (const NotEquivalent&) {
    return false;
  }
}

// Index of the node of this type, if known.
std::optional<std::size_t> Lookup(const ExplorationState& s, const std::string& key,
                                  const PolytopeRecord& p) {
  const auto it = s.registry.find(key);
  if (it == s.registry.end()) return std::nullopt;
  for (std::size_t i : it->second)
    if (SameType(s.graph.nodes[i].record, p)) return i;
  return std::nullopt;
}

std::size_t AddNode(ExplorationState& s, const std::string& key, const PolytopeRecord& p) {
  const std::size_t index = s.graph.nodes.size();
  GraphNode node;
  node.key = key;
  // Certificate collisions between inequivalent records get a suffix.
  const auto it = s.registry.find(key);
  if (it != s.registry.end() && !it->second.empty())
    node.key += "#" + std::to_string(it->second.size());
  node.record = p;
  s.graph.nodes.push_back(std::move(node));
  s.registry[key].push_back(index);
  s.next_orbit.push_back(0);
  if (p.bounded) s.frontier.push_back(index);
  return index;
}

nlohmann::ordered_json PointsToJson(const std::vector<Point>& pts) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const Point& p : pts) j.push_back(PointToJson(p));
  return j;
}

std::vector<Point> PointsFromJson(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(PointFromJson(p));
  return out;
}

nlohmann::ordered_json NodeToJson(const GraphNode& n) {
  nlohmann::ordered_json j;
  j["key"] = n.key;
  j["bounded"] = n.record.bounded;
  j["record"] = ToJson(n.record);
  if (n.orbits) {
    j["aut_order"] = n.aut_order.get_str();
    j["orbits"] = nlohmann::ordered_json::array();
    for (const RidgeOrbit& o : *n.orbits) {
      nlohmann::ordered_json oj;
      oj["representative"] = PointsToJson(o.representative);
      oj["orbit_size"] = o.orbit_size;
      oj["stabilizer_order"] = o.stabilizer_order.get_str();
      j["orbits"].push_back(std::move(oj));
    }
  } else {
    j["aut_order"] = nullptr;
    j["orbits"] = nullptr;
  }
  return j;
}

GraphNode NodeFromJson(const nlohmann::ordered_json& j) {
  GraphNode n;
  n.key = j.at("key").get<std::string>();
  n.record = PolytopeRecordFromJson(j.at("record"));
  if (!j.at("orbits").is_null()) {
    n.aut_order = Int(j.at("aut_order").get<std::string>());
    std::vector<RidgeOrbit> orbits;
    for (const auto& oj : j.at("orbits")) {
      RidgeOrbit o;
      o.representative = PointsFromJson(oj.at("representative"));
      o.orbit_size = oj.at("orbit_size").get<std::size_t>();
      o.stabilizer_order = Int(oj.at("stabilizer_order").get<std::string>());
      orbits.push_back(std::move(o));
    }
    n.orbits = std::move(orbits);
  }
  return n;
}

nlohmann::ordered_json EdgeToJson(const GraphEdge& e) {
  nlohmann::ordered_json j;
  j["source"] = e.source;
  j["target"] = e.target;
  j["orbit"] = e.orbit;
  j["ridge"] = PointsToJson(e.ridge);
  j["rho_m"] = RatToString(e.rho_m);
  j["witness"] = PointToJson(e.witness);
  return j;
}

GraphEdge EdgeFromJson(const nlohmann::ordered_json& j) {
  GraphEdge e;
  e.source = j.at("source").get<std::size_t>();
  e.target = j.at("target").get<std::size_t>();
  e.orbit = j.at("orbit").get<std::size_t>();
  e.ridge = PointsFromJson(j.at("ridge"));
  e.rho_m = RatFromString(j.at("rho_m").get<std::string>());
  e.witness = PointFromJson(j.at("witness"));
  return e;
}

// Whether a and b describe the same lattice point set.
bool SameZeroSet(const PolytopeRecord& a, const PolytopeRecord& b) {
  if (a.bounded != b.bounded || a.dim != b.dim) return false;
  if (a.bounded) return a.vertices == b.vertices;
  if (a.kernel.size() != b.kernel.size()) return false;
  const std::size_t n = a.dim;
  const auto in_lattice = [n](const std::vector<Point>& basis, const Point& v) {
    Mat m(n, basis.size());
    Mat rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = static_cast<long>(basis[j][i]);
      rhs(i, 0) = static_cast<long>(v[i]);
    }
    const auto sol = Solve(m, rhs);
    if (!sol) return false;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if ((*sol)(j, 0).get_den() != 1) return false;
    return true;
  };
  for (const Point& k : a.kernel)
    if (!in_lattice(b.kernel, k)) return false;
  for (const Point& k : b.kernel)
    if (!in_lattice(a.kernel, k)) return false;
  const auto covered = [&](const PolytopeRecord& x, const PolytopeRecord& y) {
    for (const Point& v : x.vertices) {
      bool hit = false;
      for (const Point& w : y.vertices) {
        Point d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = v[i] - w[i];
        if (in_lattice(y.kernel, d)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace

std::string StopReasonName(StopReason r) {
  switch (r) {
    case StopReason::kComplete:
      return "complete";
    case StopReason::kMaxNodes:
      return "max-nodes";
    case StopReason::kMaxFlips:
      return "max-flips";
    case StopReason::kWallClock:
      return "wall-clock";
    case StopReason::kInterrupted:
      return "interrupted";
  }
  return "unknown";
}

ExplorationState InitialState(const std::vector<PolytopeRecord>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("no seeds");
  ExplorationState s;
  s.graph.dim = seeds.front().dim;
  for (const PolytopeRecord& p : seeds) {
    if (p.dim != s.graph.dim) throw std::invalid_argument("seed dimensions differ");
    if (!IsPerfect(p)) throw std::invalid_argument("seed is not perfect");
    const std::string key = NodeKey(p);
    if (!Lookup(s, key, p)) AddNode(s, key, p);
  }
  return s;
}

StopReason Explore(ExplorationState& state, const ExploreLimits& limits,
                   const std::function<void(const ExplorationState&)>& on_commit,
                   const std::atomic<bool>* stop) {
  const auto start = std::chrono::steady_clock::now();
  const auto notify = [&] {
    if (on_commit) on_commit(state);
  };
  const auto check = [&]() -> std::optional<StopReason> {
    if (stop && stop->load()) return StopReason::kInterrupted;
    if (limits.max_flips && state.flips >= *limits.max_flips) return StopReason::kMaxFlips;
    if (limits.wall_clock_seconds) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (elapsed >= *limits.wall_clock_seconds) return StopReason::kWallClock;
    }
    return std::nullopt;
  };
  const std::size_t threads = std::max<std::size_t>(1, limits.threads);

  while (!state.frontier.empty()) {
    if (auto r = check()) {
      notify();
      return *r;
    }
    const std::size_t i = state.frontier.front();
    GraphNode& node = state.graph.nodes[i];
    if (!node.orbits) {
      const AutGroup aut = Automorphisms(node.record);
      node.aut_order = aut.order;
      node.orbits = RidgeOrbits(node.record, aut, limits.backend);
      notify();
    }
    const PolytopeRecord source = state.graph.nodes[i].record;
    const std::vector<RidgeOrbit> orbits = *state.graph.nodes[i].orbits;
    while (state.next_orbit[i] < orbits.size()) {
      const std::size_t begin = state.next_orbit[i];
      const std::size_t end = std::min(orbits.size(), begin + threads);
      std::vector<FlipOutcome> outcomes(end - begin);
      if (threads == 1) {
        outcomes[0] = ComputeFlip(source, orbits[begin]);
      } else {
        std::vector<std::future<FlipOutcome>> futures;
        for (std::size_t k = begin; k < end; ++k)
          futures.push_back(std::async(std::launch::async, ComputeFlip, std::cref(source),
                                       std::cref(orbits[k])));
        for (std::size_t k = 0; k < futures.size(); ++k) outcomes[k] = futures[k].get();
      }
      for (std::size_t k = begin; k < end; ++k) {
        if (auto r = check()) {
          notify();
          return *r;
        }
        FlipOutcome& out = outcomes[k - begin];
        if (!out.result) {
          state.unbounded_ridges.emplace_back(i, k);
          ++state.next_orbit[i];
          notify();
          continue;
        }
        const PolytopeRecord& target = out.result->new_record;
        std::optional<std::size_t> j = Lookup(state, out.key, target);
        if (!j) {
          if (limits.max_nodes && state.graph.nodes.size() >= *limits.max_nodes) {
            notify();
            return StopReason::kMaxNodes;
          }
          j = AddNode(state, out.key, target);
        }
        GraphEdge e;
        e.source = i;
        e.target = *j;
        e.orbit = k;
        e.ridge = orbits[k].representative;
        e.rho_m = out.result->rho_m;
        e.witness = out.result->witness;
        state.graph.edges.push_back(std::move(e));
        ++state.flips;
        ++state.next_orbit[i];
        notify();
      }
    }
    state.frontier.pop_front();
  }
  notify();
  return StopReason::kComplete;
}

std::string ExportGap(const AdjacencyGraph& g, bool include_unbounded) {
  std::vector<long> number(g.nodes.size(), -1);
  long next = 1;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (include_unbounded || g.nodes[i].record.bounded) number[i] = next++;
  const bool any_unbounded = std::any_of(g.nodes.begin(), g.nodes.end(),
                                         [](const GraphNode& n) { return !n.record.bounded; });
  std::ostringstream out;
  if (any_unbounded) {
    out << "# Dimension " << g.dim << ", nodes in discovery order, edges under their source.\n";
    if (!include_unbounded) out << "# Unbounded polyhedra are omitted.\n";
    out << "# Ridges of unbounded polyhedra are not explored; the component may be incomplete.\n";
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (number[i] < 0) continue;
    out << number[i] << ":";
    bool first = true;
    for (const GraphEdge& e : g.edges) {
      if (e.source != i || number[e.target] < 0) continue;
      out << (first ? " " : ", ") << "[" << number[i] << ", " << number[e.target] << "]";
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

void FormatInto(const nlohmann::ordered_json& j, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + nlohmann::ordered_json(k).dump() + ": ";
      FormatInto(v, indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); })) {
    out += "[\n";
    bool first = true;
    for (const auto& v : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      FormatInto(v, indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    bool first = true;
    for (const auto& v : j) {
      if (!first) out += ", ";
      first = false;
      out += v.dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string FormatJson(const nlohmann::ordered_json& j) {
  std::string out;
  FormatInto(j, 0, out);
  out += "\n";
  return out;
}

nlohmann::ordered_json GraphToJson(const AdjacencyGraph& g) {
  nlohmann::ordered_json j;
  j["format"] = kGraphFormat;
  j["dim"] = g.dim;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const GraphNode& n : g.nodes) j["nodes"].push_back(NodeToJson(n));
  j["edges"] = nlohmann::ordered_json::array();
  for (const GraphEdge& e : g.edges) j["edges"].push_back(EdgeToJson(e));
  return j;
}

nlohmann::ordered_json StateToJson(const ExplorationState& s) {
  nlohmann::ordered_json j;
  j["format"] = kStateFormat;
  j["graph"] = GraphToJson(s.graph);
  j["frontier"] = nlohmann::ordered_json::array();
  for (std::size_t i : s.frontier) j["frontier"].push_back(i);
  j["next_orbit"] = s.next_orbit;
  j["flips"] = s.flips;
  j["unbounded_ridges"] = nlohmann::ordered_json::array();
  for (auto [node, orbit] : s.unbounded_ridges)
    j["unbounded_ridges"].push_back(nlohmann::ordered_json::array({node, orbit}));
  return j;
}

ExplorationState StateFromJson(const nlohmann::ordered_json& j) {
  try {
    if (j.at("format") != kStateFormat) throw std::invalid_argument("unknown state format");
    const auto& gj = j.at("graph");
    if (gj.at("format") != kGraphFormat) throw std::invalid_argument("unknown graph format");
    ExplorationState s;
    s.graph.dim = gj.at("dim").get<std::size_t>();
    for (const auto& nj : gj.at("nodes")) s.graph.nodes.push_back(NodeFromJson(nj));
    for (const auto& ej : gj.at("edges")) s.graph.edges.push_back(EdgeFromJson(ej));
    for (const auto& f : j.at("frontier")) s.frontier.push_back(f.get<std::size_t>());
    s.next_orbit = j.at("next_orbit").get<std::vector<std::size_t>>();
    s.flips = j.at("flips").get<std::size_t>();
    for (const auto& u : j.at("unbounded_ridges"))
      s.unbounded_ridges.emplace_back(u.at(0).get<std::size_t>(), u.at(1).get<std::size_t>());
    if (s.next_orbit.size() != s.graph.nodes.size())
      throw std::invalid_argument("next_orbit size mismatch");
    for (std::size_t i = 0; i < s.graph.nodes.size(); ++i) {
      std::string key = s.graph.nodes[i].key;
      if (const auto hash = key.find('#'); hash != std::string::npos) key.resize(hash);
      s.registry[key].push_back(i);
    }
    for (std::size_t i : s.frontier)
      if (i >= s.graph.nodes.size()) throw std::invalid_argument("frontier index");
    for (const GraphEdge& e : s.graph.edges)
      if (e.source >= s.graph.nodes.size() || e.target >= s.graph.nodes.size())
        throw std::invalid_argument("edge index");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed state: ") + e.what());
  }
}

std::variant<PolytopeRecord, Diagnostic> ValidateRecord(const PolytopeRecord& p) {
  const auto fail = [](std::string msg) {
    return Diagnostic{Diagnostic::Kind::kCertificate, std::move(msg)};
  };
  PolytopeRecord rec;
  try {
    rec = VertexSetOf(p.function);
  } catch (const NotDelaunay& e) {
    return fail(e.what());
  }
  if (!(rec.function == p.function))
    return fail("function is not normalized to lattice minimum 0 with primitive coefficients");
  if (!SameZeroSet(rec, p)) return fail("listed vertices differ from the zero set of the function");
  const std::size_t qrank = Qrank(ZeroSetSample(rec), rec.dim);
  if (qrank != 1) return fail("qrank = " + std::to_string(qrank) + ", not perfect");
  return p;
}

std::variant<PolytopeRecord, Diagnostic> ValidateSeed(const std::string& path) {
  std::ifstream in(path);
  if (!in) return Diagnostic{Diagnostic::Kind::kParse, "cannot open " + path};
  PolytopeRecord p;
  try {
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(in);
    p = PolytopeRecordFromJson(j);
  } catch (const nlohmann::json::exception& e) {
    return Diagnostic{Diagnostic::Kind::kParse, std::string("parse error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return Diagnostic{Diagnostic::Kind::kParse, std::string("invalid record: ") + e.what()};
  }
  return ValidateRecord(p);
}

}  // namespace pdel
