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

// Command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 certificate failure (a
// seed that is not a perfect Delaunay record, or a ridge whose qrank is not
// 2), 3 unbounded hinge parameter.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdel/cvp.h"
#include "pdel/equiv.h"
#include "pdel/explore.h"
#include "pdel/hinge.h"
#include "pdel/qfunc.h"

namespace {

using pdel::Diagnostic;
using pdel::PolytopeRecord;
using pdel::Rat;

constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kCertificateFailure = 2;
constexpr int kUnbounded = 3;

std::atomic<bool> g_interrupted{false};

void OnSigint(int) { g_interrupted.store(true); }

nlohmann::ordered_json ReadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return nlohmann::ordered_json::parse(in);
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string PointString(const pdel::Point& p) { return pdel::PointToJson(p).dump(); }

// Loads and certifies a seed; prints the diagnostic and sets `code` on failure.
std::optional<PolytopeRecord> LoadSeed(const std::string& path, int& code) {
  auto v = pdel::ValidateSeed(path);
  if (auto* d = std::get_if<Diagnostic>(&v)) {
    std::cerr << path << ": " << d->message << "\n";
    code = d->kind == Diagnostic::Kind::kParse ? kParseError : kCertificateFailure;
    return std::nullopt;
  }
  return std::get<PolytopeRecord>(v);
}

int CmdValidate(const std::string& path) {
  int code = kOk;
  const auto p = LoadSeed(path, code);
  if (!p) return code;
  std::cout << "ok: dim " << p->dim << ", " << p->vertices.size() << " vertices, "
            << (p->bounded ? "bounded" : "unbounded") << ", qrank 1\n";
  if (p->bounded) std::cout << "certificate " << pdel::Certificate(*p) << "\n";
  return kOk;
}

struct ExploreConfig {
  std::size_t dim = 0;
  std::vector<std::string> seeds;
  std::string out = "pdel-out";
  std::optional<std::size_t> max_nodes;
  std::optional<std::size_t> max_flips;
  std::optional<double> wall_clock;
  std::size_t threads = 1;
  std::string resume;
  std::string export_mode = "both";
};

int CmdExplore(const ExploreConfig& cfg) {
  namespace fs = std::filesystem;
  pdel::ExplorationState state;
  if (!cfg.resume.empty()) {
    try {
      state = pdel::StateFromJson(ReadJson(cfg.resume));
    } catch (const std::exception& e) {
      std::cerr << "cannot resume: " << e.what() << "\n";
      return kParseError;
    }
    if (cfg.dim != 0 && state.graph.dim != cfg.dim) {
      std::cerr << "state has dimension " << state.graph.dim << "\n";
      return kParseError;
    }
  } else {
    if (cfg.seeds.empty()) {
      std::cerr << "explore needs --seed or --resume\n";
      return kParseError;
    }
    std::vector<PolytopeRecord> seeds;
    for (const std::string& path : cfg.seeds) {
      int code = kOk;
      auto p = LoadSeed(path, code);
      if (!p) return code;
      if (cfg.dim != 0 && p->dim != cfg.dim) {
        std::cerr << path << ": seed has dimension " << p->dim << ", expected " << cfg.dim
                  << "\n";
        return kParseError;
      }
      seeds.push_back(std::move(*p));
    }
    state = pdel::InitialState(seeds);
  }

  const fs::path out(cfg.out);
  fs::create_directories(out / "polytopes");
  const fs::path state_path = out / "state.json";
  const auto save = [&](const pdel::ExplorationState& s) {
    WriteFile(state_path, pdel::FormatJson(pdel::StateToJson(s)));
  };

  pdel::ExploreLimits limits;
  limits.max_nodes = cfg.max_nodes;
  limits.max_flips = cfg.max_flips;
  limits.wall_clock_seconds = cfg.wall_clock;
  limits.threads = cfg.threads;

  std::signal(SIGINT, OnSigint);
  const pdel::StopReason reason = pdel::Explore(state, limits, save, &g_interrupted);
  save(state);

  for (const pdel::GraphNode& n : state.graph.nodes) {
    std::string name = n.key;
    for (char& c : name)
      if (c == ':' || c == '#') c = '_';
    WriteFile(out / "polytopes" / (name + ".json"), pdel::FormatJson(pdel::ToJson(n.record)));
  }
  if (cfg.export_mode == "json" || cfg.export_mode == "both")
    WriteFile(out / "graph.json", pdel::FormatJson(pdel::GraphToJson(state.graph)));
  if (cfg.export_mode == "gap" || cfg.export_mode == "both") {
    WriteFile(out / "graph.gap.txt", pdel::ExportGap(state.graph));
    WriteFile(out / "graph.full.gap.txt", pdel::ExportGap(state.graph, true));
  }

  std::size_t bounded = 0;
  for (const auto& n : state.graph.nodes) bounded += n.record.bounded ? 1 : 0;
  std::cout << "stopped: " << pdel::StopReasonName(reason) << "\n"
            << "bounded types: " << bounded << "\n"
            << "unbounded types: " << state.graph.nodes.size() - bounded << "\n"
            << "flips: " << state.flips << "\n"
            << "unbounded ridges: " << state.unbounded_ridges.size() << "\n";
  return kOk;
}

int CmdFlip(const std::string& seed, const std::string& ridge_json) {
  int code = kOk;
  const auto p = LoadSeed(seed, code);
  if (!p) return code;
  std::vector<pdel::Point> ridge;
  try {
    for (const auto& v : nlohmann::ordered_json::parse(ridge_json)) {
      ridge.push_back(pdel::PointFromJson(v));
      if (ridge.back().size() != p->dim) throw std::invalid_argument("ridge point dimension");
    }
  } catch (const std::exception& e) {
    std::cerr << "bad --ridge: " << e.what() << "\n";
    return kParseError;
  }
  try {
    const pdel::FlipResult r = pdel::FlipAcross(*p, ridge);
    std::cout << "rho_m = " << pdel::RatToString(r.rho_m) << "\n"
              << "witness = " << PointString(r.witness) << "\n"
              << "bounded = " << (r.new_record.bounded ? "true" : "false") << "\n"
              << "vertices =";
    for (const auto& v : r.new_record.vertices) std::cout << " " << PointString(v);
    std::cout << "\n" << "record = " << pdel::ToJson(r.new_record).dump() << "\n";
  } catch (const pdel::QrankMismatch& e) {
    std::cerr << e.what() << "\n";
    return kCertificateFailure;
  } catch (const pdel::SignAmbiguous& e) {
    std::cerr << e.what() << "\n";
    return kCertificateFailure;
  } catch (const pdel::UnboundedRidge& e) {
    std::cerr << e.what() << "\n";
    return kUnbounded;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kCertificateFailure;
  }
  return kOk;
}

int CmdQrank(const std::string& path) {
  try {
    const auto j = ReadJson(path);
    const std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<pdel::Point> pts;
    for (const auto& v : j.at("points")) {
      pts.push_back(pdel::PointFromJson(v));
      if (pts.back().size() != dim) throw std::invalid_argument("point dimension");
    }
    std::cout << "qrank = " << pdel::Qrank(pts, dim) << "\n";
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

int CmdCvp(const std::string& path, const std::string& center) {
  try {
    const auto j = ReadJson(path);
    pdel::Mat q;
    if (j.contains("lin")) {
      q = pdel::QuadraticFunctionFromJson(j).gram();
    } else {
      const auto& g = j.at("gram");
      q = pdel::Mat(g.size(), g.size());
      for (std::size_t r = 0; r < g.size(); ++r) {
        if (g[r].size() != g.size()) throw std::invalid_argument("gram must be square");
        for (std::size_t c = 0; c < g.size(); ++c)
          q(r, c) = pdel::RatFromString(g[r][c].is_string() ? g[r][c].get<std::string>()
                                                            : g[r][c].dump());
      }
    }
    pdel::RatVec c;
    std::stringstream ss(center);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(pdel::RatFromString(item));
    if (c.size() != q.rows()) throw std::invalid_argument("center dimension mismatch");
    const pdel::CvpResult r = pdel::ClosestVectors(q, c);
    std::cout << "squared distance = " << pdel::RatToString(r.squared_distance) << "\n"
              << "minimizers = " << r.minimizers.size() << "\n";
    for (const auto& v : r.minimizers) std::cout << PointString(v) << "\n";
  } catch (const pdel::NotPositiveDefinite& e) {
    std::cerr << e.what() << "\n";
    return kCertificateFailure;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect Delaunay polytope enumeration by hinge flips"};
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Re-certify a polytope record");
  validate->add_option("seed", validate_file, "Record file (JSON)")->required();

  ExploreConfig cfg;
  auto* explore = app.add_subcommand("explore", "Explore the adjacency component of seeds");
  explore->add_option("--dim", cfg.dim, "Dimension of the seeds");
  explore->add_option("--seed", cfg.seeds, "Seed record file (repeatable)");
  explore->add_option("--out", cfg.out, "Output directory")->capture_default_str();
  explore->add_option("--max-nodes", cfg.max_nodes, "Stop before exceeding this many nodes")
      ->check(CLI::PositiveNumber);
  explore->add_option("--max-flips", cfg.max_flips, "Stop after this many flips")
      ->check(CLI::NonNegativeNumber);
  explore->add_option("--wall-clock", cfg.wall_clock, "Time limit in seconds")
      ->check(CLI::PositiveNumber);
  explore->add_option("--threads", cfg.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  explore->add_option("--resume", cfg.resume, "Resume from a state.json file");
  explore->add_option("--export", cfg.export_mode, "Export format")
      ->check(CLI::IsMember({"gap", "json", "both"}))
      ->capture_default_str();

  std::string flip_seed, ridge_json;
  auto* flip = app.add_subcommand("flip", "Flip a record across a ridge");
  flip->add_option("seed", flip_seed, "Record file (JSON)")->required();
  flip->add_option("--ridge", ridge_json, "Ridge vertices as JSON, e.g. [[2]]")->required();

  std::string qrank_file;
  auto* qrank = app.add_subcommand("qrank", "qrank of a point set");
  qrank->add_option("points", qrank_file, "JSON {\"dim\": n, \"points\": [[...]]}")->required();

  std::string cvp_file, cvp_center;
  auto* cvp = app.add_subcommand("cvp", "Closest lattice vectors");
  cvp->add_option("form", cvp_file, "JSON with a \"gram\" matrix")->required();
  cvp->add_option("center", cvp_center, "Center, e.g. 1/2,1/2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*validate) return CmdValidate(validate_file);
    if (*explore) return CmdExplore(cfg);
    if (*flip) return CmdFlip(flip_seed, ridge_json);
    if (*qrank) return CmdQrank(qrank_file);
    if (*cvp) return CmdCvp(cvp_file, cvp_center);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}
