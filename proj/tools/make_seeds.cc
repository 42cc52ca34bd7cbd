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

// Writes the bundled seed records into a directory.
//
//   make_seeds <out_dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "pdel/delaunay.h"
#include "pdel/explore.h"
#include "pdel/seeds.h"

namespace {

void Write(const std::filesystem::path& path, const pdel::PolytopeRecord& p) {
  std::ofstream out(path);
  out << pdel::FormatJson(pdel::ToJson(p));
  std::cout << path.string() << ": " << p.vertices.size() << " vertices\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_seeds <out_dir>\n";
    return 1;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  Write(dir / "segment.json", pdel::SegmentSeed());
  Write(dir / "gosset_2_21.json", pdel::Gosset221Seed());
  Write(dir / "gosset_3_21.json", pdel::Gosset321Seed());
  Write(dir / "unit_slab_2.json", pdel::UnitSlab(2));
  Write(dir / "laminated_3_21.json", pdel::Laminated321Seed());
  return 0;
}
