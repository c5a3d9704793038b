// Copyright 2026 The hopfcoords Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Writes mesh scene fixtures for the command-line tests.

#include <iostream>
#include <string>

#include "hopf/io.h"
#include "hopf/oracles.h"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: make_fixture flat|finger out.json\n";
    return 1;
  }
  const std::string kind = argv[1];
  hopf::Scene scene{{}, hopf::oracle::basepoint().first, 0.5, 2.0};
  if (kind == "flat") {
    scene.disc_mesh = hopf::oracle::flat_disc(64);
  } else if (kind == "finger") {
    scene.disc_mesh = hopf::oracle::finger_disc(64);
    scene.h_min = 1.8;
    scene.h_max = 2.2;
  } else {
    std::cerr << "unknown fixture " << kind << "\n";
    return 1;
  }
  hopf::write_text_file(argv[2], scene_to_json(scene).dump(2) + "\n");
  return 0;
}
