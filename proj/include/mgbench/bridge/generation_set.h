//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_BRIDGE_GENERATION_SET_H_
#define MGBENCH_BRIDGE_GENERATION_SET_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mgb {

// One decoded bridge candidate. raw_smiles is empty when the decoder
// reported a failure for this slot.
struct GeneratedCandidate {
  int grid_index = 0;
  int perturb_index = 0;
  double t = 0.0;
  std::string raw_smiles;
  bool valid = false;
  std::string canonical;
  std::int64_t decode_micros = 0;

  bool operator==(const GeneratedCandidate &) const = default;
};

using GenerationSet = std::vector<GeneratedCandidate>;

// Tab-separated, one candidate per line, columns:
//   grid_index perturb_index t raw_smiles valid_flag canonical decode_micros
// t is written with 17 significant digits so it round-trips exactly.
void write_generation_set(std::ostream &out, const GenerationSet &set);
void write_generation_set(const std::filesystem::path &path, const GenerationSet &set);
GenerationSet read_generation_set(std::istream &in);
GenerationSet read_generation_set(const std::filesystem::path &path);

}  // namespace mgb

#endif  // MGBENCH_BRIDGE_GENERATION_SET_H_
