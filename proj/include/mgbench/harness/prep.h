//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_HARNESS_PREP_H_
#define MGBENCH_HARNESS_PREP_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mgbench/molgraph/corpus.h"

namespace mgb {

struct PrepConfig {
  // Inclusive bounds on the canonical SMILES length.
  std::size_t min_length = 10;
  std::size_t max_length = 200;
  double train_fraction = 0.9;
  std::uint64_t seed = 0;
};

struct PrepStats {
  std::size_t lines = 0;
  std::size_t kept = 0;
  // Rejection reason ("parse", "length", "duplicate") to line count.
  std::map<std::string, std::size_t> rejected;
};

struct PrepResult {
  // Records carry canonical SMILES. Both splits keep input order.
  std::vector<CorpusRecord> train;
  std::vector<CorpusRecord> test;
  PrepStats stats;
};

// strip stereo and minor components -> parse -> canonicalize -> length
// filter -> dedupe by canonical form (first occurrence wins) -> seeded
// train/test split.
PrepResult prep_dataset(std::span<const CorpusRecord> raw, const PrepConfig &cfg = {});

}  // namespace mgb

#endif  // MGBENCH_HARNESS_PREP_H_
