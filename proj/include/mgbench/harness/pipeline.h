//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_HARNESS_PIPELINE_H_
#define MGBENCH_HARNESS_PIPELINE_H_

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "mgbench/bridge/bridge.h"
#include "mgbench/descriptors/descriptors.h"
#include "mgbench/descriptors/qed.h"
#include "mgbench/descriptors/sascore.h"
#include "mgbench/harness/cascade.h"
#include "mgbench/harness/report.h"

namespace mgb {

// Canonical forms of every SMILES in a corpus file. Throws SmilesError on
// the first unparseable line.
std::unordered_set<std::string> load_training_index(const std::filesystem::path &corpus);

// Molecules of a corpus file, in file order.
std::vector<Molecule> load_molecules(const std::filesystem::path &corpus);

// Descriptor tables and QED parameters from the data directory.
struct ChemistryTables {
  DescriptorTables descriptors;
  QedParams qed;

  static ChemistryTables load(const std::filesystem::path &data_dir);
};

struct RunOutput {
  GenerationSet generation;
  std::vector<GenerationRecord> records;
  RunReport report;
};

// Bridge run followed by the filter cascade and the KPI report.
// timing.wall_clock_s is left for the caller to fill in.
RunOutput run_pipeline(const ReferencePair &pair, Decoder &decoder, const BridgeConfig &cfg,
                       const std::unordered_set<std::string> &training_index,
                       const ChemistryTables &tables, const FragScores &frag_scores,
                       const RunReport *baseline = nullptr,
                       const std::string &baseline_name = "baseline");

// Writes generation.tsv, report.json, scatter.csv and rds_histogram.csv.
void write_run_outputs(const std::filesystem::path &dir, const RunOutput &out);

}  // namespace mgb

#endif  // MGBENCH_HARNESS_PIPELINE_H_
