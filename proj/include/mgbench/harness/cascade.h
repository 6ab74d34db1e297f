//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_HARNESS_CASCADE_H_
#define MGBENCH_HARNESS_CASCADE_H_

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "mgbench/bridge/generation_set.h"
#include "mgbench/descriptors/descriptors.h"
#include "mgbench/descriptors/qed.h"
#include "mgbench/descriptors/sascore.h"
#include "mgbench/fingerprint/similarity.h"
#include "mgbench/harness/reference_pair.h"

namespace mgb {

inline constexpr double kNotEvaluated = std::numeric_limits<double>::quiet_NaN();

// A decoded candidate annotated by the filter cascade. qed, sas and rds are
// NaN unless the record is the first occurrence of a valid canonical form.
struct GenerationRecord {
  int grid_index = 0;
  int perturb_index = 0;
  double t = 0.0;
  std::string raw_smiles;
  bool valid = false;
  std::string canonical;
  bool unique_first = false;
  bool novel = false;
  double qed = kNotEvaluated;
  double sas = kNotEvaluated;
  bool pc_pass = false;
  bool nbm_pass = false;
  double rds = kNotEvaluated;
  bool rds_clamped = false;
  std::int64_t decode_micros = 0;
};

struct MoleculeProperties {
  double qed = 0.0;
  double sas = 0.0;
  double rds = 0.0;
  bool rds_clamped = false;
  // Generic scaffold exists and differs from both reference scaffolds.
  bool novel_scaffold = false;
};

// Computes per-molecule properties for the cascade. Called concurrently.
class PropertyProbe {
public:
  virtual ~PropertyProbe() = default;
  virtual MoleculeProperties evaluate(const std::string &canonical) const = 0;
};

class ChemistryProbe: public PropertyProbe {
public:
  ChemistryProbe(const ReferencePair &pair, const DescriptorTables &tables,
                 const QedParams &qed_params, const FragScores &frag_scores);

  MoleculeProperties evaluate(const std::string &canonical) const override;

private:
  const DescriptorTables &tables_;
  const QedParams &qed_params_;
  const FragScores &frag_scores_;
  RdsReference rds_;
  int n_bits_;
  std::set<std::string> reference_scaffolds_;
};

struct CascadeConfig {
  PcThresholds pc;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
};

// valid -> unique -> novel (canonical not in training_index) -> PC -> NBM.
// unique_first goes to the first record, in input order, of each canonical
// form. Properties are evaluated once per unique valid form.
std::vector<GenerationRecord> filter_cascade(const GenerationSet &set,
                                             const std::unordered_set<std::string> &training_index,
                                             const PropertyProbe &probe,
                                             const CascadeConfig &cfg = {});

}  // namespace mgb

#endif  // MGBENCH_HARNESS_CASCADE_H_
