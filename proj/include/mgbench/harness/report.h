//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_HARNESS_REPORT_H_
#define MGBENCH_HARNESS_REPORT_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mgbench/harness/cascade.h"

namespace mgb {

inline constexpr int kRdsBins = 40;
inline constexpr double kRdsCoreHalfWidth = 0.3;

class ReportError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct StageCounts {
  std::int64_t total = 0;
  std::int64_t valid = 0;
  std::int64_t unique = 0;
  std::int64_t novel = 0;
  std::int64_t pc = 0;
  std::int64_t nbm = 0;

  bool operator==(const StageCounts &) const = default;
};

// Sample mean and standard deviation (n - 1 denominator; 0 when n < 2).
struct Summary {
  std::int64_t n = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

struct RunMeta {
  std::string pair;
  std::string decoder;
  int latent_dim = 0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  int n_grid = 0;
  int n_perturb = 0;
};

struct RunTiming {
  // Wall clock of the decode phase only; the throughput denominator.
  double decode_wall_s = 0.0;
  // Wall clock of the whole command, including loading and filtering.
  double wall_clock_s = 0.0;
};

struct StageRates {
  double total = 0.0;
  double valid = 0.0;
  double unique = 0.0;
  double novel = 0.0;
  double pc = 0.0;
  double nbm = 0.0;
};

struct BaselineComparison {
  std::string name;
  // mean SAS (this run) - mean SAS (baseline), over unique valid molecules.
  double delta_sas = 0.0;
  // NBM molecules per decode second, this run over baseline. Empty when the
  // baseline produced no NBM molecules.
  std::optional<double> efficiency_ratio;
};

struct RunReport {
  RunMeta meta;
  StageCounts counts;
  // Over unique valid molecules.
  Summary qed;
  Summary sas;
  // novel / unique, 0 when nothing is unique.
  double novelty_fraction = 0.0;
  // Bin k covers [-1 + 0.05k, -1 + 0.05(k+1)); the last bin also holds 1.0.
  std::array<std::int64_t, kRdsBins> rds_histogram{};
  // Unique valid molecules with -0.3 < RDS < 0.3.
  std::int64_t rds_core = 0;
  std::int64_t rds_clamped = 0;
  std::optional<BaselineComparison> baseline;
  RunTiming timing;

  StageRates rates() const;
};

int rds_bin(double rds);

// Throws ReportError when the baseline was run on a different reference
// pair or latent dimension.
RunReport kpi_report(std::span<const GenerationRecord> records, const RunMeta &meta,
                     const RunTiming &timing, const RunReport *baseline = nullptr,
                     const std::string &baseline_name = "baseline");

// Everything that depends on wall-clock time sits under the "timing" key.
nlohmann::json report_to_json(const RunReport &report);
RunReport report_from_json(const nlohmann::json &j);

// QED-SAS scatter of unique valid records, one row each, sorted by
// (t, perturb_index, grid_index). Columns:
//   grid_index,perturb_index,t,canonical,qed,sas,rds,novel,pc_pass,nbm_pass
void write_scatter_csv(std::ostream &out, std::span<const GenerationRecord> records);
// Columns: bin,lower,upper,count
void write_rds_histogram_csv(std::ostream &out, const RunReport &report);

}  // namespace mgb

#endif  // MGBENCH_HARNESS_REPORT_H_
