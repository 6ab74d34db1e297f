//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_BRIDGE_BRIDGE_H_
#define MGBENCH_BRIDGE_BRIDGE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mgbench/bridge/generation_set.h"
#include "mgbench/bridge/latent.h"
#include "mgbench/decoder/decoder.h"

namespace mgb {

inline constexpr double kDefaultScanSigmas[] = {0.0, 0.05, 0.1, 0.15, 0.2, 0.3, 0.5};

struct BridgeConfig {
  int n_grid = 100;
  int n_perturb = 100;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  bool include_endpoints = true;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  int threads = 0;
  // Upper bound on vectors per decode_batch call. Each call covers part of a
  // single grid point; 0 means one call per grid point.
  int max_batch = 1000;
  // When false every decode_micros field is written as 0, which makes the
  // GenerationSet file reproducible byte for byte.
  bool record_timing = true;

  static BridgeConfig coarse() { return {}; }
  static BridgeConfig production() {
    BridgeConfig cfg;
    cfg.n_perturb = 5000;
    return cfg;
  }
  std::int64_t total_candidates() const {
    return static_cast<std::int64_t>(n_grid) * n_perturb;
  }
};

struct BridgeRun {
  GenerationSet records;
  // Wall clock of the whole decode phase, all workers together.
  double decode_seconds = 0.0;
};

// Decodes n_grid x n_perturb candidates. Candidate (g, p) is
// perturb(slerp(a, b, t_g), sigma) with its own random stream seeded by
// candidate_seed(cfg.seed, g, p); records come back ordered by (g, p) no
// matter how many workers ran. cfg.sigma is ignored in favour of `sigma`.
BridgeRun bridge_run(const LatentVector &a, const LatentVector &b, double sigma, Decoder &decoder,
                     const BridgeConfig &cfg);

struct SigmaScan {
  double sigma = 0.0;
  std::int64_t total = 0;
  std::int64_t valid = 0;
  std::int64_t unique = 0;
  // Distinct valid canonical forms absent from the corpus index.
  std::int64_t novel = 0;
  double decode_seconds = 0.0;
  std::optional<std::string> error;
};

struct ScanResult {
  std::vector<SigmaScan> per_sigma;
  // Largest novel count; ties go to the smaller sigma. Empty when every
  // sigma failed.
  std::optional<double> sigma_star;
};

ScanResult noise_scan(const LatentVector &a, const LatentVector &b, std::span<const double> sigmas,
                      Decoder &decoder, const BridgeConfig &cfg,
                      const std::unordered_set<std::string> &corpus_index);

}  // namespace mgb

#endif  // MGBENCH_BRIDGE_BRIDGE_H_
