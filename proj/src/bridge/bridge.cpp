//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/bridge/bridge.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "mgbench/molgraph/smiles.h"

namespace mgb {
namespace {

using Clock = std::chrono::steady_clock;

struct WorkItem {
  int grid_index;
  int first_perturb;
  int count;
};

std::vector<WorkItem> plan_work(const BridgeConfig &cfg) {
  const int chunk = cfg.max_batch > 0 ? std::min(cfg.max_batch, cfg.n_perturb) : cfg.n_perturb;
  std::vector<WorkItem> items;
  for (int g = 0; g < cfg.n_grid; ++g)
    for (int p = 0; p < cfg.n_perturb; p += chunk)
      items.push_back({g, p, std::min(chunk, cfg.n_perturb - p)});
  return items;
}

}  // namespace

BridgeRun bridge_run(const LatentVector &a, const LatentVector &b, double sigma, Decoder &decoder,
                     const BridgeConfig &cfg) {
  if (cfg.n_perturb < 1)
    throw LatentError("n_perturb must be at least 1");
  if (!(sigma >= 0.0))
    throw LatentError("perturbation sigma must be non-negative");
  if (static_cast<int>(a.size()) != decoder.latent_dim())
    throw LatentError("reference latent dimension " + std::to_string(a.size()) +
                      " does not match decoder latent_dim " +
                      std::to_string(decoder.latent_dim()));

  const std::vector<double> ts = grid_positions(cfg.n_grid, cfg.include_endpoints);
  std::vector<LatentVector> centres;
  centres.reserve(ts.size());
  for (double t : ts)
    centres.push_back(slerp(a, b, t));

  const std::vector<WorkItem> items = plan_work(cfg);
  BridgeRun run;
  run.records.resize(static_cast<std::size_t>(cfg.total_candidates()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    std::vector<LatentVector> batch;
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size())
        return;
      const WorkItem &item = items[i];
      try {
        batch.clear();
        for (int k = 0; k < item.count; ++k) {
          const int p = item.first_perturb + k;
          std::mt19937_64 rng(candidate_seed(cfg.seed, item.grid_index, p));
          batch.push_back(perturb(centres[item.grid_index], sigma, rng));
        }
        const auto start = Clock::now();
        std::vector<DecodeResult> decoded = decoder.decode_batch(batch);
        const auto micros =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
        if (decoded.size() != batch.size())
          throw DecoderTransportError("decoder returned " + std::to_string(decoded.size()) +
                                      " results for " + std::to_string(batch.size()) + " inputs");
        for (int k = 0; k < item.count; ++k) {
          const int p = item.first_perturb + k;
          GeneratedCandidate &rec =
              run.records[static_cast<std::size_t>(item.grid_index) * cfg.n_perturb + p];
          rec.grid_index = item.grid_index;
          rec.perturb_index = p;
          rec.t = ts[item.grid_index];
          rec.decode_micros = cfg.record_timing ? micros / item.count : 0;
          if (decoded[k]) {
            rec.raw_smiles = std::move(*decoded[k]);
            if (auto canonical = canonical_if_valid(rec.raw_smiles)) {
              rec.valid = true;
              rec.canonical = std::move(*canonical);
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  int n_threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n_threads = std::max(1, std::min<int>(n_threads, static_cast<int>(items.size())));

  const auto start = Clock::now();
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n_threads; ++i)
      pool.emplace_back(worker);
  }
  run.decode_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (error)
    std::rethrow_exception(error);
  return run;
}

ScanResult noise_scan(const LatentVector &a, const LatentVector &b, std::span<const double> sigmas,
                      Decoder &decoder, const BridgeConfig &cfg,
                      const std::unordered_set<std::string> &corpus_index) {
  ScanResult result;
  std::optional<SigmaScan> best;
  for (double sigma : sigmas) {
    SigmaScan scan;
    scan.sigma = sigma;
    try {
      const BridgeRun run = bridge_run(a, b, sigma, decoder, cfg);
      std::unordered_set<std::string> seen;
      scan.total = static_cast<std::int64_t>(run.records.size());
      for (const GeneratedCandidate &c : run.records) {
        if (!c.valid)
          continue;
        ++scan.valid;
        if (seen.insert(c.canonical).second) {
          ++scan.unique;
          if (!corpus_index.contains(c.canonical))
            ++scan.novel;
        }
      }
      scan.decode_seconds = run.decode_seconds;
    } catch (const DecoderTransportError &e) {
      scan.error = e.what();
    }

    if (!scan.error) {
      const bool better = !best || scan.novel > best->novel ||
                          (scan.novel == best->novel && sigma < best->sigma);
      if (better) {
        best = scan;
        result.sigma_star = sigma;
      }
    }
    result.per_sigma.push_back(std::move(scan));
  }
  return result;
}

}  // namespace mgb
