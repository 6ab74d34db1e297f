//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/harness/prep.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "mgbench/molgraph/smiles.h"

namespace mgb {

PrepResult prep_dataset(std::span<const CorpusRecord> raw, const PrepConfig &cfg) {
  if (!(cfg.train_fraction >= 0.0 && cfg.train_fraction <= 1.0))
    throw std::invalid_argument("train fraction must lie in [0, 1]");
  PrepResult result;
  result.stats.rejected = {{"parse", 0}, {"length", 0}, {"duplicate", 0}};

  const ParseOptions unlimited{.max_length = std::numeric_limits<std::size_t>::max()};
  std::unordered_set<std::string> seen;
  std::vector<CorpusRecord> kept;
  for (const CorpusRecord &rec : raw) {
    ++result.stats.lines;
    std::string canonical;
    try {
      canonical = canonicalize(strip_stereo_and_components(rec.smiles, unlimited), unlimited);
    } catch (const SmilesError &) {
      ++result.stats.rejected["parse"];
      continue;
    }
    if (canonical.size() < cfg.min_length || canonical.size() > cfg.max_length) {
      ++result.stats.rejected["length"];
      continue;
    }
    if (!seen.insert(canonical).second) {
      ++result.stats.rejected["duplicate"];
      continue;
    }
    kept.push_back({std::move(canonical), rec.id, rec.line});
  }
  result.stats.kept = kept.size();

  std::vector<std::size_t> order(kept.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(cfg.seed);
  std::shuffle(order.begin(), order.end(), rng);
  const auto n_train = static_cast<std::size_t>(std::floor(cfg.train_fraction * kept.size() + 0.5));
  std::vector<char> in_train(kept.size(), 0);
  for (std::size_t i = 0; i < n_train; ++i)
    in_train[order[i]] = 1;
  for (std::size_t i = 0; i < kept.size(); ++i)
    (in_train[i] ? result.train : result.test).push_back(std::move(kept[i]));
  return result;
}

}  // namespace mgb
