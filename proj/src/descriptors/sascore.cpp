//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/descriptors/sascore.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mgbench/fingerprint/morgan.h"
#include "mgbench/util/binary_io.h"

namespace mgb {
namespace {

constexpr int kFragmentRadius = 2;

std::vector<std::uint64_t> distinct_ids(const Molecule &mol) {
  std::vector<std::uint64_t> ids;
  for (const MorganEnvironment &e : morgan_environments(mol, kFragmentRadius))
    ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<std::pair<int, int>> ring_bond_pairs(const std::vector<int> &ring) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    int a = ring[i];
    int b = ring[(i + 1) % ring.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FragScores FragScores::build(std::span<const Molecule> corpus, int threads) {
  if (corpus.empty())
    throw std::invalid_argument("fragment score corpus is empty");
  if (threads <= 0)
    threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(corpus.size()));

  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < corpus.size(); i += threads) {
        for (std::uint64_t id : distinct_ids(corpus[i]))
          ++partial[t][id];
      }
    });
  }
  for (auto &th : pool)
    th.join();
  std::map<std::uint64_t, std::uint64_t> df;
  for (const auto &p : partial) {
    for (const auto &[id, n] : p)
      df[id] += n;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> by_count(df.begin(), df.end());
  std::stable_sort(by_count.begin(), by_count.end(),
                   [](const auto &x, const auto &y) { return x.second > y.second; });
  std::uint64_t total = 0;
  for (const auto &entry : by_count)
    total += entry.second;
  std::uint64_t cumulative = 0;
  std::uint64_t df80 = by_count.back().second;
  for (const auto &entry : by_count) {
    cumulative += entry.second;
    if (static_cast<double>(cumulative) >= 0.8 * static_cast<double>(total)) {
      df80 = entry.second;
      break;
    }
  }

  FragScores s;
  s.corpus_size_ = corpus.size();
  for (const auto &[id, n] : df)
    s.scores_.emplace(id, std::log10(static_cast<double>(n) / static_cast<double>(df80)));
  return s;
}

void FragScores::write(std::ostream &out) const {
  std::vector<std::pair<std::uint64_t, double>> sorted(scores_.begin(), scores_.end());
  std::sort(sorted.begin(), sorted.end());
  binio::write_magic(out, "SAS1");
  binio::write_le<std::uint64_t>(out, sorted.size());
  for (const auto &[key, value] : sorted) {
    binio::write_le<std::uint64_t>(out, key);
    binio::write_le<double>(out, value);
  }
  if (!out)
    throw std::runtime_error("failed writing fragment scores");
}

void FragScores::write(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  write(out);
}

FragScores FragScores::read(std::istream &in) {
  binio::expect_magic(in, "SAS1");
  FragScores s;
  const std::uint64_t n = binio::read_le<std::uint64_t>(in);
  s.scores_.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto key = binio::read_le<std::uint64_t>(in);
    const auto value = binio::read_le<double>(in);
    if (!std::isfinite(value))
      throw binio::FormatError("non-finite fragment score");
    s.scores_.emplace(key, value);
  }
  return s;
}

FragScores FragScores::read(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read " + path.string());
  return read(in);
}

double FragScores::contribution(std::uint64_t key) const {
  auto it = scores_.find(key);
  return it == scores_.end() ? kUnknownContribution : it->second;
}

int spiro_atom_count(const Molecule &mol) {
  std::set<int> spiro;
  const auto &rings = mol.rings();
  for (std::size_t i = 0; i < rings.size(); ++i) {
    for (std::size_t j = i + 1; j < rings.size(); ++j) {
      std::vector<int> shared;
      for (int a : rings[i]) {
        if (std::find(rings[j].begin(), rings[j].end(), a) != rings[j].end())
          shared.push_back(a);
      }
      if (shared.size() == 1)
        spiro.insert(shared[0]);
    }
  }
  return static_cast<int>(spiro.size());
}

int bridgehead_atom_count(const Molecule &mol) {
  std::set<int> heads;
  const auto &rings = mol.rings();
  std::vector<std::vector<std::pair<int, int>>> bonds;
  for (const auto &r : rings)
    bonds.push_back(ring_bond_pairs(r));
  for (std::size_t i = 0; i < rings.size(); ++i) {
    for (std::size_t j = i + 1; j < rings.size(); ++j) {
      std::vector<std::pair<int, int>> shared;
      std::set_intersection(bonds[i].begin(), bonds[i].end(), bonds[j].begin(), bonds[j].end(),
                            std::back_inserter(shared));
      if (shared.size() < 2)
        continue;
      // Ends of the shared path touch exactly one shared bond.
      std::map<int, int> touches;
      for (const auto &[a, b] : shared) {
        ++touches[a];
        ++touches[b];
      }
      for (const auto &[atom, n] : touches) {
        if (n == 1)
          heads.insert(atom);
      }
    }
  }
  return static_cast<int>(heads.size());
}

SasTerms sas_terms(const Molecule &mol, const FragScores &scores) {
  SasTerms t;
  std::map<std::uint64_t, int> counts;
  for (const MorganEnvironment &e : morgan_environments(mol, kFragmentRadius))
    ++counts[e.id];
  int occurrences = 0;
  for (const auto &[id, n] : counts) {
    t.fragment += scores.contribution(id) * n;
    occurrences += n;
  }
  if (occurrences > 0)
    t.fragment /= occurrences;

  const double n_atoms = mol.heavy_atom_count();
  t.size_penalty = std::pow(n_atoms, 1.005) - n_atoms;
  t.spiro_penalty = std::log10(spiro_atom_count(mol) + 1.0);
  t.bridgehead_penalty = std::log10(bridgehead_atom_count(mol) + 1.0);
  const bool macrocycle = std::any_of(mol.rings().begin(), mol.rings().end(),
                                      [](const auto &r) { return r.size() > 8; });
  t.macrocycle_penalty = macrocycle ? std::log10(2.0) : 0.0;
  if (n_atoms > static_cast<double>(counts.size()) && !counts.empty())
    t.symmetry_bonus = 0.5 * std::log(n_atoms / static_cast<double>(counts.size()));

  const double raw = t.fragment - t.size_penalty - t.spiro_penalty - t.bridgehead_penalty -
                     t.macrocycle_penalty + t.symmetry_bonus;
  constexpr double kMin = -4.0;
  constexpr double kMax = 2.5;
  double s = 11.0 - (raw - kMin + 1.0) / (kMax - kMin) * 9.0;
  if (s > 8.0)
    s = 8.0 + std::log(s + 1.0 - 9.0);
  t.score = std::clamp(s, 1.0, 10.0);
  return t;
}

double sas(const Molecule &mol, const FragScores &scores) {
  return sas_terms(mol, scores).score;
}

}  // namespace mgb
