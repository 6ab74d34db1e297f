//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_DESCRIPTORS_SASCORE_H_
#define MGBENCH_DESCRIPTORS_SASCORE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <unordered_map>

#include "mgbench/molgraph/molecule.h"

namespace mgb {

// Contribution of each radius <= 2 circular environment, keyed by its
// unfolded identifier.
class FragScores {
public:
  static constexpr double kUnknownContribution = -4.0;

  // Contribution = log10(df / df80), where df is the number of corpus
  // molecules containing the environment and df80 is the document frequency
  // at which environments sorted by df cover 80% of all occurrences.
  // Throws std::invalid_argument on an empty corpus.
  static FragScores build(std::span<const Molecule> corpus, int threads = 0);

  // Binary: "SAS1", u64 count, then count records of u64 key and f64 value,
  // little-endian, keys ascending.
  void write(std::ostream &out) const;
  void write(const std::filesystem::path &path) const;
  static FragScores read(std::istream &in);
  static FragScores read(const std::filesystem::path &path);

  double contribution(std::uint64_t key) const;
  bool contains(std::uint64_t key) const { return scores_.count(key) != 0; }
  std::size_t size() const { return scores_.size(); }
  std::size_t corpus_size() const { return corpus_size_; }
  const std::unordered_map<std::uint64_t, double> &scores() const { return scores_; }

private:
  std::unordered_map<std::uint64_t, double> scores_;
  std::size_t corpus_size_ = 0;
};

struct SasTerms {
  double fragment = 0.0;
  double size_penalty = 0.0;
  double spiro_penalty = 0.0;
  double bridgehead_penalty = 0.0;
  double macrocycle_penalty = 0.0;
  double symmetry_bonus = 0.0;
  double score = 0.0;
};

int spiro_atom_count(const Molecule &mol);
int bridgehead_atom_count(const Molecule &mol);

SasTerms sas_terms(const Molecule &mol, const FragScores &scores);

// Synthetic accessibility in [1, 10]; lower is easier.
double sas(const Molecule &mol, const FragScores &scores);

}  // namespace mgb

#endif  // MGBENCH_DESCRIPTORS_SASCORE_H_
