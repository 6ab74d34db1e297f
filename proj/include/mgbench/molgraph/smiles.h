//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_MOLGRAPH_SMILES_H_
#define MGBENCH_MOLGRAPH_SMILES_H_

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mgbench/molgraph/molecule.h"

namespace mgb {

inline constexpr std::size_t kDefaultMaxSmilesLength = 200;
inline constexpr std::size_t kDefaultMaxRandomizedLength = 215;

enum class SmilesErrorKind {
  kSyntax,
  kUnclosedRing,
  kUnsupportedElement,
  kValence,
  kStereo,
  kIsotope,
  kAromaticity,
  kLength,
  kEmpty,
};

class SmilesError: public std::runtime_error {
public:
  SmilesError(SmilesErrorKind kind, std::size_t position, const std::string &what);

  SmilesErrorKind kind() const { return kind_; }
  // Byte offset into the input where the problem was detected.
  std::size_t position() const { return position_; }

private:
  SmilesErrorKind kind_;
  std::size_t position_;
};

struct ParseOptions {
  std::size_t max_length = kDefaultMaxSmilesLength;
};

// Parses the supported SMILES subset (organic subset, bracket atoms with
// H-count and charge, ring closures including %nn, branches, bonds -=#:).
// Stereo marks and isotopes are rejected. Ring perception and the minimal
// Kekulé-to-aromatic pass have run on the returned molecule.
Molecule parse_smiles(std::string_view text, const ParseOptions &opts = {});

// Writes the molecule with a depth-first traversal. `order` is a permutation
// of atom indices giving traversal priority: the walk starts at order[0] and
// visits neighbors (and further components) in order of their position in
// `order`. Throws MoleculeError if `order` is not a permutation.
std::string write_smiles(const Molecule &mol, std::span<const int> order);

// Writes the molecule using the identity order.
std::string write_smiles(const Molecule &mol);

std::string canonical_smiles(const Molecule &mol);
std::string canonicalize(std::string_view text, const ParseOptions &opts = {});

// A valid SMILES for the same molecule with start atom and branch order drawn
// from `rng`.
std::string randomize_smiles(const Molecule &mol, std::mt19937_64 &rng);

// Removes @, / and \ annotations and keeps the "."-separated component with
// the most heavy atoms (ties: smallest canonical form). The result is written
// in input atom order.
std::string strip_stereo_and_components(std::string_view text,
                                        const ParseOptions &opts = {});

// Validity check for generated strings: stereo marks are dropped, there is
// no length cap, and any parse failure yields nullopt. On success returns the
// canonical form.
std::optional<std::string> canonical_if_valid(std::string_view raw);

}  // namespace mgb

#endif  // MGBENCH_MOLGRAPH_SMILES_H_
