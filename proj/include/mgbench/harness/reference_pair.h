//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_HARNESS_REFERENCE_PAIR_H_
#define MGBENCH_HARNESS_REFERENCE_PAIR_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgbench/decoder/decoder.h"
#include "mgbench/fingerprint/fingerprint.h"
#include "mgbench/molgraph/molecule.h"

namespace mgb {

class Projection;

// One row of reference_pairs.tsv:
//   class  target_a  smiles_a  target_b  smiles_b
struct ReferencePairSpec {
  std::string class_name;
  std::string name_a;
  std::string smiles_a;
  std::string name_b;
  std::string smiles_b;
};

std::vector<ReferencePairSpec> load_reference_pairs(const std::filesystem::path &path);

// Looks a pair up by class name or by "A/B" target names, case-insensitively.
const ReferencePairSpec &find_reference_pair(const std::vector<ReferencePairSpec> &pairs,
                                             std::string_view key);

struct ReferenceTarget {
  std::string name;
  std::string canonical;
  Molecule molecule;
  Fingerprint fp;
  // Empty for acyclic targets.
  std::optional<std::string> generic_scaffold;
  LatentVector latent;
};

struct ReferencePair {
  std::string class_name;
  ReferenceTarget a;
  ReferenceTarget b;
};

// Resolves structures, fingerprints and scaffolds. Latents come from the
// reference encoder when a projection is given and are left empty otherwise.
// Throws std::invalid_argument when both targets canonicalize identically.
ReferencePair make_reference_pair(const ReferencePairSpec &spec, const Projection *projection,
                                  int n_bits = kDefaultFingerprintBits);

}  // namespace mgb

#endif  // MGBENCH_HARNESS_REFERENCE_PAIR_H_
