//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_MOLGRAPH_CANONICAL_H_
#define MGBENCH_MOLGRAPH_CANONICAL_H_

#include <vector>

namespace mgb {

class Molecule;

struct CanonicalRanks {
  // ranks[atom] is a bijection onto 0..n-1.
  std::vector<int> ranks;
};

// Iterative class refinement over (degree, element, H count, charge, ring
// flag, aromatic flag), extended by sorted (neighbor class, bond order)
// lists until stable. Remaining ties are broken on the lowest tied class by
// promoting one member, then refinement resumes.
CanonicalRanks canonical_ranks(const Molecule &mol);

}  // namespace mgb

#endif  // MGBENCH_MOLGRAPH_CANONICAL_H_
