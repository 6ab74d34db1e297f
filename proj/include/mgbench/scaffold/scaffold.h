//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_SCAFFOLD_SCAFFOLD_H_
#define MGBENCH_SCAFFOLD_SCAFFOLD_H_

#include <optional>
#include <set>
#include <string>

#include "mgbench/molgraph/molecule.h"

namespace mgb {

struct Scaffold {
  Molecule molecule;
  std::string canonical;
};

// Bemis-Murcko scaffold: ring systems plus the linkers joining them. Atoms
// double-bonded to the scaffold (exocyclic =O, =N, ...) are kept. Acyclic
// molecules have none.
std::optional<Scaffold> bm_scaffold(const Molecule &mol);

// All atoms become neutral aliphatic carbon, all bonds single; exocyclic
// atoms left terminal by this are pruned.
Scaffold generic_scaffold(const Scaffold &scaffold);

// Canonical generic scaffold of a molecule, or nullopt when acyclic.
std::optional<std::string> generic_scaffold_smiles(const Molecule &mol);

// True when the molecule has a generic scaffold that is not in `reference`.
bool is_novel_scaffold(const Molecule &mol, const std::set<std::string> &reference);

}  // namespace mgb

#endif  // MGBENCH_SCAFFOLD_SCAFFOLD_H_
