//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_MOLGRAPH_RINGS_H_
#define MGBENCH_MOLGRAPH_RINGS_H_

#include <vector>

namespace mgb {

class Molecule;

// true for every bond that lies on some cycle (i.e. is not a bridge).
std::vector<bool> find_ring_bonds(const Molecule &mol);

// Minimum cycle basis built from Horton candidate cycles by GF(2) elimination.
// The result has exactly bonds - atoms + components rings, sorted by size;
// each ring lists its atoms in cycle order starting from the lowest index.
std::vector<std::vector<int>> perceive_rings(const Molecule &mol);

}  // namespace mgb

#endif  // MGBENCH_MOLGRAPH_RINGS_H_
