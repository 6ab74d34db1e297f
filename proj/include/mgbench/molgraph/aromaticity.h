//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_MOLGRAPH_AROMATICITY_H_
#define MGBENCH_MOLGRAPH_AROMATICITY_H_

namespace mgb {

class Molecule;

// Minimal aromatization of Kekulé input, repeated to a fixpoint:
//  - 6-rings of neutral C/N where every atom carries one double bond to a
//    ring member or to an already aromatic atom;
//  - 5-rings of neutral C/N/O/S with exactly one lone-pair donor (O, S, NH or
//    N-substituted N without double bonds) and two such double bonds.
// Lowercase input is trusted as-is. Hydrogen counts are left untouched.
void aromatize_kekule_rings(Molecule &mol);

}  // namespace mgb

#endif  // MGBENCH_MOLGRAPH_AROMATICITY_H_
