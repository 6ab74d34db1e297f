//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/molgraph/aromaticity.h"

#include <algorithm>
#include <vector>

#include "mgbench/molgraph/molecule.h"

namespace mgb {
namespace {

bool contains(const std::vector<int> &ring, int atom) {
  return std::find(ring.begin(), ring.end(), atom) != ring.end();
}

// Atom contributes a pi electron through a double bond whose partner is in
// this ring or already aromatic.
bool has_pi_bond(const Molecule &mol, const std::vector<int> &ring, int a) {
  if (mol.atom(a).aromatic)
    return true;
  int doubles = 0;
  bool good = false;
  for (const Neighbor &n : mol.neighbors(a)) {
    const BondOrder order = mol.bond(n.bond).order;
    if (order == BondOrder::kTriple)
      return false;
    if (order != BondOrder::kDouble)
      continue;
    ++doubles;
    good = contains(ring, n.atom) || mol.atom(n.atom).aromatic;
  }
  return doubles == 1 && good;
}

bool is_donor(const Molecule &mol, int a) {
  const Atom &atom = mol.atom(a);
  if (atom.aromatic)
    return false;
  for (const Neighbor &n : mol.neighbors(a)) {
    if (mol.bond(n.bond).order != BondOrder::kSingle)
      return false;
  }
  const int degree = mol.degree(a);
  switch (atom.element) {
  case 8:
  case 16:
    return degree == 2 && atom.total_h == 0;
  case 7:
    return (degree == 2 && atom.total_h == 1) || (degree == 3 && atom.total_h == 0);
  default:
    return false;
  }
}

}  // namespace

void aromatize_kekule_rings(Molecule &mol) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto &ring : mol.rings()) {
      const int size = static_cast<int>(ring.size());
      if (size != 5 && size != 6)
        continue;

      std::vector<int> ring_bonds;
      bool all_aromatic = true;
      for (int i = 0; i < size; ++i) {
        const int b = mol.find_bond(ring[i], ring[(i + 1) % size]);
        ring_bonds.push_back(b);
        all_aromatic = all_aromatic && mol.bond(b).order == BondOrder::kAromatic;
      }
      if (all_aromatic)
        continue;

      bool ok = true;
      int donors = 0;
      for (int a : ring) {
        const Atom &atom = mol.atom(a);
        if (atom.formal_charge != 0) {
          ok = false;
          break;
        }
        const bool element_ok = size == 6 ? (atom.element == 6 || atom.element == 7)
                                          : (atom.element == 6 || atom.element == 7 ||
                                             atom.element == 8 || atom.element == 16);
        if (!element_ok) {
          ok = false;
          break;
        }
        if (has_pi_bond(mol, ring, a))
          continue;
        if (size == 5 && is_donor(mol, a)) {
          ++donors;
          continue;
        }
        ok = false;
        break;
      }
      if (!ok || (size == 5 && donors != 1))
        continue;

      for (int a : ring)
        mol.atom(a).aromatic = true;
      for (int b : ring_bonds)
        mol.bond(b).order = BondOrder::kAromatic;
      changed = true;
    }
  }
}

}  // namespace mgb
