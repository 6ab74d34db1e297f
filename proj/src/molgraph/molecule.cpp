//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/molgraph/molecule.h"

#include <algorithm>
#include <numeric>

#include "mgbench/molgraph/element.h"
#include "mgbench/molgraph/rings.h"

namespace mgb {

int bond_valence(BondOrder order) {
  switch (order) {
  case BondOrder::kSingle:
  case BondOrder::kAromatic:
    return 1;
  case BondOrder::kDouble:
    return 2;
  case BondOrder::kTriple:
    return 3;
  }
  return 1;
}

int Molecule::add_atom(const Atom &atom) {
  atoms_.push_back(atom);
  adjacency_.emplace_back();
  ring_membership_.push_back(0);
  smallest_ring_.push_back(0);
  return num_atoms() - 1;
}

int Molecule::add_bond(int a, int b, BondOrder order) {
  if (a == b)
    throw MoleculeError("bond endpoints must be distinct");
  if (a < 0 || b < 0 || a >= num_atoms() || b >= num_atoms())
    throw MoleculeError("bond endpoint out of range");
  if (find_bond(a, b) >= 0)
    throw MoleculeError("duplicate bond between atoms " + std::to_string(a) +
                        " and " + std::to_string(b));
  bonds_.push_back(Bond{a, b, order, false});
  const int id = num_bonds() - 1;
  adjacency_[a].push_back({b, id});
  adjacency_[b].push_back({a, id});
  return id;
}

int Molecule::find_bond(int a, int b) const {
  for (const Neighbor &n : adjacency_[a]) {
    if (n.atom == b)
      return n.bond;
  }
  return -1;
}

int Molecule::heavy_atom_count() const {
  return static_cast<int>(std::count_if(atoms_.begin(), atoms_.end(),
                                        [](const Atom &a) { return a.element != 1; }));
}

std::vector<int> Molecule::component_ids() const {
  std::vector<int> comp(atoms_.size(), -1);
  std::vector<int> stack;
  int next = 0;
  for (int start = 0; start < num_atoms(); ++start) {
    if (comp[start] >= 0)
      continue;
    comp[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (const Neighbor &n : adjacency_[a]) {
        if (comp[n.atom] < 0) {
          comp[n.atom] = next;
          stack.push_back(n.atom);
        }
      }
    }
    ++next;
  }
  return comp;
}

int Molecule::num_components() const {
  const auto comp = component_ids();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

void Molecule::update_ring_info() {
  const std::vector<bool> ring_bonds = find_ring_bonds(*this);
  for (int b = 0; b < num_bonds(); ++b)
    bonds_[b].in_ring = ring_bonds[b];
  for (Atom &a : atoms_)
    a.in_ring = false;
  for (const Bond &b : bonds_) {
    if (b.in_ring) {
      atoms_[b.begin].in_ring = true;
      atoms_[b.end].in_ring = true;
    }
  }
  rings_ = perceive_rings(*this);
  std::fill(ring_membership_.begin(), ring_membership_.end(), 0);
  std::fill(smallest_ring_.begin(), smallest_ring_.end(), 0);
  for (const auto &ring : rings_) {
    const int size = static_cast<int>(ring.size());
    for (int a : ring) {
      ++ring_membership_[a];
      if (smallest_ring_[a] == 0 || size < smallest_ring_[a])
        smallest_ring_[a] = size;
    }
  }
}

Molecule Molecule::induced_subgraph(std::span<const int> keep) const {
  Molecule out;
  std::vector<int> remap(atoms_.size(), -1);
  for (int a : keep) {
    remap[a] = out.add_atom(atoms_[a]);
  }
  for (const Bond &b : bonds_) {
    if (remap[b.begin] >= 0 && remap[b.end] >= 0)
      out.add_bond(remap[b.begin], remap[b.end], b.order);
  }
  out.update_ring_info();
  return out;
}

std::optional<int> implied_hydrogens(int element, bool aromatic, int bond_sum,
                                     int aromatic_bonds) {
  if (!aromatic) {
    auto v = pick_valence(element, bond_sum);
    if (!v)
      return std::nullopt;
    return *v - bond_sum;
  }
  // An aromatic atom with two aromatic bonds and nothing else still owes one
  // electron to the pi system (benzene CH, pyridine N). Atoms with three
  // aromatic bonds or an exocyclic double bond have already spent it.
  const int used = bond_sum + aromatic_bonds;
  auto v = pick_valence(element, used);
  if (!v)
    return std::nullopt;
  return std::max(0, *v - used - 1);
}

std::optional<int> implied_hydrogens(const Molecule &mol, int i) {
  const Atom &atom = mol.atom(i);
  int bond_sum = 0;
  int arom = 0;
  for (const Neighbor &n : mol.neighbors(i)) {
    const BondOrder order = mol.bond(n.bond).order;
    if (order == BondOrder::kAromatic)
      ++arom;
    else
      bond_sum += bond_valence(order);
  }
  return implied_hydrogens(atom.element, atom.aromatic, bond_sum, arom);
}

int total_valence(const Molecule &mol, int i) {
  const Atom &atom = mol.atom(i);
  int sum = atom.total_h;
  int arom = 0;
  for (const Neighbor &n : mol.neighbors(i)) {
    const BondOrder order = mol.bond(n.bond).order;
    if (order == BondOrder::kAromatic)
      ++arom;
    else
      sum += bond_valence(order);
  }
  sum += arom;
  if (atom.aromatic && arom > 0) {
    // Charge shifts the allowed valence: N+ behaves like C, O+ like N.
    int z = atom.element;
    if (atom.formal_charge == 1 && (z == 7 || z == 8))
      z -= 1;
    else if (atom.formal_charge == -1 && (z == 6 || z == 7))
      z += 1;
    if (auto v = pick_valence(z, sum); v && *v > sum)
      return *v;
  }
  return sum;
}

Molecule with_explicit_hydrogens(const Molecule &mol) {
  Molecule out = mol;
  const int n = mol.num_atoms();
  for (int a = 0; a < n; ++a) {
    const int h = out.atom(a).total_h;
    out.atom(a).total_h = 0;
    out.atom(a).explicit_h = 0;
    for (int k = 0; k < h; ++k) {
      Atom hydrogen;
      hydrogen.element = 1;
      hydrogen.explicit_h = 0;
      const int idx = out.add_atom(hydrogen);
      out.add_bond(a, idx, BondOrder::kSingle);
    }
  }
  out.update_ring_info();
  return out;
}

}  // namespace mgb
