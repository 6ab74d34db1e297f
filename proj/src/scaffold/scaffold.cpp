//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/scaffold/scaffold.h"

#include <algorithm>
#include <vector>

#include "mgbench/molgraph/smiles.h"

namespace mgb {
namespace {

// Removes non-ring atoms of degree <= 1 until none remain.
std::vector<bool> prune_terminals(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<bool> keep(n, true);
  std::vector<int> degree(n);
  std::vector<int> stack;
  for (int a = 0; a < n; ++a) {
    degree[a] = mol.degree(a);
    if (!mol.atom(a).in_ring && degree[a] <= 1)
      stack.push_back(a);
  }
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    if (!keep[a])
      continue;
    keep[a] = false;
    for (const Neighbor &nb : mol.neighbors(a)) {
      if (keep[nb.atom] && --degree[nb.atom] <= 1 && !mol.atom(nb.atom).in_ring)
        stack.push_back(nb.atom);
    }
  }
  return keep;
}

// Induced subgraph on `keep`; every cut bond returns its order as hydrogens.
Molecule cut(const Molecule &mol, const std::vector<bool> &keep) {
  std::vector<int> atoms;
  std::vector<int> extra_h(mol.num_atoms(), 0);
  for (int a = 0; a < mol.num_atoms(); ++a) {
    if (!keep[a])
      continue;
    atoms.push_back(a);
    for (const Neighbor &nb : mol.neighbors(a)) {
      if (!keep[nb.atom])
        extra_h[a] += bond_valence(mol.bond(nb.bond).order);
    }
  }
  Molecule out = mol.induced_subgraph(atoms);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Atom &atom = out.atom(static_cast<int>(i));
    atom.total_h += extra_h[atoms[i]];
    if (atom.explicit_h)
      atom.explicit_h = atom.total_h;
  }
  return out;
}

}  // namespace

std::optional<Scaffold> bm_scaffold(const Molecule &mol) {
  if (mol.rings().empty())
    return std::nullopt;
  std::vector<bool> keep = prune_terminals(mol);
  std::vector<int> exocyclic;
  for (int a = 0; a < mol.num_atoms(); ++a) {
    if (keep[a] || mol.degree(a) != 1)
      continue;
    const Neighbor &nb = mol.neighbors(a)[0];
    if (keep[nb.atom] && mol.bond(nb.bond).order == BondOrder::kDouble)
      exocyclic.push_back(a);
  }
  for (int a : exocyclic)
    keep[a] = true;
  Molecule core = cut(mol, keep);
  std::string canonical = canonical_smiles(core);
  return Scaffold{std::move(core), std::move(canonical)};
}

Scaffold generic_scaffold(const Scaffold &scaffold) {
  Molecule mol = scaffold.molecule;
  for (int b = 0; b < mol.num_bonds(); ++b)
    mol.bond(b).order = BondOrder::kSingle;
  for (int a = 0; a < mol.num_atoms(); ++a) {
    Atom &atom = mol.atom(a);
    atom.element = 6;
    atom.aromatic = false;
    atom.formal_charge = 0;
    atom.explicit_h.reset();
    atom.total_h = std::max(0, 4 - mol.degree(a));
  }
  mol.update_ring_info();
  Molecule core = cut(mol, prune_terminals(mol));
  for (int a = 0; a < core.num_atoms(); ++a)
    core.atom(a).total_h = std::max(0, 4 - core.degree(a));
  std::string canonical = canonical_smiles(core);
  return Scaffold{std::move(core), std::move(canonical)};
}

std::optional<std::string> generic_scaffold_smiles(const Molecule &mol) {
  auto s = bm_scaffold(mol);
  if (!s)
    return std::nullopt;
  return generic_scaffold(*s).canonical;
}

bool is_novel_scaffold(const Molecule &mol, const std::set<std::string> &reference) {
  auto g = generic_scaffold_smiles(mol);
  return g && reference.count(*g) == 0;
}

}  // namespace mgb
