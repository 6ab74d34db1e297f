//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_MOLGRAPH_MOLECULE_H_
#define MGBENCH_MOLGRAPH_MOLECULE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgb {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

// Integer contribution of a bond to its atoms' valence. Aromatic bonds count
// as one here; the extra pi electron is accounted for separately.
int bond_valence(BondOrder order);

struct Atom {
  int element = 6;
  bool aromatic = false;
  int formal_charge = 0;
  // Set only for bracket atoms ([CH2], [nH], [NH4+]).
  std::optional<int> explicit_h;
  // Explicit count for bracket atoms, valence-model count otherwise.
  int total_h = 0;
  bool in_ring = false;
};

struct Bond {
  int begin = 0;
  int end = 0;
  BondOrder order = BondOrder::kSingle;
  bool in_ring = false;

  int other(int atom) const { return atom == begin ? end : begin; }
};

struct Neighbor {
  int atom;
  int bond;
};

class MoleculeError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Attributed undirected graph. Atoms and bonds are added through add_atom()
// and add_bond(); update_ring_info() refreshes the derived ring data and must
// be called after the last structural edit.
class Molecule {
public:
  int add_atom(const Atom &atom);
  int add_bond(int a, int b, BondOrder order);

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  const Atom &atom(int i) const { return atoms_[i]; }
  Atom &atom(int i) { return atoms_[i]; }
  const Bond &bond(int i) const { return bonds_[i]; }
  Bond &bond(int i) { return bonds_[i]; }
  const std::vector<Atom> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }

  std::span<const Neighbor> neighbors(int atom) const { return adjacency_[atom]; }
  int degree(int atom) const { return static_cast<int>(adjacency_[atom].size()); }

  // Bond index joining a and b, or -1.
  int find_bond(int a, int b) const;

  // Smallest set of smallest rings; each ring lists atoms in cycle order.
  const std::vector<std::vector<int>> &rings() const { return rings_; }
  // Number of SSSR rings containing the atom.
  int ring_membership(int atom) const { return ring_membership_[atom]; }
  // Size of the smallest SSSR ring containing the atom, 0 when acyclic.
  int smallest_ring_size(int atom) const { return smallest_ring_[atom]; }

  int heavy_atom_count() const;
  int num_components() const;
  // Component id per atom, numbered in order of first atom index.
  std::vector<int> component_ids() const;

  // Recomputes ring bonds, ring atoms and the SSSR.
  void update_ring_info();

  // Copy restricted to the given atoms (in the given order); bonds between
  // kept atoms are preserved. Ring info of the result is up to date.
  Molecule induced_subgraph(std::span<const int> keep) const;

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::vector<int>> rings_;
  std::vector<int> ring_membership_;
  std::vector<int> smallest_ring_;
};

// Hydrogens implied by the valence model for an organic-subset atom written
// without brackets. `bond_sum` counts non-aromatic bonds by order,
// `aromatic_bonds` the number of aromatic bonds. Returns nullopt on a valence
// violation.
std::optional<int> implied_hydrogens(int element, bool aromatic, int bond_sum,
                                     int aromatic_bonds);

// Valence-model hydrogen count of atom `i` given its current bonds.
std::optional<int> implied_hydrogens(const Molecule &mol, int i);

// Total bond valence of an atom: explicit bond orders plus hydrogens, with
// aromatic atoms rounded up to the next allowed valence.
int total_valence(const Molecule &mol, int i);

// Copy in which every hydrogen is an atom of its own (element 1) bonded to
// its heavy atom. Heavy atoms keep their indices; hydrogens follow.
Molecule with_explicit_hydrogens(const Molecule &mol);

}  // namespace mgb

#endif  // MGBENCH_MOLGRAPH_MOLECULE_H_
