//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/descriptors/descriptors.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mgbench/molgraph/element.h"

namespace mgb {
namespace {

constexpr const char *kDonorSmarts =
    "[N&!H0&v3,N&!H0&+1&v4,O&H1&+0,S&H1&+0,n&H1&+0]";

constexpr const char *kRotatableSmarts =
    "[!$(*#*)&!D1&!$(C(F)(F)F)&!$(C(Cl)(Cl)Cl)&!$(C(Br)(Br)Br)&!$(C([CH3])([CH3])[CH3])&"
    "!$([CH3])&!$([CD3](=[N,O,S])-!@[#7,O,S!D1])&!$([#7,O,S!D1]-!@[CD3]=[N,O,S])&"
    "!$([CD3](=[N+])-!@[#7!D1])&!$([#7!D1]-!@[CD3]=[N+])]-,:;!@"
    "[!$(*#*)&!D1&!$(C(F)(F)F)&!$(C(Cl)(Cl)Cl)&!$(C(Br)(Br)Br)&!$(C([CH3])([CH3])[CH3])&"
    "!$([CH3])]";

std::vector<CrippenType> load_crippen(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read " + path.string());
  std::vector<CrippenType> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream fields(line);
    std::string type, smarts, logp;
    if (!std::getline(fields, type, '\t') || !std::getline(fields, smarts, '\t') ||
        !std::getline(fields, logp, '\t'))
      throw std::runtime_error("malformed line in " + path.string() + ": " + line);
    out.push_back({type, SmartsPattern(smarts), std::stod(logp)});
  }
  return out;
}

struct BondTally {
  int single = 0;
  int dbl = 0;
  int triple = 0;
  int aromatic = 0;
  int heavy = 0;
};

BondTally tally(const Molecule &mol, int a) {
  BondTally t;
  for (const Neighbor &nb : mol.neighbors(a)) {
    if (mol.atom(nb.atom).element == 1)
      continue;
    ++t.heavy;
    switch (mol.bond(nb.bond).order) {
    case BondOrder::kSingle:
      ++t.single;
      break;
    case BondOrder::kDouble:
      ++t.dbl;
      break;
    case BondOrder::kTriple:
      ++t.triple;
      break;
    case BondOrder::kAromatic:
      ++t.aromatic;
      break;
    }
  }
  return t;
}

// Ertl fragment contributions for nitrogen and oxygen (sulfur and phosphorus
// excluded). Unlisted environments use the generic fallback.
double tpsa_contribution(const Molecule &mol, int a) {
  const Atom &atom = mol.atom(a);
  if (atom.element != 7 && atom.element != 8)
    return 0.0;
  const BondTally b = tally(mol, a);
  int h = atom.total_h;
  for (const Neighbor &nb : mol.neighbors(a))
    h += mol.atom(nb.atom).element == 1 ? 1 : 0;
  const int q = atom.formal_charge;
  const bool ring3 = mol.smallest_ring_size(a) == 3;
  const int n = b.heavy;

  if (atom.element == 7) {
    if (n == 1) {
      if (h == 0 && q == 0 && b.triple == 1) return 23.79;
      if (h == 1 && q == 0 && b.dbl == 1) return 23.85;
      if (h == 2 && q == 0 && b.single == 1) return 26.02;
      if (h == 2 && q == 1 && b.dbl == 1) return 25.59;
      if (h == 3 && q == 1 && b.single == 1) return 27.64;
    } else if (n == 2) {
      if (h == 0 && q == 0 && b.single == 1 && b.dbl == 1) return 12.36;
      if (h == 0 && q == 0 && b.triple == 1 && b.dbl == 1) return 13.60;
      if (h == 1 && q == 0 && b.single == 2) return ring3 ? 21.94 : 12.03;
      if (h == 0 && q == 1 && b.triple == 1 && b.single == 1) return 4.36;
      if (h == 1 && q == 1 && b.dbl == 1 && b.single == 1) return 13.97;
      if (h == 2 && q == 1 && b.single == 2) return 16.61;
      if (h == 0 && q == 0 && b.aromatic == 2) return 12.89;
      if (h == 1 && q == 0 && b.aromatic == 2) return 15.79;
      if (h == 1 && q == 1 && b.aromatic == 2) return 14.14;
    } else if (n == 3) {
      if (h == 0 && q == 0 && b.single == 3) return ring3 ? 3.01 : 3.24;
      if (h == 0 && q == 0 && b.single == 1 && b.dbl == 2) return 11.68;
      if (h == 0 && q == 1 && b.single == 2 && b.dbl == 1) return 3.01;
      if (h == 1 && q == 1 && b.single == 3) return 4.44;
      if (h == 0 && q == 0 && b.aromatic == 3) return 4.41;
      if (h == 0 && q == 0 && b.single == 1 && b.aromatic == 2) return 4.93;
      if (h == 0 && q == 0 && b.dbl == 1 && b.aromatic == 2) return 8.39;
      if (h == 0 && q == 1 && b.aromatic == 3) return 4.10;
      if (h == 0 && q == 1 && b.single == 1 && b.aromatic == 2) return 3.88;
    } else if (n == 4) {
      if (h == 0 && q == 1 && b.single == 4) return 0.0;
    }
    return std::max(0.0, 30.5 - n * 8.2 + h * 1.5);
  }

  if (n == 1) {
    if (h == 0 && q == 0 && b.dbl == 1) return 17.07;
    if (h == 1 && q == 0 && b.single == 1) return 20.23;
    if (h == 0 && q == -1 && b.single == 1) return 23.06;
  } else if (n == 2) {
    if (h == 0 && q == 0 && b.single == 2) return ring3 ? 12.53 : 9.23;
    if (h == 0 && q == 0 && b.aromatic == 2) return 13.14;
  }
  return std::max(0.0, 28.5 - n * 8.6 + h * 1.5);
}

}  // namespace

DescriptorTables::DescriptorTables(): donor_(kDonorSmarts), rotatable_(kRotatableSmarts) {}

DescriptorTables DescriptorTables::load(const std::filesystem::path &data_dir) {
  DescriptorTables t;
  t.crippen_ = load_crippen(data_dir / "crippen_logp.tsv");
  t.acceptors_ = load_smarts_file((data_dir / "hba.smarts").string());
  t.alerts_ = load_smarts_file((data_dir / "qed_alerts.smarts").string());
  return t;
}

double molecular_weight(const Molecule &mol) {
  const double h_mass = find_element(1)->average_mass;
  double mw = 0.0;
  for (const Atom &a : mol.atoms())
    mw += find_element(a.element)->average_mass + a.total_h * h_mass;
  return mw;
}

double topological_polar_surface_area(const Molecule &mol) {
  double total = 0.0;
  for (int a = 0; a < mol.num_atoms(); ++a)
    total += tpsa_contribution(mol, a);
  return total;
}

double crippen_logp(const Molecule &mol, const DescriptorTables &tables, int *untyped) {
  const Molecule full = with_explicit_hydrogens(mol);
  const SmartsTarget target(full);
  std::vector<bool> typed(full.num_atoms(), false);
  int remaining = full.num_atoms();
  double logp = 0.0;
  for (const CrippenType &t : tables.crippen()) {
    if (remaining == 0)
      break;
    for (const auto &match : find_matches(t.pattern, target, {false, 0})) {
      const int a = match[0];
      if (typed[a])
        continue;
      typed[a] = true;
      --remaining;
      logp += t.logp;
    }
  }
  if (untyped)
    *untyped = remaining;
  return logp;
}

int aromatic_ring_count(const Molecule &mol) {
  int n = 0;
  for (const auto &ring : mol.rings()) {
    if (std::all_of(ring.begin(), ring.end(), [&](int a) { return mol.atom(a).aromatic; }))
      ++n;
  }
  return n;
}

DescriptorVector descriptor_vector(const Molecule &mol, const DescriptorTables &tables) {
  DescriptorVector v;
  const SmartsTarget target(mol);
  v.mw = molecular_weight(mol);
  v.logp = crippen_logp(mol, tables, &v.logp_untyped_atoms);
  for (const SmartsPattern &p : tables.acceptors())
    v.hba += count_matches(p, target);
  v.hbd = count_matches(tables.donor(), target);
  v.tpsa = topological_polar_surface_area(mol);
  v.rotb = count_matches(tables.rotatable(), target);
  v.arom_rings = aromatic_ring_count(mol);
  for (const SmartsPattern &p : tables.alerts())
    v.alerts += has_match(p, target) ? 1 : 0;
  return v;
}

}  // namespace mgb
