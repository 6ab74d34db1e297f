//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_DESCRIPTORS_DESCRIPTORS_H_
#define MGBENCH_DESCRIPTORS_DESCRIPTORS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "mgbench/descriptors/smarts.h"
#include "mgbench/molgraph/molecule.h"

namespace mgb {

// The eight QED input properties.
struct DescriptorVector {
  double mw = 0.0;
  double logp = 0.0;
  int hba = 0;
  int hbd = 0;
  double tpsa = 0.0;
  int rotb = 0;
  int arom_rings = 0;
  int alerts = 0;
  // Atoms (hydrogens included) without a Crippen type; each contributed 0.0.
  int logp_untyped_atoms = 0;
};

struct CrippenType {
  std::string type;
  SmartsPattern pattern;
  double logp;
};

// Pattern tables behind descriptor_vector(). Read-only after loading and
// shareable between threads.
class DescriptorTables {
public:
  // Reads crippen_logp.tsv, hba.smarts and qed_alerts.smarts from `data_dir`.
  static DescriptorTables load(const std::filesystem::path &data_dir);

  const std::vector<CrippenType> &crippen() const { return crippen_; }
  const std::vector<SmartsPattern> &acceptors() const { return acceptors_; }
  const std::vector<SmartsPattern> &alerts() const { return alerts_; }
  const SmartsPattern &donor() const { return donor_; }
  const SmartsPattern &rotatable() const { return rotatable_; }

private:
  DescriptorTables();

  std::vector<CrippenType> crippen_;
  std::vector<SmartsPattern> acceptors_;
  std::vector<SmartsPattern> alerts_;
  SmartsPattern donor_;
  SmartsPattern rotatable_;
};

double molecular_weight(const Molecule &mol);
double topological_polar_surface_area(const Molecule &mol);
// Crippen logP; `untyped` receives the number of atoms no pattern matched.
double crippen_logp(const Molecule &mol, const DescriptorTables &tables, int *untyped = nullptr);
// SSSR rings whose atoms are all aromatic.
int aromatic_ring_count(const Molecule &mol);

DescriptorVector descriptor_vector(const Molecule &mol, const DescriptorTables &tables);

}  // namespace mgb

#endif  // MGBENCH_DESCRIPTORS_DESCRIPTORS_H_
