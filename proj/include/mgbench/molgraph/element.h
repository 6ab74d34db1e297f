//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_MOLGRAPH_ELEMENT_H_
#define MGBENCH_MOLGRAPH_ELEMENT_H_

#include <optional>
#include <span>
#include <string_view>

namespace mgb {

struct ElementInfo {
  int atomic_number;
  std::string_view symbol;
  double average_mass;
  // Default valences in increasing order; empty for elements that never
  // appear outside bracket atoms.
  std::span<const int> valences;
};

// Elements known to the toolkit (H through Bi, excluding most lanthanides).
const ElementInfo *find_element(int atomic_number);
const ElementInfo *find_element(std::string_view symbol);

// Organic subset: B, C, N, O, P, S, F, Cl, Br, I.
bool is_organic_subset(int atomic_number);

// Elements that may be written in lowercase aromatic form.
bool can_be_aromatic(int atomic_number);

// Smallest default valence >= used, or nullopt when used exceeds every
// default valence of the element.
std::optional<int> pick_valence(int atomic_number, int used);

}  // namespace mgb

#endif  // MGBENCH_MOLGRAPH_ELEMENT_H_
