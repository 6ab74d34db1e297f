//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/molgraph/canonical.h"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

#include "mgbench/molgraph/molecule.h"

namespace mgb {
namespace {

// Replaces keys by their dense rank; returns the number of classes.
template <typename Key>
int densify(const std::vector<Key> &keys, std::vector<int> &classes) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  int cls = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keys[idx[i - 1]] < keys[idx[i]])
      ++cls;
    classes[idx[i]] = cls;
  }
  return cls + 1;
}

int refine(const Molecule &mol, std::vector<int> &classes, int count) {
  const int n = mol.num_atoms();
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  std::vector<Key> keys(n);
  while (count < n) {
    for (int a = 0; a < n; ++a) {
      keys[a].first = classes[a];
      auto &nb = keys[a].second;
      nb.clear();
      for (const Neighbor &x : mol.neighbors(a))
        nb.emplace_back(classes[x.atom], static_cast<int>(mol.bond(x.bond).order));
      std::sort(nb.begin(), nb.end());
    }
    const int next = densify(keys, classes);
    if (next == count)
      break;
    count = next;
  }
  return count;
}

}  // namespace

CanonicalRanks canonical_ranks(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<int> classes(n, 0);
  if (n == 0)
    return {classes};

  using Invariant = std::tuple<int, int, int, int, bool, bool>;
  std::vector<Invariant> initial(n);
  for (int a = 0; a < n; ++a) {
    const Atom &atom = mol.atom(a);
    initial[a] = {mol.degree(a), atom.element, atom.total_h, atom.formal_charge,
                  atom.in_ring, atom.aromatic};
  }
  int count = densify(initial, classes);
  count = refine(mol, classes, count);

  while (count < n) {
    // Lowest class with more than one member; promote its lowest-index atom.
    std::vector<int> sizes(count, 0);
    for (int c : classes)
      ++sizes[c];
    const int tied = static_cast<int>(
        std::find_if(sizes.begin(), sizes.end(), [](int s) { return s > 1; }) -
        sizes.begin());
    int pick = -1;
    for (int a = 0; a < n; ++a) {
      if (classes[a] == tied) {
        pick = a;
        break;
      }
    }
    std::vector<std::pair<int, int>> keys(n);
    for (int a = 0; a < n; ++a)
      keys[a] = {classes[a], a == pick ? 0 : 1};
    count = densify(keys, classes);
    count = refine(mol, classes, count);
  }
  return {classes};
}

}  // namespace mgb
