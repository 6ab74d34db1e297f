//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mgbench/molgraph/canonical.h"
#include "mgbench/molgraph/element.h"
#include "mgbench/molgraph/smiles.h"

namespace mgb {
namespace {

class SmilesWriter {
public:
  SmilesWriter(const Molecule &mol, std::span<const int> order)
      : mol_(mol), priority_(mol.num_atoms(), -1) {
    const int n = mol.num_atoms();
    if (static_cast<int>(order.size()) != n)
      throw MoleculeError("atom order must list every atom exactly once");
    for (int i = 0; i < n; ++i) {
      const int a = order[i];
      if (a < 0 || a >= n || priority_[a] >= 0)
        throw MoleculeError("atom order is not a permutation");
      priority_[a] = i;
    }
    order_.assign(order.begin(), order.end());
  }

  std::string write() {
    const int n = mol_.num_atoms();
    visited_.assign(n, false);
    visit_rank_.assign(n, -1);
    children_.assign(n, {});
    closures_.assign(n, {});
    closure_seen_.assign(mol_.num_bonds(), false);
    parent_bond_.assign(n, -1);

    std::vector<int> roots;
    for (int a : order_) {
      if (!visited_[a]) {
        roots.push_back(a);
        traverse(a, -1);
      }
    }

    std::string out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i > 0)
        out += '.';
      emit(roots[i], out);
    }
    return out;
  }

private:
  std::vector<Neighbor> sorted_neighbors(int a) const {
    auto span = mol_.neighbors(a);
    std::vector<Neighbor> nbs(span.begin(), span.end());
    std::sort(nbs.begin(), nbs.end(), [&](const Neighbor &x, const Neighbor &y) {
      return priority_[x.atom] < priority_[y.atom];
    });
    return nbs;
  }

  void traverse(int a, int parent_bond) {
    visited_[a] = true;
    visit_rank_[a] = next_rank_++;
    parent_bond_[a] = parent_bond;
    for (const Neighbor &nb : sorted_neighbors(a)) {
      if (nb.bond == parent_bond)
        continue;
      if (!visited_[nb.atom]) {
        children_[a].push_back(nb);
        traverse(nb.atom, nb.bond);
      } else if (!closure_seen_[nb.bond]) {
        closure_seen_[nb.bond] = true;
        closures_[a].push_back(nb);
        closures_[nb.atom].push_back({a, nb.bond});
      }
    }
  }

  std::string bond_symbol(int bond) const {
    const Bond &b = mol_.bond(bond);
    switch (b.order) {
    case BondOrder::kDouble:
      return "=";
    case BondOrder::kTriple:
      return "#";
    case BondOrder::kAromatic:
      return "";
    case BondOrder::kSingle:
      if (mol_.atom(b.begin).aromatic && mol_.atom(b.end).aromatic)
        return "-";
      return "";
    }
    return "";
  }

  std::string atom_symbol(int a) const {
    const Atom &atom = mol_.atom(a);
    const ElementInfo *info = find_element(atom.element);
    std::string sym(info->symbol);
    if (atom.aromatic) {
      for (char &c : sym)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }

    const bool organic = is_organic_subset(atom.element) &&
                         (!atom.aromatic || sym.size() == 1);
    if (organic && atom.formal_charge == 0) {
      auto implied = implied_hydrogens(mol_, a);
      if (implied && *implied == atom.total_h)
        return sym;
    }

    std::string out = "[" + sym;
    if (atom.total_h > 0) {
      out += 'H';
      if (atom.total_h > 1)
        out += std::to_string(atom.total_h);
    }
    if (atom.formal_charge != 0) {
      out += atom.formal_charge > 0 ? '+' : '-';
      const int mag = std::abs(atom.formal_charge);
      if (mag > 1)
        out += std::to_string(mag);
    }
    out += ']';
    return out;
  }

  static std::string digit_text(int d) {
    if (d < 10)
      return std::to_string(d);
    return "%" + std::to_string(d);
  }

  int take_digit() {
    for (int d = 1;; ++d) {
      if (std::find(used_digits_.begin(), used_digits_.end(), d) == used_digits_.end()) {
        used_digits_.push_back(d);
        return d;
      }
    }
  }

  void emit(int a, std::string &out) {
    out += atom_symbol(a);

    auto closures = closures_[a];
    std::sort(closures.begin(), closures.end(), [&](const Neighbor &x, const Neighbor &y) {
      return priority_[x.atom] < priority_[y.atom];
    });
    std::vector<int> freed;
    for (const Neighbor &c : closures) {
      if (visit_rank_[c.atom] < visit_rank_[a]) {
        // Partner already emitted: close its ring bond.
        const int d = bond_digit_.at(c.bond);
        out += digit_text(d);
        freed.push_back(d);
      } else {
        const int d = take_digit();
        bond_digit_[c.bond] = d;
        out += bond_symbol(c.bond);
        out += digit_text(d);
      }
    }
    for (int d : freed)
      used_digits_.erase(std::find(used_digits_.begin(), used_digits_.end(), d));

    const auto &kids = children_[a];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const bool last = i + 1 == kids.size();
      if (!last)
        out += '(';
      out += bond_symbol(kids[i].bond);
      emit(kids[i].atom, out);
      if (!last)
        out += ')';
    }
  }

  const Molecule &mol_;
  std::vector<int> priority_;
  std::vector<int> order_;
  std::vector<bool> visited_;
  std::vector<int> visit_rank_;
  int next_rank_ = 0;
  std::vector<std::vector<Neighbor>> children_;
  std::vector<std::vector<Neighbor>> closures_;
  std::vector<bool> closure_seen_;
  std::vector<int> parent_bond_;
  std::vector<int> used_digits_;
  std::map<int, int> bond_digit_;
};

}  // namespace

std::string write_smiles(const Molecule &mol, std::span<const int> order) {
  return SmilesWriter(mol, order).write();
}

std::string write_smiles(const Molecule &mol) {
  std::vector<int> order(mol.num_atoms());
  std::iota(order.begin(), order.end(), 0);
  return write_smiles(mol, order);
}

std::string canonical_smiles(const Molecule &mol) {
  const CanonicalRanks ranks = canonical_ranks(mol);
  std::vector<int> order(mol.num_atoms());
  for (int a = 0; a < mol.num_atoms(); ++a)
    order[ranks.ranks[a]] = a;
  return write_smiles(mol, order);
}

std::string canonicalize(std::string_view text, const ParseOptions &opts) {
  return canonical_smiles(parse_smiles(text, opts));
}

std::string randomize_smiles(const Molecule &mol, std::mt19937_64 &rng) {
  std::vector<int> order(mol.num_atoms());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return write_smiles(mol, order);
}

}  // namespace mgb
