//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/molgraph/rings.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>

#include "mgbench/molgraph/molecule.h"

namespace mgb {
namespace {

using EdgeSet = std::vector<std::uint64_t>;

void set_bit(EdgeSet &s, int i) {
  s[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool test_bit(const EdgeSet &s, int i) {
  return (s[i / 64] >> (i % 64)) & 1U;
}

int lowest_bit(const EdgeSet &s) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    if (s[w] != 0)
      return static_cast<int>(w * 64 + std::countr_zero(s[w]));
  }
  return -1;
}

struct Candidate {
  int length;
  EdgeSet edges;
};

// Orders the edges of a simple cycle into an atom walk.
std::vector<int> walk_cycle(const Molecule &mol, const EdgeSet &edges) {
  std::vector<int> ring_bonds;
  for (int b = 0; b < mol.num_bonds(); ++b) {
    if (test_bit(edges, b))
      ring_bonds.push_back(b);
  }
  int start = std::numeric_limits<int>::max();
  for (int b : ring_bonds)
    start = std::min({start, mol.bond(b).begin, mol.bond(b).end});

  std::vector<int> cycle{start};
  int prev = -1;
  int cur = start;
  // Of the two directions, walk toward the smaller neighbor first.
  while (true) {
    int next = -1;
    for (const Neighbor &n : mol.neighbors(cur)) {
      if (!test_bit(edges, n.bond) || n.atom == prev)
        continue;
      if (next < 0 || (prev < 0 && n.atom < next))
        next = n.atom;
    }
    if (next < 0 || next == start)
      break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

}  // namespace

std::vector<bool> find_ring_bonds(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<bool> ring(mol.num_bonds(), true);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent_bond) {
    disc[u] = low[u] = timer++;
    for (const Neighbor &nb : mol.neighbors(u)) {
      if (nb.bond == parent_bond)
        continue;
      if (disc[nb.atom] < 0) {
        dfs(nb.atom, nb.bond);
        low[u] = std::min(low[u], low[nb.atom]);
        if (low[nb.atom] > disc[u])
          ring[nb.bond] = false;
      } else {
        low[u] = std::min(low[u], disc[nb.atom]);
      }
    }
  };
  for (int a = 0; a < n; ++a) {
    if (disc[a] < 0)
      dfs(a, -1);
  }
  return ring;
}

std::vector<std::vector<int>> perceive_rings(const Molecule &mol) {
  const int n = mol.num_atoms();
  const int m = mol.num_bonds();
  const int rank = m - n + mol.num_components();
  if (rank <= 0)
    return {};

  const std::vector<bool> ring_bond = find_ring_bonds(mol);
  const std::size_t words = (m + 63) / 64;

  std::vector<Candidate> candidates;
  std::vector<int> dist(n), parent_bond(n);
  for (int root = 0; root < n; ++root) {
    bool has_ring_bond = false;
    for (const Neighbor &nb : mol.neighbors(root))
      has_ring_bond = has_ring_bond || ring_bond[nb.bond];
    if (!has_ring_bond)
      continue;

    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_bond.begin(), parent_bond.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Neighbor &nb : mol.neighbors(u)) {
        if (!ring_bond[nb.bond] || dist[nb.atom] >= 0)
          continue;
        dist[nb.atom] = dist[u] + 1;
        parent_bond[nb.atom] = nb.bond;
        queue.push_back(nb.atom);
      }
    }

    auto path_atoms = [&](int v) {
      std::vector<int> atoms;
      while (v != root) {
        atoms.push_back(v);
        v = mol.bond(parent_bond[v]).other(v);
      }
      return atoms;
    };

    for (int b = 0; b < m; ++b) {
      if (!ring_bond[b])
        continue;
      const int x = mol.bond(b).begin;
      const int y = mol.bond(b).end;
      if (dist[x] < 0 || dist[y] < 0)
        continue;
      if (parent_bond[x] == b || parent_bond[y] == b)
        continue;
      const auto px = path_atoms(x);
      const auto py = path_atoms(y);
      bool disjoint = true;
      for (int a : py) {
        if (std::find(px.begin(), px.end(), a) != px.end()) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint)
        continue;
      Candidate c{dist[x] + dist[y] + 1, EdgeSet(words, 0)};
      set_bit(c.edges, b);
      for (int a : px)
        set_bit(c.edges, parent_bond[a]);
      for (int a : py)
        set_bit(c.edges, parent_bond[a]);
      candidates.push_back(std::move(c));
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.length != b.length)
                return a.length < b.length;
              return a.edges < b.edges;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const Candidate &a, const Candidate &b) {
                                 return a.edges == b.edges;
                               }),
                   candidates.end());

  std::map<int, EdgeSet> basis;
  std::vector<std::vector<int>> rings;
  for (const Candidate &c : candidates) {
    if (static_cast<int>(rings.size()) == rank)
      break;
    EdgeSet v = c.edges;
    bool independent = false;
    while (true) {
      const int p = lowest_bit(v);
      if (p < 0)
        break;
      auto it = basis.find(p);
      if (it == basis.end()) {
        basis.emplace(p, v);
        independent = true;
        break;
      }
      for (std::size_t w = 0; w < words; ++w)
        v[w] ^= it->second[w];
    }
    if (independent)
      rings.push_back(walk_cycle(mol, c.edges));
  }
  return rings;
}

}  // namespace mgb
