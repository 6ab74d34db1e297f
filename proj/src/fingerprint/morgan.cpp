//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/fingerprint/morgan.h"

#include <algorithm>
#include <bit>
#include <exception>
#include <set>
#include <thread>
#include <utility>

namespace mgb {

Fnv1a64 &Fnv1a64::add(std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    state_ ^= (value >> (8 * i)) & 0xFFU;
    state_ *= kPrime;
  }
  return *this;
}

namespace {

using BondSet = std::vector<std::uint64_t>;

std::uint64_t atom_invariant(const Molecule &mol, int a) {
  const Atom &atom = mol.atom(a);
  return Fnv1a64()
      .add_int(atom.element)
      .add_int(mol.degree(a))
      .add_int(atom.formal_charge)
      .add_int(atom.total_h)
      .add_int(atom.in_ring ? 1 : 0)
      .add_int(atom.aromatic ? 1 : 0)
      .digest();
}

}  // namespace

std::vector<MorganEnvironment> morgan_environments(const Molecule &mol, int radius) {
  if (radius < 0)
    throw FingerprintError("fingerprint radius must be non-negative");
  const int n = mol.num_atoms();
  const std::size_t words = (mol.num_bonds() + 63) / 64;

  std::vector<MorganEnvironment> out;
  std::vector<std::uint64_t> ids(n);
  std::vector<BondSet> env(n, BondSet(words, 0));
  for (int a = 0; a < n; ++a) {
    ids[a] = atom_invariant(mol, a);
    out.push_back({ids[a], a, 0});
  }

  std::set<BondSet> seen;
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::uint64_t> next_ids(n);
    std::vector<BondSet> next_env = env;
    for (int a = 0; a < n; ++a) {
      std::vector<std::pair<int, std::uint64_t>> nbrs;
      for (const Neighbor &nb : mol.neighbors(a)) {
        nbrs.emplace_back(static_cast<int>(mol.bond(nb.bond).order), ids[nb.atom]);
        next_env[a][nb.bond / 64] |= std::uint64_t{1} << (nb.bond % 64);
        for (std::size_t w = 0; w < words; ++w)
          next_env[a][w] |= env[nb.atom][w];
      }
      std::sort(nbrs.begin(), nbrs.end());
      Fnv1a64 h;
      h.add_int(r).add(ids[a]);
      for (const auto &[order, id] : nbrs)
        h.add_int(order).add(id);
      next_ids[a] = h.digest();
    }

    struct Entry {
      const BondSet *bonds;
      std::uint64_t id;
      int atom;
    };
    std::vector<Entry> layer;
    for (int a = 0; a < n; ++a) {
      if (mol.degree(a) > 0)
        layer.push_back({&next_env[a], next_ids[a], a});
    }
    std::sort(layer.begin(), layer.end(), [](const Entry &x, const Entry &y) {
      if (*x.bonds != *y.bonds)
        return *x.bonds < *y.bonds;
      if (x.id != y.id)
        return x.id < y.id;
      return x.atom < y.atom;
    });
    std::vector<MorganEnvironment> kept;
    for (const Entry &e : layer) {
      if (seen.insert(*e.bonds).second)
        kept.push_back({e.id, e.atom, r});
    }
    std::sort(kept.begin(), kept.end(),
              [](const MorganEnvironment &x, const MorganEnvironment &y) { return x.atom < y.atom; });
    out.insert(out.end(), kept.begin(), kept.end());

    ids = std::move(next_ids);
    env = std::move(next_env);
  }
  return out;
}

Fingerprint morgan_fingerprint(const Molecule &mol, int radius, int n_bits) {
  if (n_bits <= 0 || !std::has_single_bit(static_cast<unsigned>(n_bits)))
    throw FingerprintError("fingerprint width must be a power of two");
  Fingerprint fp(n_bits, radius);
  for (const MorganEnvironment &e : morgan_environments(mol, radius))
    fp.set(static_cast<int>(e.id % static_cast<std::uint64_t>(n_bits)));
  return fp;
}

std::vector<Fingerprint> morgan_fingerprints(std::span<const Molecule> mols, int radius,
                                             int n_bits, int threads) {
  std::vector<Fingerprint> out(mols.size());
  if (threads <= 0)
    threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(1, mols.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < mols.size(); ++i)
      out[i] = morgan_fingerprint(mols[i], radius, n_bits);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < mols.size(); i += threads)
          out[i] = morgan_fingerprint(mols[i], radius, n_bits);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto &th : pool)
    th.join();
  for (auto &e : errors) {
    if (e)
      std::rethrow_exception(e);
  }
  return out;
}

}  // namespace mgb
