//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_FINGERPRINT_MORGAN_H_
#define MGBENCH_FINGERPRINT_MORGAN_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mgbench/fingerprint/fingerprint.h"
#include "mgbench/molgraph/molecule.h"

namespace mgb {

// FNV-1a over the little-endian 8-byte encoding of each value.
class Fnv1a64 {
public:
  static constexpr std::uint64_t kOffset = 14695981039346656037ULL;
  static constexpr std::uint64_t kPrime = 1099511628211ULL;

  Fnv1a64 &add(std::uint64_t value);
  Fnv1a64 &add_int(std::int64_t value) { return add(static_cast<std::uint64_t>(value)); }
  std::uint64_t digest() const { return state_; }

private:
  std::uint64_t state_ = kOffset;
};

// One unique circular environment: `id` is the unfolded identifier of the
// environment of `radius` bonds centred on `atom`.
struct MorganEnvironment {
  std::uint64_t id;
  int atom;
  int radius;
};

// Environments in generation order (radius, then centre atom). Duplicate bond
// sets are reported once, with the smallest identifier.
std::vector<MorganEnvironment> morgan_environments(const Molecule &mol, int radius);

Fingerprint morgan_fingerprint(const Molecule &mol, int radius = kDefaultFingerprintRadius,
                               int n_bits = kDefaultFingerprintBits);

// Fingerprints for many molecules on `threads` workers; output order matches
// input order. threads <= 0 selects hardware concurrency.
std::vector<Fingerprint> morgan_fingerprints(std::span<const Molecule> mols, int radius,
                                             int n_bits, int threads);

}  // namespace mgb

#endif  // MGBENCH_FINGERPRINT_MORGAN_H_
