//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_FINGERPRINT_FINGERPRINT_STORE_H_
#define MGBENCH_FINGERPRINT_FINGERPRINT_STORE_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mgbench/fingerprint/fingerprint.h"

namespace mgb {

struct FingerprintRecord {
  std::string id;
  Fingerprint fp;
};

// Little-endian file: "MFP1", u32 n_bits, u32 radius, u64 count, then per
// record u32 id length, id bytes and n_bits / 8 packed bytes.
struct FingerprintStore {
  int n_bits = kDefaultFingerprintBits;
  int radius = kDefaultFingerprintRadius;
  std::vector<FingerprintRecord> records;

  void write(std::ostream &out) const;
  void write(const std::filesystem::path &path) const;
  static FingerprintStore read(std::istream &in);
  static FingerprintStore read(const std::filesystem::path &path);
};

}  // namespace mgb

#endif  // MGBENCH_FINGERPRINT_FINGERPRINT_STORE_H_
