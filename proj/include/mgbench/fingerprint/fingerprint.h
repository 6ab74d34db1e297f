//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_FINGERPRINT_FINGERPRINT_H_
#define MGBENCH_FINGERPRINT_FINGERPRINT_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mgb {

inline constexpr int kDefaultFingerprintBits = 4096;
inline constexpr int kDefaultFingerprintRadius = 2;

class FingerprintError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Fixed-width bitset. Bits past n_bits in the last word are always zero.
class Fingerprint {
public:
  Fingerprint() = default;
  explicit Fingerprint(int n_bits, int radius = kDefaultFingerprintRadius);

  int n_bits() const { return n_bits_; }
  int radius() const { return radius_; }

  void set(int bit);
  bool test(int bit) const;
  int popcount() const;
  std::vector<int> on_bits() const;

  const std::vector<std::uint64_t> &words() const { return words_; }

  // Packed LSB-first: bit i lives in byte i / 8 at position i % 8.
  std::vector<std::uint8_t> to_bytes() const;
  static Fingerprint from_bytes(const std::uint8_t *data, int n_bits, int radius);

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;

private:
  int n_bits_ = 0;
  int radius_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mgb

#endif  // MGBENCH_FINGERPRINT_FINGERPRINT_H_
