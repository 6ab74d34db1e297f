//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/fingerprint/fingerprint.h"

#include <bit>
#include <string>

namespace mgb {

Fingerprint::Fingerprint(int n_bits, int radius)
    : n_bits_(n_bits), radius_(radius), words_((n_bits + 63) / 64, 0) {
  if (n_bits <= 0)
    throw FingerprintError("fingerprint width must be positive");
}

void Fingerprint::set(int bit) {
  if (bit < 0 || bit >= n_bits_)
    throw FingerprintError("bit " + std::to_string(bit) + " outside fingerprint width");
  words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

bool Fingerprint::test(int bit) const {
  if (bit < 0 || bit >= n_bits_)
    return false;
  return (words_[bit / 64] >> (bit % 64)) & 1U;
}

int Fingerprint::popcount() const {
  int n = 0;
  for (std::uint64_t w : words_)
    n += std::popcount(w);
  return n;
}

std::vector<int> Fingerprint::on_bits() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<std::uint8_t> Fingerprint::to_bytes() const {
  std::vector<std::uint8_t> out((n_bits_ + 7) / 8, 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (8 * (i % 8)));
  return out;
}

Fingerprint Fingerprint::from_bytes(const std::uint8_t *data, int n_bits, int radius) {
  Fingerprint fp(n_bits, radius);
  const int n_bytes = (n_bits + 7) / 8;
  for (int i = 0; i < n_bytes; ++i)
    fp.words_[i / 8] |= static_cast<std::uint64_t>(data[i]) << (8 * (i % 8));
  if (n_bits % 64 != 0)
    fp.words_.back() &= (std::uint64_t{1} << (n_bits % 64)) - 1;
  return fp;
}

}  // namespace mgb
