//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/fingerprint/similarity.h"

#include <algorithm>
#include <bit>
#include <string>

namespace mgb {
namespace {

struct Counts {
  int both = 0;
  int a = 0;
  int b = 0;
};

Counts count(const Fingerprint &a, const Fingerprint &b) {
  if (a.n_bits() != b.n_bits())
    throw FingerprintError("fingerprint width mismatch: " + std::to_string(a.n_bits()) +
                           " vs " + std::to_string(b.n_bits()));
  Counts c;
  const auto &wa = a.words();
  const auto &wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    c.both += std::popcount(wa[i] & wb[i]);
    c.a += std::popcount(wa[i]);
    c.b += std::popcount(wb[i]);
  }
  return c;
}

}  // namespace

double tanimoto(const Fingerprint &a, const Fingerprint &b) {
  const Counts c = count(a, b);
  const int either = c.a + c.b - c.both;
  if (either == 0)
    return 1.0;
  return static_cast<double>(c.both) / either;
}

double dice(const Fingerprint &a, const Fingerprint &b) {
  const Counts c = count(a, b);
  if (c.a + c.b == 0)
    return 1.0;
  return 2.0 * c.both / (c.a + c.b);
}

RdsReference::RdsReference(Fingerprint a, Fingerprint b)
    : a_(std::move(a)), b_(std::move(b)), d_ab_(dice(a_, b_)) {
  if (d_ab_ >= 1.0)
    throw FingerprintError("degenerate reference pair");
}

RdsValue RdsReference::operator()(const Fingerprint &candidate) const {
  const double raw = (dice(b_, candidate) - dice(a_, candidate)) / (1.0 - d_ab_);
  RdsValue v{std::clamp(raw, -1.0, 1.0), false};
  if (v.value != raw) {
    v.clamped = true;
    clamps_.fetch_add(1, std::memory_order_relaxed);
  }
  return v;
}

RdsValue rds(const Fingerprint &candidate, const Fingerprint &a, const Fingerprint &b) {
  return RdsReference(a, b)(candidate);
}

}  // namespace mgb
