//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_FINGERPRINT_SIMILARITY_H_
#define MGBENCH_FINGERPRINT_SIMILARITY_H_

#include <atomic>
#include <cstdint>

#include "mgbench/fingerprint/fingerprint.h"

namespace mgb {

// |a & b| / |a | b|. Two empty bitsets compare as 1.0.
double tanimoto(const Fingerprint &a, const Fingerprint &b);

// 2|a & b| / (|a| + |b|). Two empty bitsets compare as 1.0.
double dice(const Fingerprint &a, const Fingerprint &b);

struct RdsValue {
  double value = 0.0;
  bool clamped = false;
};

// Relative Dice similarity of candidates against a fixed reference pair:
//   RDS_i = (d(B,i) - d(A,i)) / (1 - d(A,B))
// Negative values lie nearer A. Results are clamped to [-1, 1].
class RdsReference {
public:
  // Throws FingerprintError("degenerate reference pair") when d(A,B) == 1.
  RdsReference(Fingerprint a, Fingerprint b);

  RdsValue operator()(const Fingerprint &candidate) const;

  double reference_dice() const { return d_ab_; }
  std::uint64_t clamp_events() const { return clamps_.load(std::memory_order_relaxed); }

  const Fingerprint &a() const { return a_; }
  const Fingerprint &b() const { return b_; }

private:
  Fingerprint a_;
  Fingerprint b_;
  double d_ab_;
  mutable std::atomic<std::uint64_t> clamps_{0};
};

RdsValue rds(const Fingerprint &candidate, const Fingerprint &a, const Fingerprint &b);

}  // namespace mgb

#endif  // MGBENCH_FINGERPRINT_SIMILARITY_H_
