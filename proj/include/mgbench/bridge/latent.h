//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_BRIDGE_LATENT_H_
#define MGBENCH_BRIDGE_LATENT_H_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "mgbench/decoder/decoder.h"

namespace mgb {

class LatentError: public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Angles below this are treated as parallel (linear interpolation); angles
// within this of pi are rejected as antipodal.
inline constexpr double kSlerpEpsilon = 1e-9;

// Spherical interpolation on the great circle through a and b. Returns a and
// b exactly at t = 0 and t = 1.
LatentVector slerp(const LatentVector &a, const LatentVector &b, double t);

// Grid positions t_k = k / (n - 1) for k = 0..n-1, or the n interior points
// k / (n + 1), k = 1..n, when endpoints are excluded.
std::vector<double> grid_positions(int n_grid, bool include_endpoints = true);

std::vector<LatentVector> bridge_grid(const LatentVector &a, const LatentVector &b, int n_grid,
                                      bool include_endpoints = true);

// v plus iid Normal(0, sigma^2) noise per component. sigma == 0 returns v.
LatentVector perturb(const LatentVector &v, double sigma, std::mt19937_64 &rng);

std::uint64_t splitmix64(std::uint64_t x);

// Seed of the random stream for candidate (grid_index, perturb_index).
std::uint64_t candidate_seed(std::uint64_t run_seed, std::uint64_t grid_index,
                             std::uint64_t perturb_index);

}  // namespace mgb

#endif  // MGBENCH_BRIDGE_LATENT_H_
