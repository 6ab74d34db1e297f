//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/bridge/latent.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mgb {
namespace {

double norm(const LatentVector &v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

LatentVector slerp(const LatentVector &a, const LatentVector &b, double t) {
  if (a.size() != b.size())
    throw LatentError("slerp: dimension mismatch");
  if (!(t >= 0.0 && t <= 1.0))
    throw LatentError("slerp: t must lie in [0, 1]");
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0)
    throw LatentError("slerp: zero vector");
  const double cos_omega =
      std::clamp(std::inner_product(a.begin(), a.end(), b.begin(), 0.0) / (na * nb), -1.0, 1.0);
  const double omega = std::acos(cos_omega);
  if (std::numbers::pi - omega < kSlerpEpsilon)
    throw LatentError("undefined great-circle");
  if (t == 0.0)
    return a;
  if (t == 1.0)
    return b;

  double wa;
  double wb;
  if (omega < kSlerpEpsilon) {
    wa = 1.0 - t;
    wb = t;
  } else {
    const double s = std::sin(omega);
    wa = std::sin((1.0 - t) * omega) / s;
    wb = std::sin(t * omega) / s;
  }
  LatentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = wa * a[i] + wb * b[i];
  return out;
}

std::vector<double> grid_positions(int n_grid, bool include_endpoints) {
  if (include_endpoints && n_grid < 2)
    throw LatentError("grid needs at least 2 points when endpoints are included");
  if (n_grid < 1)
    throw LatentError("grid needs at least 1 point");
  std::vector<double> t(n_grid);
  for (int k = 0; k < n_grid; ++k) {
    t[k] = include_endpoints ? static_cast<double>(k) / (n_grid - 1)
                             : static_cast<double>(k + 1) / (n_grid + 1);
  }
  return t;
}

std::vector<LatentVector> bridge_grid(const LatentVector &a, const LatentVector &b, int n_grid,
                                      bool include_endpoints) {
  std::vector<LatentVector> out;
  for (double t : grid_positions(n_grid, include_endpoints))
    out.push_back(slerp(a, b, t));
  return out;
}

LatentVector perturb(const LatentVector &v, double sigma, std::mt19937_64 &rng) {
  if (!(sigma >= 0.0))
    throw LatentError("perturbation sigma must be non-negative");
  if (sigma == 0.0)
    return v;
  std::normal_distribution<double> noise(0.0, sigma);
  LatentVector out(v);
  for (double &x : out)
    x += noise(rng);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t candidate_seed(std::uint64_t run_seed, std::uint64_t grid_index,
                             std::uint64_t perturb_index) {
  return splitmix64(splitmix64(run_seed ^ splitmix64(grid_index)) + perturb_index);
}

}  // namespace mgb
