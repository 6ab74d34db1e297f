//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/descriptors/qed.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mgb {

double ads(double x, const AdsParams &p) {
  const double rise = 1.0 + std::exp(-(x - p.c + p.d / 2.0) / p.e);
  const double fall = 1.0 - 1.0 / (1.0 + std::exp(-(x - p.c - p.d / 2.0) / p.f));
  return (p.a + p.b / rise * fall) / p.dmax;
}

QedParams QedParams::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read " + path.string());
  QedParams params;
  std::array<bool, 8> seen{};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream fields(line);
    std::string name;
    AdsParams p;
    if (!(fields >> name >> p.a >> p.b >> p.c >> p.d >> p.e >> p.f >> p.dmax >> p.weight))
      throw std::runtime_error("malformed QED parameter line: " + line);
    if (!(p.dmax > 0.0))
      throw std::runtime_error("QED dmax must be positive for " + name);
    std::size_t i = 0;
    while (i < kNames.size() && kNames[i] != name)
      ++i;
    if (i == kNames.size())
      throw std::runtime_error("unknown QED property " + name);
    params.props[i] = p;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i])
      throw std::runtime_error("QED parameters missing " + std::string(kNames[i]));
  }
  return params;
}

double qed(const DescriptorVector &v, const QedParams &params) {
  const double x[8] = {v.mw,   v.logp,          static_cast<double>(v.hba),
                       static_cast<double>(v.hbd), v.tpsa, static_cast<double>(v.rotb),
                       static_cast<double>(v.arom_rings), static_cast<double>(v.alerts)};
  double log_sum = 0.0;
  double weight_sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    const AdsParams &p = params.props[i];
    log_sum += p.weight * std::log(ads(x[i], p));
    weight_sum += p.weight;
  }
  return std::exp(log_sum / weight_sum);
}

bool pc_filter(double qed_value, double sas_value, const PcThresholds &t) {
  return qed_value >= t.min_qed && sas_value <= t.max_sas;
}

}  // namespace mgb
