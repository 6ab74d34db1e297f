//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_DESCRIPTORS_QED_H_
#define MGBENCH_DESCRIPTORS_QED_H_

#include <array>
#include <filesystem>
#include <string_view>

#include "mgbench/descriptors/descriptors.h"

namespace mgb {

// Asymmetric double sigmoid parameters of one QED property.
struct AdsParams {
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, dmax = 1;
  double weight = 0;
};

double ads(double x, const AdsParams &p);

struct QedParams {
  // Order: mw, logp, hba, hbd, tpsa, rotb, arom_rings, alerts.
  std::array<AdsParams, 8> props;

  static constexpr std::array<std::string_view, 8> kNames = {
      "mw", "logp", "hba", "hbd", "tpsa", "rotb", "arom_rings", "alerts"};

  // Tab-separated: property a b c d e f dmax weight; '#' lines are comments.
  static QedParams load(const std::filesystem::path &path);
};

// Weighted geometric mean of the eight desirabilities.
double qed(const DescriptorVector &v, const QedParams &params);

struct PcThresholds {
  double min_qed = 0.4;
  double max_sas = 4.0;
};

// Both bounds are inclusive.
bool pc_filter(double qed_value, double sas_value, const PcThresholds &t = {});

}  // namespace mgb

#endif  // MGBENCH_DESCRIPTORS_QED_H_
