//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/harness/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <vector>

namespace mgb {
namespace {

using nlohmann::json;

Summary summarize(const std::vector<double> &xs) {
  Summary s;
  s.n = static_cast<std::int64_t>(xs.size());
  if (xs.empty())
    return s;
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs)
      ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / (xs.size() - 1));
  }
  return s;
}

json summary_json(const Summary &s) {
  return {{"n", s.n}, {"mean", s.mean}, {"stddev", s.stddev}};
}

Summary summary_from(const json &j) {
  return {j.at("n").get<std::int64_t>(), j.at("mean").get<double>(), j.at("stddev").get<double>()};
}

double rate(std::int64_t count, double seconds) {
  return seconds > 0.0 ? count / seconds : 0.0;
}

std::string fmt(double v) {
  if (std::isnan(v))
    return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

StageRates RunReport::rates() const {
  const double s = timing.decode_wall_s;
  return {rate(counts.total, s), rate(counts.valid, s), rate(counts.unique, s),
          rate(counts.novel, s), rate(counts.pc, s),    rate(counts.nbm, s)};
}

int rds_bin(double rds) {
  const int k = static_cast<int>(std::floor((rds + 1.0) / (2.0 / kRdsBins)));
  return std::clamp(k, 0, kRdsBins - 1);
}

RunReport kpi_report(std::span<const GenerationRecord> records, const RunMeta &meta,
                     const RunTiming &timing, const RunReport *baseline,
                     const std::string &baseline_name) {
  RunReport report;
  report.meta = meta;
  report.timing = timing;
  std::vector<double> qeds;
  std::vector<double> sass;
  for (const GenerationRecord &r : records) {
    ++report.counts.total;
    report.counts.valid += r.valid;
    if (!r.unique_first)
      continue;
    ++report.counts.unique;
    report.counts.novel += r.novel;
    report.counts.pc += r.pc_pass;
    report.counts.nbm += r.nbm_pass;
    qeds.push_back(r.qed);
    sass.push_back(r.sas);
    ++report.rds_histogram[rds_bin(r.rds)];
    if (std::abs(r.rds) < kRdsCoreHalfWidth)
      ++report.rds_core;
    report.rds_clamped += r.rds_clamped;
  }
  report.qed = summarize(qeds);
  report.sas = summarize(sass);
  report.novelty_fraction =
      report.counts.unique > 0 ? static_cast<double>(report.counts.novel) / report.counts.unique : 0.0;

  if (baseline) {
    if (baseline->meta.pair != meta.pair)
      throw ReportError("baseline was run on pair '" + baseline->meta.pair + "', this run on '" +
                        meta.pair + "'");
    if (baseline->meta.latent_dim != meta.latent_dim)
      throw ReportError("baseline latent_dim " + std::to_string(baseline->meta.latent_dim) +
                        " differs from " + std::to_string(meta.latent_dim));
    BaselineComparison cmp;
    cmp.name = baseline_name;
    cmp.delta_sas = report.sas.mean - baseline->sas.mean;
    const double base_rate = baseline->rates().nbm;
    if (base_rate > 0.0)
      cmp.efficiency_ratio = report.rates().nbm / base_rate;
    report.baseline = cmp;
  }
  return report;
}

json report_to_json(const RunReport &r) {
  json j;
  j["meta"] = {{"pair", r.meta.pair},           {"decoder", r.meta.decoder},
               {"latent_dim", r.meta.latent_dim}, {"sigma", r.meta.sigma},
               {"seed", r.meta.seed},           {"n_grid", r.meta.n_grid},
               {"n_perturb", r.meta.n_perturb}};
  j["counts"] = {{"total", r.counts.total}, {"valid", r.counts.valid},
                 {"unique", r.counts.unique}, {"novel", r.counts.novel},
                 {"pc", r.counts.pc},       {"nbm", r.counts.nbm}};
  j["qed"] = summary_json(r.qed);
  j["sas"] = summary_json(r.sas);
  j["novelty_fraction"] = r.novelty_fraction;
  j["rds"] = {{"bins", kRdsBins},
              {"lower", -1.0},
              {"upper", 1.0},
              {"histogram", r.rds_histogram},
              {"core_count", r.rds_core},
              {"core_interval", {-kRdsCoreHalfWidth, kRdsCoreHalfWidth}},
              {"clamped", r.rds_clamped}};
  j["baseline"] = nullptr;
  const StageRates rates = r.rates();
  json timing = {{"decode_wall_s", r.timing.decode_wall_s},
                 {"wall_clock_s", r.timing.wall_clock_s},
                 {"molecules_per_second",
                  {{"total", rates.total},
                   {"valid", rates.valid},
                   {"unique", rates.unique},
                   {"novel", rates.novel},
                   {"pc", rates.pc},
                   {"nbm", rates.nbm}}}};
  if (r.baseline) {
    j["baseline"] = {{"name", r.baseline->name}, {"delta_sas", r.baseline->delta_sas}};
    timing["efficiency_ratio_nbm"] =
        r.baseline->efficiency_ratio ? json(*r.baseline->efficiency_ratio) : json(nullptr);
  }
  j["timing"] = std::move(timing);
  return j;
}

RunReport report_from_json(const json &j) {
  try {
    RunReport r;
    const json &m = j.at("meta");
    r.meta = {m.at("pair").get<std::string>(), m.at("decoder").get<std::string>(),
              m.at("latent_dim").get<int>(),   m.at("sigma").get<double>(),
              m.at("seed").get<std::uint64_t>(), m.at("n_grid").get<int>(),
              m.at("n_perturb").get<int>()};
    const json &c = j.at("counts");
    r.counts = {c.at("total").get<std::int64_t>(), c.at("valid").get<std::int64_t>(),
                c.at("unique").get<std::int64_t>(), c.at("novel").get<std::int64_t>(),
                c.at("pc").get<std::int64_t>(), c.at("nbm").get<std::int64_t>()};
    r.qed = summary_from(j.at("qed"));
    r.sas = summary_from(j.at("sas"));
    r.novelty_fraction = j.at("novelty_fraction").get<double>();
    const json &rds = j.at("rds");
    r.rds_histogram = rds.at("histogram").get<std::array<std::int64_t, kRdsBins>>();
    r.rds_core = rds.at("core_count").get<std::int64_t>();
    r.rds_clamped = rds.at("clamped").get<std::int64_t>();
    if (const json &b = j.at("baseline"); !b.is_null()) {
      BaselineComparison cmp;
      cmp.name = b.at("name").get<std::string>();
      cmp.delta_sas = b.at("delta_sas").get<double>();
      r.baseline = cmp;
    }
    const json &t = j.at("timing");
    r.timing = {t.at("decode_wall_s").get<double>(), t.at("wall_clock_s").get<double>()};
    if (r.baseline && t.contains("efficiency_ratio_nbm") && !t["efficiency_ratio_nbm"].is_null())
      r.baseline->efficiency_ratio = t["efficiency_ratio_nbm"].get<double>();
    return r;
  } catch (const json::exception &e) {
    throw ReportError(std::string("malformed run report: ") + e.what());
  }
}

void write_scatter_csv(std::ostream &out, std::span<const GenerationRecord> records) {
  std::vector<const GenerationRecord *> rows;
  for (const GenerationRecord &r : records)
    if (r.unique_first)
      rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [](const GenerationRecord *a, const GenerationRecord *b) {
    return std::tie(a->t, a->perturb_index, a->grid_index) <
           std::tie(b->t, b->perturb_index, b->grid_index);
  });
  out << "grid_index,perturb_index,t,canonical,qed,sas,rds,novel,pc_pass,nbm_pass\n";
  char tbuf[32];
  for (const GenerationRecord *r : rows) {
    std::snprintf(tbuf, sizeof tbuf, "%.17g", r->t);
    out << r->grid_index << ',' << r->perturb_index << ',' << tbuf << ',' << r->canonical << ','
        << fmt(r->qed) << ',' << fmt(r->sas) << ',' << fmt(r->rds) << ',' << int(r->novel) << ','
        << int(r->pc_pass) << ',' << int(r->nbm_pass) << '\n';
  }
}

void write_rds_histogram_csv(std::ostream &out, const RunReport &report) {
  out << "bin,lower,upper,count\n";
  const double width = 2.0 / kRdsBins;
  for (int k = 0; k < kRdsBins; ++k) {
    out << k << ',' << fmt(-1.0 + k * width) << ',' << fmt(-1.0 + (k + 1) * width) << ','
        << report.rds_histogram[k] << '\n';
  }
}

}  // namespace mgb
