//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/harness/pipeline.h"

#include <fstream>
#include <limits>

#include "mgbench/molgraph/corpus.h"
#include "mgbench/molgraph/smiles.h"

namespace mgb {
namespace {

const ParseOptions kUnlimited{.max_length = std::numeric_limits<std::size_t>::max()};

std::ofstream open_out(const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::unordered_set<std::string> load_training_index(const std::filesystem::path &corpus) {
  std::unordered_set<std::string> index;
  for (const CorpusRecord &rec : read_corpus(corpus))
    index.insert(canonicalize(rec.smiles, kUnlimited));
  return index;
}

std::vector<Molecule> load_molecules(const std::filesystem::path &corpus) {
  std::vector<Molecule> mols;
  for (const CorpusRecord &rec : read_corpus(corpus))
    mols.push_back(parse_smiles(rec.smiles, kUnlimited));
  return mols;
}

ChemistryTables ChemistryTables::load(const std::filesystem::path &data_dir) {
  return {DescriptorTables::load(data_dir), QedParams::load(data_dir / "qed_params.tsv")};
}

RunOutput run_pipeline(const ReferencePair &pair, Decoder &decoder, const BridgeConfig &cfg,
                       const std::unordered_set<std::string> &training_index,
                       const ChemistryTables &tables, const FragScores &frag_scores,
                       const RunReport *baseline, const std::string &baseline_name) {
  RunOutput out;
  BridgeRun run = bridge_run(pair.a.latent, pair.b.latent, cfg.sigma, decoder, cfg);
  out.generation = std::move(run.records);

  const ChemistryProbe probe(pair, tables.descriptors, tables.qed, frag_scores);
  out.records = filter_cascade(out.generation, training_index, probe, {.pc = {}, .threads = cfg.threads});

  RunMeta meta{pair.class_name, decoder.name(), decoder.latent_dim(), cfg.sigma, cfg.seed,
               cfg.n_grid,      cfg.n_perturb};
  out.report = kpi_report(out.records, meta, {.decode_wall_s = run.decode_seconds}, baseline,
                          baseline_name);
  return out;
}

void write_run_outputs(const std::filesystem::path &dir, const RunOutput &out) {
  std::filesystem::create_directories(dir);
  write_generation_set(dir / "generation.tsv", out.generation);
  {
    auto f = open_out(dir / "report.json");
    f << report_to_json(out.report).dump(2) << '\n';
  }
  {
    auto f = open_out(dir / "scatter.csv");
    write_scatter_csv(f, out.records);
  }
  {
    auto f = open_out(dir / "rds_histogram.csv");
    write_rds_histogram_csv(f, out.report);
  }
}

}  // namespace mgb
