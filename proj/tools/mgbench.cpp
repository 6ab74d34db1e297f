//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mgbench/bridge/bridge.h"
#include "mgbench/decoder/reference_decoder.h"
#include "mgbench/decoder/transport.h"
#include "mgbench/fingerprint/fingerprint_store.h"
#include "mgbench/fingerprint/morgan.h"
#include "mgbench/harness/evaluation.h"
#include "mgbench/harness/pipeline.h"
#include "mgbench/harness/prep.h"
#include "mgbench/harness/reference_pair.h"
#include "mgbench/molgraph/corpus.h"
#include "mgbench/molgraph/smiles.h"

namespace {

using namespace mgb;
using nlohmann::json;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitTransport = 3;

class UsageError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string data_dir = MGB_DEFAULT_DATA_DIR;
  int threads = 0;

  // prep
  std::string input;
  std::string train_out;
  std::string test_out;
  std::size_t min_length = 10;
  std::size_t max_length = 200;
  double train_fraction = 0.9;

  // corpus-consuming commands
  std::string corpus;
  std::string out;
  int bits = kDefaultFingerprintBits;
  int radius = kDefaultFingerprintRadius;
  int latent_dim = kDefaultLatentDim;

  // bridge commands
  std::string pair = "NSAID";
  std::string decoder = "reference";
  std::string index;
  std::string training;
  std::string fragscores;
  std::string pair_latents;
  std::vector<double> sigmas{std::begin(kDefaultScanSigmas), std::end(kDefaultScanSigmas)};
  double sigma = 0.1;
  int grid = 100;
  int perturb = -1;
  std::uint64_t seed = 0;
  bool exclude_endpoints = false;
  bool no_timing = false;
  int pool = 1;
  int timeout_ms = static_cast<int>(protocol::kDefaultBatchTimeout.count());
  int max_batch = 1000;
  std::string baseline;
  std::string baseline_name = "baseline";

  // report
  std::string records;

  // eval
  std::string recon;

  // serve
  std::string unix_path;
  bool reverse = false;
};

// ---------------------------------------------------------------------------
// Shared loading helpers

std::shared_ptr<const LatentIndex> load_index(const Options &o) {
  if (o.index.empty())
    throw UsageError("--index is required here");
  return std::make_shared<const LatentIndex>(LatentIndex::load(fs::path(o.index)));
}

std::unique_ptr<Decoder> make_decoder(const Options &o,
                                      std::shared_ptr<const LatentIndex> &index_out) {
  if (o.decoder == "reference") {
    index_out = load_index(o);
    return std::make_unique<ReferenceDecoder>(index_out);
  }
  if (o.decoder.starts_with("proto:")) {
    if (!o.index.empty())
      index_out = load_index(o);
    return ProtocolDecoder::from_endpoint(o.decoder.substr(6), o.pool,
                                          std::chrono::milliseconds(o.timeout_ms));
  }
  throw UsageError("--decoder must be 'reference' or 'proto:<endpoint>'");
}

LatentVector parse_latent_line(const std::string &line) {
  std::istringstream in(line);
  LatentVector v;
  for (double x; in >> x;)
    v.push_back(x);
  if (!in.eof())
    throw IoError("pair latents: non-numeric value");
  return v;
}

ReferencePair resolve_pair(const Options &o, const LatentIndex *index, const Decoder &decoder) {
  const auto specs = load_reference_pairs(fs::path(o.data_dir) / "reference_pairs.tsv");
  const ReferencePairSpec &spec = find_reference_pair(specs, o.pair);
  ReferencePair pair = make_reference_pair(spec, index ? &index->projection() : nullptr,
                                           index ? index->d_fp() : o.bits);
  if (!o.pair_latents.empty()) {
    std::ifstream in(o.pair_latents);
    if (!in)
      throw IoError("cannot open " + o.pair_latents);
    std::string la, lb;
    std::getline(in, la);
    std::getline(in, lb);
    pair.a.latent = parse_latent_line(la);
    pair.b.latent = parse_latent_line(lb);
  }
  if (pair.a.latent.empty())
    throw UsageError("no latent vectors for the reference pair: pass --index (reference "
                     "encoder) or --pair-latents");
  if (static_cast<int>(pair.a.latent.size()) != decoder.latent_dim() ||
      pair.b.latent.size() != pair.a.latent.size())
    throw UsageError("reference latent dimension " + std::to_string(pair.a.latent.size()) +
                     " does not match decoder latent_dim " +
                     std::to_string(decoder.latent_dim()));
  return pair;
}

FragScores load_fragscores(const Options &o) {
  if (!o.fragscores.empty())
    return FragScores::read(fs::path(o.fragscores));
  if (o.training.empty())
    throw UsageError("--fragscores or --training is required");
  return FragScores::build(load_molecules(o.training), o.threads);
}

std::unordered_set<std::string> training_index(const Options &o) {
  if (o.training.empty())
    throw UsageError("--training is required");
  return load_training_index(o.training);
}

BridgeConfig bridge_config(const Options &o, int default_perturb) {
  BridgeConfig cfg;
  cfg.n_grid = o.grid;
  cfg.n_perturb = o.perturb > 0 ? o.perturb : default_perturb;
  cfg.sigma = o.sigma;
  cfg.seed = o.seed;
  cfg.include_endpoints = !o.exclude_endpoints;
  cfg.threads = o.threads;
  cfg.max_batch = o.max_batch;
  cfg.record_timing = !o.no_timing;
  return cfg;
}

void write_json(const std::string &path, const json &j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_prep(const Options &o) {
  PrepConfig cfg{o.min_length, o.max_length, o.train_fraction, o.seed};
  const auto raw = read_corpus(fs::path(o.input));
  const PrepResult r = prep_dataset(raw, cfg);
  auto write = [](const std::string &path, const std::vector<CorpusRecord> &recs) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw IoError("cannot open " + path + " for writing");
    write_corpus(out, recs);
  };
  write(o.train_out, r.train);
  write(o.test_out, r.test);
  json stats = {{"lines", r.stats.lines},
                {"kept", r.stats.kept},
                {"rejected", r.stats.rejected},
                {"train", r.train.size()},
                {"test", r.test.size()}};
  std::cout << stats.dump(2) << '\n';
  return kExitOk;
}

int cmd_fp(const Options &o) {
  const auto recs = read_corpus(fs::path(o.corpus));
  std::vector<Molecule> mols;
  for (const CorpusRecord &rec : recs)
    mols.push_back(parse_smiles(rec.smiles, {.max_length = std::numeric_limits<std::size_t>::max()}));
  const auto fps = morgan_fingerprints(mols, o.radius, o.bits, o.threads);
  FingerprintStore store{o.bits, o.radius, {}};
  for (std::size_t i = 0; i < recs.size(); ++i)
    store.records.push_back({recs[i].id.empty() ? recs[i].smiles : recs[i].id, fps[i]});
  store.write(fs::path(o.out));
  std::cerr << "wrote " << store.records.size() << " fingerprints to " << o.out << '\n';
  return kExitOk;
}

int cmd_fragscores(const Options &o) {
  const FragScores scores = FragScores::build(load_molecules(o.corpus), o.threads);
  scores.write(fs::path(o.out));
  std::cerr << "wrote " << scores.size() << " fragment scores from " << scores.corpus_size()
            << " molecules to " << o.out << '\n';
  return kExitOk;
}

int cmd_index(const Options &o) {
  const LatentIndex index =
      LatentIndex::build(load_molecules(o.corpus), o.seed, o.latent_dim, o.bits, o.threads);
  index.save(fs::path(o.out));
  std::cerr << "wrote " << index.size() << " entries to " << o.out << '\n';
  return kExitOk;
}

int cmd_scan(const Options &o) {
  std::shared_ptr<const LatentIndex> index;
  auto decoder = make_decoder(o, index);
  const ReferencePair pair = resolve_pair(o, index.get(), *decoder);
  const auto train = training_index(o);
  const BridgeConfig cfg = bridge_config(o, 100);
  const ScanResult scan =
      noise_scan(pair.a.latent, pair.b.latent, o.sigmas, *decoder, cfg, train);

  json per_sigma = json::array();
  json seconds = json::array();
  for (const SigmaScan &s : scan.per_sigma) {
    json row = {{"sigma", s.sigma}, {"total", s.total},   {"valid", s.valid},
                {"unique", s.unique}, {"novel", s.novel}, {"error", nullptr}};
    if (s.error)
      row["error"] = *s.error;
    per_sigma.push_back(row);
    seconds.push_back(s.decode_seconds);
  }
  json j = {{"pair", pair.class_name},
            {"decoder", decoder->name()},
            {"n_grid", cfg.n_grid},
            {"n_perturb", cfg.n_perturb},
            {"seed", cfg.seed},
            {"per_sigma", per_sigma},
            {"sigma_star", scan.sigma_star ? json(*scan.sigma_star) : json(nullptr)},
            {"timing", {{"decode_seconds", seconds}}}};
  write_json(o.out, j);
  bool any_error = false;
  for (const SigmaScan &s : scan.per_sigma)
    any_error = any_error || s.error.has_value();
  return any_error ? kExitTransport : kExitOk;
}

std::optional<RunReport> load_baseline(const Options &o) {
  if (o.baseline.empty())
    return std::nullopt;
  std::ifstream in(o.baseline);
  if (!in)
    throw IoError("cannot open " + o.baseline);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ReportError("baseline " + o.baseline + " is not valid JSON");
  return report_from_json(j);
}

int cmd_run(const Options &o, Clock::time_point started) {
  if (o.out.empty())
    throw UsageError("--out directory is required");
  std::shared_ptr<const LatentIndex> index;
  auto decoder = make_decoder(o, index);
  const ReferencePair pair = resolve_pair(o, index.get(), *decoder);
  const auto train = training_index(o);
  const FragScores frag = load_fragscores(o);
  const ChemistryTables tables = ChemistryTables::load(o.data_dir);
  const auto baseline = load_baseline(o);

  RunOutput out = run_pipeline(pair, *decoder, bridge_config(o, 5000), train, tables, frag,
                               baseline ? &*baseline : nullptr, o.baseline_name);
  out.report.timing.wall_clock_s = std::chrono::duration<double>(Clock::now() - started).count();
  write_run_outputs(o.out, out);
  const StageCounts &c = out.report.counts;
  std::cerr << "total " << c.total << ", valid " << c.valid << ", unique " << c.unique
            << ", novel " << c.novel << ", pc " << c.pc << ", nbm " << c.nbm << " -> " << o.out
            << '\n';
  return kExitOk;
}

int cmd_report(const Options &o, Clock::time_point started) {
  if (o.out.empty())
    throw UsageError("--out directory is required");
  const GenerationSet set = read_generation_set(fs::path(o.records));
  const auto specs = load_reference_pairs(fs::path(o.data_dir) / "reference_pairs.tsv");
  const ReferencePair pair = make_reference_pair(find_reference_pair(specs, o.pair), nullptr, o.bits);
  const auto train = training_index(o);
  const FragScores frag = load_fragscores(o);
  const ChemistryTables tables = ChemistryTables::load(o.data_dir);
  const auto baseline = load_baseline(o);

  const ChemistryProbe probe(pair, tables.descriptors, tables.qed, frag);
  RunOutput out;
  out.generation = set;
  out.records = filter_cascade(set, train, probe, {.pc = {}, .threads = o.threads});
  // Without the original run's clock, the summed batch times stand in for
  // the decode wall clock.
  std::int64_t micros = 0;
  int max_grid = -1;
  int max_perturb = -1;
  for (const GeneratedCandidate &c : set) {
    micros += c.decode_micros;
    max_grid = std::max(max_grid, c.grid_index);
    max_perturb = std::max(max_perturb, c.perturb_index);
  }
  RunMeta meta{pair.class_name, o.decoder, o.latent_dim, o.sigma, o.seed, max_grid + 1,
               max_perturb + 1};
  out.report = kpi_report(out.records, meta, {.decode_wall_s = micros / 1e6},
                          baseline ? &*baseline : nullptr, o.baseline_name);
  out.report.timing.wall_clock_s = std::chrono::duration<double>(Clock::now() - started).count();
  fs::create_directories(o.out);
  write_run_outputs(o.out, out);
  return kExitOk;
}

int cmd_eval(const Options &o) {
  std::vector<std::string> targets;
  std::vector<DecodeResult> decoded;
  if (!o.recon.empty()) {
    std::ifstream in(o.recon);
    if (!in)
      throw IoError("cannot open " + o.recon);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line.front() == '#')
        continue;
      const auto tab = line.find('\t');
      targets.push_back(line.substr(0, tab));
      if (tab == std::string::npos || tab + 1 == line.size())
        decoded.emplace_back(std::nullopt);
      else
        decoded.emplace_back(line.substr(tab + 1));
    }
  } else {
    std::shared_ptr<const LatentIndex> index;
    auto decoder = make_decoder(o, index);
    if (!index)
      throw UsageError("eval through a decoder needs --index for the reference encoder");
    std::vector<LatentVector> zs;
    for (const CorpusRecord &rec : read_corpus(fs::path(o.corpus))) {
      const Molecule mol = parse_smiles(rec.smiles, {.max_length = std::numeric_limits<std::size_t>::max()});
      targets.push_back(rec.smiles);
      zs.push_back(index->encode(morgan_fingerprint(mol, kDefaultFingerprintRadius, index->d_fp())));
    }
    decoded = decoder->decode_batch(zs);
  }
  const EvalMetrics m = evaluate_reconstruction(targets, decoded, o.bits);
  write_json(o.out, {{"n", m.n},
                     {"token_accuracy", m.token_accuracy},
                     {"molecule_accuracy", m.molecule_accuracy},
                     {"tanimoto_accuracy", m.tanimoto_accuracy},
                     {"validity", m.validity}});
  return kExitOk;
}

int cmd_serve(const Options &o) {
  auto index = load_index(o);
  ReferenceDecoder decoder(index);
  ServeOptions opts{.reverse = o.reverse};
  if (!o.unix_path.empty())
    serve_unix(o.unix_path, decoder, opts);
  else
    serve_decoder(STDIN_FILENO, STDOUT_FILENO, decoder, opts);
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  const auto started = Clock::now();
  Options o;
  CLI::App app{"mgbench: molecular generation benchmark toolkit"};
  app.set_config("--config", "", "key=value config file; [subcommand] sections apply to that "
                                 "subcommand, command-line flags take precedence");
  app.option_defaults()->always_capture_default();
  app.add_option("--data-dir", o.data_dir, "Directory with the bundled data tables");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  app.require_subcommand(1);

  auto *prep = app.add_subcommand("prep", "Clean a raw corpus and split it into train/test");
  prep->add_option("--in", o.input, "Raw corpus (SMILES[<TAB>id] per line)")->required();
  prep->add_option("--train-out", o.train_out, "Cleaned training split")->required();
  prep->add_option("--test-out", o.test_out, "Cleaned test split")->required();
  prep->add_option("--min-length", o.min_length, "Shortest canonical SMILES kept");
  prep->add_option("--max-length", o.max_length, "Longest canonical SMILES kept");
  prep->add_option("--train-fraction", o.train_fraction)->check(CLI::Range(0.0, 1.0));
  prep->add_option("--seed", o.seed, "Split shuffle seed");

  auto *fp = app.add_subcommand("fp", "Fingerprint a corpus into an MFP1 store");
  fp->add_option("--corpus", o.corpus)->required();
  fp->add_option("--out", o.out)->required();
  fp->add_option("--bits", o.bits);
  fp->add_option("--radius", o.radius);

  auto *frag = app.add_subcommand("fragscores", "Build the SAS fragment table from a corpus");
  frag->add_option("--corpus", o.corpus)->required();
  frag->add_option("--out", o.out)->required();

  auto *idx = app.add_subcommand("index", "Build a reference-decoder latent index");
  idx->add_option("--corpus", o.corpus)->required();
  idx->add_option("--out", o.out)->required();
  idx->add_option("--seed", o.seed, "Projection seed");
  idx->add_option("--latent-dim", o.latent_dim);
  idx->add_option("--bits", o.bits);

  auto add_bridge_options = [&](CLI::App *cmd) {
    cmd->add_option("--pair", o.pair, "Reference pair: class name or A/B target names");
    cmd->add_option("--decoder", o.decoder, "reference | proto:<unix:path|exec:command|path>");
    cmd->add_option("--index", o.index, "Latent index (reference decoder and pair encoding)");
    cmd->add_option("--training", o.training, "Training corpus for the novelty check")->required();
    cmd->add_option("--pair-latents", o.pair_latents,
                    "Two lines of whitespace-separated reals: latents of targets A and B");
    cmd->add_option("--grid", o.grid, "Grid points along the SLERP path");
    cmd->add_option("--perturb", o.perturb, "Perturbations per grid point");
    cmd->add_option("--seed", o.seed, "Run seed");
    cmd->add_flag("--exclude-endpoints", o.exclude_endpoints, "Use interior grid points only");
    cmd->add_option("--pool", o.pool, "Protocol connections")->check(CLI::PositiveNumber);
    cmd->add_option("--timeout-ms", o.timeout_ms, "Protocol batch timeout");
    cmd->add_option("--max-batch", o.max_batch, "Vectors per decode call");
  };

  auto *scan = app.add_subcommand("scan", "Coarse noise scan over sigma values");
  add_bridge_options(scan);
  scan->add_option("--sigmas", o.sigmas, "Sigma values to scan")->delimiter(',');
  scan->add_option("--out", o.out, "Scan JSON (default stdout)");

  auto *run = app.add_subcommand("run", "Production bridge run with filters and report");
  add_bridge_options(run);
  run->add_option("--sigma", o.sigma, "Perturbation sigma")->check(CLI::NonNegativeNumber);
  run->add_option("--fragscores", o.fragscores, "SAS fragment table (default: built from --training)");
  run->add_option("--baseline", o.baseline, "report.json of a baseline run");
  run->add_option("--baseline-name", o.baseline_name);
  run->add_flag("--no-timing", o.no_timing, "Write decode_micros as 0");
  run->add_option("--out", o.out, "Output directory")->required();

  auto *report = app.add_subcommand("report", "Filter a GenerationSet file and write the report");
  report->add_option("--records", o.records, "generation.tsv")->required();
  report->add_option("--pair", o.pair);
  report->add_option("--training", o.training)->required();
  report->add_option("--fragscores", o.fragscores);
  report->add_option("--baseline", o.baseline);
  report->add_option("--baseline-name", o.baseline_name);
  report->add_option("--decoder", o.decoder, "Decoder name recorded in the report");
  report->add_option("--latent-dim", o.latent_dim, "Latent dimension recorded in the report");
  report->add_option("--sigma", o.sigma, "Sigma recorded in the report");
  report->add_option("--seed", o.seed, "Seed recorded in the report");
  report->add_option("--out", o.out, "Output directory")->required();

  auto *eval = app.add_subcommand("eval", "Reconstruction metrics");
  eval->add_option("--recon", o.recon, "TSV of target<TAB>decoded SMILES");
  eval->add_option("--corpus", o.corpus, "Targets to encode and decode (with --decoder)");
  eval->add_option("--decoder", o.decoder);
  eval->add_option("--index", o.index);
  eval->add_option("--pool", o.pool);
  eval->add_option("--timeout-ms", o.timeout_ms);
  eval->add_option("--out", o.out, "Metrics JSON (default stdout)");

  auto *serve = app.add_subcommand("serve", "Serve the reference decoder over the wire protocol");
  serve->add_option("--index", o.index)->required();
  serve->add_option("--unix", o.unix_path, "Listen on this unix socket instead of stdio");
  serve->add_flag("--reverse", o.reverse, "Answer each batch in reverse order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*prep) return cmd_prep(o);
    if (*fp) return cmd_fp(o);
    if (*frag) return cmd_fragscores(o);
    if (*idx) return cmd_index(o);
    if (*scan) return cmd_scan(o);
    if (*run) return cmd_run(o, started);
    if (*report) return cmd_report(o, started);
    if (*eval) {
      if (o.recon.empty() && o.corpus.empty())
        throw UsageError("eval needs --recon or --corpus");
      return cmd_eval(o);
    }
    if (*serve) return cmd_serve(o);
  } catch (const DecoderTransportError &e) {
    std::cerr << "mgbench: decoder transport error: " << e.what() << '\n';
    return kExitTransport;
  } catch (const UsageError &e) {
    std::cerr << "mgbench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "mgbench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "mgbench: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
