#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>

#include "mgbench/decoder/reference_decoder.h"
#include "mgbench/fingerprint/morgan.h"
#include "mgbench/harness/cascade.h"
#include "mgbench/harness/evaluation.h"
#include "mgbench/harness/pipeline.h"
#include "mgbench/harness/prep.h"
#include "mgbench/harness/reference_pair.h"
#include "mgbench/harness/report.h"
#include "mgbench/molgraph/smiles.h"
#include "mgbench/scaffold/scaffold.h"

namespace mgb {
namespace {

namespace fs = std::filesystem;

const fs::path kData = MGB_DEFAULT_DATA_DIR;

std::vector<CorpusRecord> lines(std::initializer_list<const char *> smiles) {
  std::vector<CorpusRecord> out;
  std::size_t n = 0;
  for (const char *s : smiles)
    out.push_back({s, "", ++n});
  return out;
}

// --- prep --------------------------------------------------------------------

TEST(Prep, StripsStereo) {
  const auto r = prep_dataset(lines({"C/C=C\\C"}), {.min_length = 0, .max_length = 200,
                                                    .train_fraction = 1.0, .seed = 0});
  ASSERT_EQ(r.train.size(), 1u);
  EXPECT_EQ(r.train[0].smiles, "CC=CC");
}

TEST(Prep, RejectsLongLines) {
  std::string long_chain(250, 'C');
  const auto raw = lines({long_chain.c_str(), "CCOc1ccccc1C(=O)O"});
  const auto r = prep_dataset(raw);
  EXPECT_EQ(r.stats.rejected.at("length"), 1u);
  EXPECT_EQ(r.stats.kept, 1u);
}

TEST(Prep, CollapsesDuplicates) {
  const auto r = prep_dataset(lines({"CCOc1ccccc1C(=O)O", "OC(=O)c1ccccc1OCC", "CCOc1ccccc1C(=O)O.[Na+]"}));
  EXPECT_EQ(r.stats.kept, 1u);
  EXPECT_EQ(r.stats.rejected.at("duplicate"), 2u);
}

TEST(Prep, CountsParseFailures) {
  const auto r = prep_dataset(lines({"C1CCCCCCCCCC", "c1ccccc1CCCCCCCCCC", "Xx"}));
  EXPECT_EQ(r.stats.rejected.at("parse"), 2u);
  EXPECT_EQ(r.stats.lines, 3u);
}

TEST(Prep, SeededNinetyTenSplit) {
  const auto raw = read_corpus(kData / "corpus_1k.smi");
  const PrepResult a = prep_dataset(raw, {.seed = 5});
  const PrepResult b = prep_dataset(raw, {.seed = 5});
  const PrepResult c = prep_dataset(raw, {.seed = 6});
  EXPECT_EQ(a.train.size() + a.test.size(), a.stats.kept);
  EXPECT_EQ(a.train.size(), static_cast<std::size_t>(std::floor(0.9 * a.stats.kept + 0.5)));
  ASSERT_EQ(a.test.size(), b.test.size());
  for (std::size_t i = 0; i < a.test.size(); ++i)
    EXPECT_EQ(a.test[i].smiles, b.test[i].smiles);
  bool differs = false;
  for (std::size_t i = 0; i < a.test.size() && i < c.test.size(); ++i)
    differs = differs || a.test[i].smiles != c.test[i].smiles;
  EXPECT_TRUE(differs);
  for (std::size_t i = 1; i < a.train.size(); ++i)
    EXPECT_LT(a.train[i - 1].line, a.train[i].line);
}

// --- reference pairs ---------------------------------------------------------

TEST(ReferencePairs, FourBundledPairs) {
  const auto specs = load_reference_pairs(kData / "reference_pairs.tsv");
  ASSERT_EQ(specs.size(), 4u);
  const Projection proj(1, kDefaultFingerprintBits, 16);
  for (const ReferencePairSpec &spec : specs) {
    const ReferencePair pair = make_reference_pair(spec, &proj);
    EXPECT_NE(pair.a.canonical, pair.b.canonical);
    EXPECT_EQ(pair.a.latent.size(), 16u);
    EXPECT_TRUE(pair.a.generic_scaffold.has_value());
  }
  EXPECT_EQ(find_reference_pair(specs, "egfr").name_a, "Gefitinib");
  EXPECT_EQ(find_reference_pair(specs, "Pazopanib/Sunitinib").class_name, "VEGFR");
  EXPECT_THROW(find_reference_pair(specs, "nope"), std::invalid_argument);
}

TEST(ReferencePairs, IdenticalTargetsRejected) {
  EXPECT_THROW(make_reference_pair({"X", "a", "CCO", "b", "OCC"}, nullptr), std::invalid_argument);
}

// --- cascade -----------------------------------------------------------------

// Properties looked up by canonical SMILES; unknown forms get defaults that
// pass every filter.
class TableProbe: public PropertyProbe {
public:
  std::map<std::string, MoleculeProperties> table;
  MoleculeProperties evaluate(const std::string &canonical) const override {
    const auto it = table.find(canonical);
    if (it != table.end())
      return it->second;
    return {.qed = 0.7, .sas = 2.0, .rds = 0.0, .rds_clamped = false, .novel_scaffold = true};
  }
};

GeneratedCandidate candidate(int g, int p, const std::string &raw) {
  GeneratedCandidate c;
  c.grid_index = g;
  c.perturb_index = p;
  c.raw_smiles = raw;
  if (auto canonical = canonical_if_valid(raw)) {
    c.valid = true;
    c.canonical = *canonical;
  }
  return c;
}

StageCounts tally(const std::vector<GenerationRecord> &records) {
  return kpi_report(records, {}, {}).counts;
}

TEST(Cascade, HandTalliedTenRecords) {
  TableProbe probe;
  probe.table["CCN"] = {.qed = 0.2, .sas = 2.0, .rds = 0.1, .rds_clamped = false, .novel_scaffold = true};
  probe.table["CCS"] = {.qed = 0.6, .sas = 4.5, .rds = 0.1, .rds_clamped = false, .novel_scaffold = true};
  probe.table["CCCl"] = {.qed = 0.6, .sas = 3.0, .rds = 0.1, .rds_clamped = false, .novel_scaffold = false};
  const GenerationSet set{
      candidate(0, 0, "CCO"),   // valid unique novel pc nbm
      candidate(0, 1, "OCC"),   // duplicate of CCO
      candidate(0, 2, "C1CC"),  // invalid
      candidate(0, 3, "CCC"),   // in training set
      candidate(1, 0, "CCN"),   // fails QED
      candidate(1, 1, "CCS"),   // fails SAS
      candidate(1, 2, "CCCl"),  // scaffold not novel
      candidate(1, 3, ""),      // decoder failure
      candidate(2, 0, "CCBr"),  // valid unique novel pc nbm
      candidate(2, 1, "NCC"),   // duplicate of CCN
  };
  const auto records = filter_cascade(set, {"CCC"}, probe, {.pc = {}, .threads = 2});
  EXPECT_EQ(tally(records), (StageCounts{10, 8, 6, 5, 3, 2}));
  EXPECT_TRUE(records[0].nbm_pass);
  EXPECT_FALSE(records[1].unique_first);
  EXPECT_TRUE(std::isnan(records[1].qed));
  EXPECT_FALSE(records[3].novel);
  EXPECT_FALSE(records[4].pc_pass);
  EXPECT_TRUE(records[6].pc_pass);
  EXPECT_FALSE(records[6].nbm_pass);
  EXPECT_TRUE(records[8].nbm_pass);
}

TEST(Cascade, PcThresholdsAreInclusive) {
  TableProbe probe;
  probe.table["CCO"] = {.qed = 0.4, .sas = 4.0, .rds = 0.0, .rds_clamped = false, .novel_scaffold = true};
  const auto records = filter_cascade({candidate(0, 0, "CCO")}, {}, probe);
  EXPECT_TRUE(records[0].pc_pass);
}

TEST(Cascade, NoveltyAgainstHalfIndex) {
  const auto corpus = read_corpus(kData / "corpus_1k.smi");
  GenerationSet set;
  std::unordered_set<std::string> index;
  for (std::size_t i = 0; i < 200; ++i) {
    set.push_back(candidate(0, static_cast<int>(i), corpus[i].smiles));
    if (i % 2 == 0)
      index.insert(set.back().canonical);
  }
  TableProbe probe;
  const auto records = filter_cascade(set, index, probe);
  EXPECT_EQ(tally(records).novel, 100);
}

TEST(Cascade, MonotoneOnAdversarialInput) {
  std::mt19937_64 rng(31);
  const std::vector<std::string> pool{"CCO", "OCC", "C1CC", "", "c1ccccc1", "CCN", "C(", "CCCC", "NCC"};
  TableProbe probe;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const char *s : {"CCO", "c1ccccc1", "CCN", "CCCC"})
    probe.table[canonicalize(s)] = {.qed = u(rng), .sas = 1.0 + 9.0 * u(rng), .rds = 0.0,
                                    .rds_clamped = false, .novel_scaffold = u(rng) < 0.5};
  for (int trial = 0; trial < 200; ++trial) {
    GenerationSet set;
    const int n = static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i)
      set.push_back(candidate(i, 0, pool[rng() % pool.size()]));
    std::unordered_set<std::string> index;
    if (rng() % 2)
      index.insert("CCO");
    const StageCounts c = tally(filter_cascade(set, index, probe));
    ASSERT_EQ(c.total, n);
    ASSERT_GE(c.total, c.valid);
    ASSERT_GE(c.valid, c.unique);
    ASSERT_GE(c.unique, c.novel);
    ASSERT_GE(c.novel, c.pc);
    ASSERT_GE(c.pc, c.nbm);
  }
}

class ChemistryFixture: public ::testing::Test {
protected:
  static void SetUpTestSuite() {
    tables_ = new ChemistryTables(ChemistryTables::load(kData));
    std::vector<Molecule> mols;
    for (const CorpusRecord &rec : read_corpus(kData / "corpus_1k.smi"))
      mols.push_back(parse_smiles(rec.smiles));
    frag_ = new FragScores(FragScores::build(mols));
    const auto specs = load_reference_pairs(kData / "reference_pairs.tsv");
    pair_ = new ReferencePair(make_reference_pair(find_reference_pair(specs, "NSAID"), nullptr));
  }
  static ChemistryTables *tables_;
  static FragScores *frag_;
  static ReferencePair *pair_;
};
ChemistryTables *ChemistryFixture::tables_ = nullptr;
FragScores *ChemistryFixture::frag_ = nullptr;
ReferencePair *ChemistryFixture::pair_ = nullptr;

TEST_F(ChemistryFixture, TargetItselfIsNotNovel) {
  const ChemistryProbe probe(*pair_, tables_->descriptors, tables_->qed, *frag_);
  const GenerationSet set{candidate(0, 0, "CC(C)Cc1ccc(cc1)C(C)C(=O)O")};
  const auto records = filter_cascade(set, {pair_->a.canonical}, probe);
  EXPECT_TRUE(records[0].valid);
  EXPECT_TRUE(records[0].unique_first);
  EXPECT_FALSE(records[0].novel);
  EXPECT_FALSE(records[0].nbm_pass);
  EXPECT_NEAR(records[0].rds, -1.0, 1e-12);
}

TEST_F(ChemistryFixture, ScaffoldOfTargetFailsNbmEvenWhenNovel) {
  const ChemistryProbe probe(*pair_, tables_->descriptors, tables_->qed, *frag_);
  EXPECT_FALSE(probe.evaluate(pair_->a.canonical).novel_scaffold);
  EXPECT_FALSE(probe.evaluate(canonicalize("CCCCc1ccc(cc1)C(C)C(=O)O")).novel_scaffold);
  EXPECT_TRUE(probe.evaluate(canonicalize("O=C(O)C1CCN(CC1)c1ncccn1")).novel_scaffold);
  EXPECT_FALSE(probe.evaluate("CCCCCCO").novel_scaffold);
}

TEST_F(ChemistryFixture, InvalidDecodeCarriesNoVerdicts) {
  const ChemistryProbe probe(*pair_, tables_->descriptors, tables_->qed, *frag_);
  const auto records = filter_cascade({candidate(0, 0, "C1CC")}, {}, probe);
  EXPECT_FALSE(records[0].valid);
  EXPECT_FALSE(records[0].unique_first);
  EXPECT_FALSE(records[0].novel);
  EXPECT_FALSE(records[0].pc_pass);
  EXPECT_FALSE(records[0].nbm_pass);
}

// --- report ------------------------------------------------------------------

GenerationRecord flagged(double t, int p, bool unique, bool novel, bool pc, bool nbm, double qed,
                         double sas, double rds) {
  GenerationRecord r;
  r.t = t;
  r.perturb_index = p;
  r.valid = true;
  r.canonical = "C" + std::to_string(p);
  r.unique_first = unique;
  r.novel = novel;
  r.pc_pass = pc;
  r.nbm_pass = nbm;
  if (unique) {
    r.qed = qed;
    r.sas = sas;
    r.rds = rds;
  }
  return r;
}

TEST(Report, EmptyRecordSet) {
  const RunReport r = kpi_report({}, {}, {.decode_wall_s = 1.0, .wall_clock_s = 2.0});
  EXPECT_EQ(r.counts, StageCounts{});
  EXPECT_EQ(r.rates().nbm, 0.0);
  for (auto c : r.rds_histogram)
    EXPECT_EQ(c, 0);
  EXPECT_EQ(r.qed.mean, 0.0);
}

TEST(Report, HandTally) {
  std::vector<GenerationRecord> recs{
      flagged(0.0, 0, true, true, true, true, 0.5, 2.0, -1.0),
      flagged(0.0, 1, true, true, true, false, 0.7, 3.0, -0.25),
      flagged(0.5, 0, true, true, false, false, 0.3, 5.0, 0.25),
      flagged(0.5, 1, true, false, false, false, 0.9, 2.0, 1.0),
      flagged(1.0, 0, false, false, false, false, 0, 0, 0),
  };
  GenerationRecord invalid;
  recs.push_back(invalid);
  const RunReport r = kpi_report(recs, {}, {.decode_wall_s = 2.0, .wall_clock_s = 0.0});
  EXPECT_EQ(r.counts, (StageCounts{6, 5, 4, 3, 2, 1}));
  EXPECT_DOUBLE_EQ(r.qed.mean, 0.6);
  EXPECT_DOUBLE_EQ(r.sas.mean, 3.0);
  EXPECT_NEAR(r.sas.stddev, std::sqrt(6.0 / 3.0), 1e-12);
  EXPECT_EQ(r.rds_core, 2);
  EXPECT_EQ(r.rds_histogram[0], 1);
  EXPECT_EQ(r.rds_histogram[15], 1);
  EXPECT_EQ(r.rds_histogram[25], 1);
  EXPECT_EQ(r.rds_histogram[39], 1);
  EXPECT_DOUBLE_EQ(r.rates().total, 3.0);
  EXPECT_DOUBLE_EQ(r.rates().nbm, 0.5);
  EXPECT_DOUBLE_EQ(r.novelty_fraction, 0.75);
}

TEST(Report, HistogramBins) {
  EXPECT_EQ(rds_bin(-1.0), 0);
  EXPECT_EQ(rds_bin(-0.95), 1);
  EXPECT_EQ(rds_bin(-0.9500001), 0);
  EXPECT_EQ(rds_bin(0.0), 20);
  EXPECT_EQ(rds_bin(0.999), 39);
  EXPECT_EQ(rds_bin(1.0), 39);
  std::ostringstream out;
  write_rds_histogram_csv(out, RunReport{});
  std::istringstream in(out.str());
  std::string line;
  int rows = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "bin,lower,upper,count");
  while (std::getline(in, line))
    ++rows;
  EXPECT_EQ(rows, 40);
  EXPECT_NE(out.str().find("\n0,-1.000000,-0.950000,0\n"), std::string::npos);
}

TEST(Report, BaselineSelfHasZeroDeltaSas) {
  const std::vector<GenerationRecord> recs{flagged(0.0, 0, true, true, true, true, 0.5, 2.5, 0.0)};
  const RunReport base = kpi_report(recs, {.pair = "NSAID"}, {.decode_wall_s = 1.0});
  const RunReport r = kpi_report(recs, {.pair = "NSAID"}, {.decode_wall_s = 0.5}, &base, "self");
  ASSERT_TRUE(r.baseline);
  EXPECT_EQ(r.baseline->delta_sas, 0.0);
  EXPECT_DOUBLE_EQ(*r.baseline->efficiency_ratio, 2.0);
  EXPECT_EQ(r.baseline->name, "self");
}

TEST(Report, BaselineMismatchRejected) {
  const RunReport base = kpi_report({}, {.pair = "EGFR"}, {});
  EXPECT_THROW(kpi_report({}, {.pair = "NSAID"}, {}, &base), ReportError);
  const RunReport dim = kpi_report({}, {.pair = "NSAID", .latent_dim = 64}, {});
  EXPECT_THROW(kpi_report({}, {.pair = "NSAID", .latent_dim = 150}, {}, &dim), ReportError);
}

TEST(Report, JsonRoundTripAndTimingIsolation) {
  const std::vector<GenerationRecord> recs{flagged(0.0, 0, true, true, true, true, 0.5, 2.5, 0.1),
                                           flagged(0.5, 0, true, true, false, false, 0.2, 6.0, -0.7)};
  const RunMeta meta{"NSAID", "reference", 150, 0.1, 7, 2, 1};
  const RunReport base = kpi_report(recs, meta, {.decode_wall_s = 3.0});
  const RunReport a = kpi_report(recs, meta, {.decode_wall_s = 1.0, .wall_clock_s = 2.0}, &base);
  const RunReport b = kpi_report(recs, meta, {.decode_wall_s = 9.0, .wall_clock_s = 9.5}, &base);
  nlohmann::json ja = report_to_json(a);
  nlohmann::json jb = report_to_json(b);
  EXPECT_NE(ja, jb);
  ja.erase("timing");
  jb.erase("timing");
  EXPECT_EQ(ja.dump(), jb.dump());

  const RunReport back = report_from_json(report_to_json(a));
  EXPECT_EQ(report_to_json(back).dump(), report_to_json(a).dump());
  EXPECT_THROW(report_from_json(nlohmann::json::object()), ReportError);
}

TEST(Report, ScatterRowsSortedByTThenPerturbation) {
  std::vector<GenerationRecord> recs{flagged(0.5, 1, true, true, true, true, 0.5, 2.5, 0.0),
                                     flagged(0.0, 2, true, true, true, true, 0.6, 2.5, 0.0),
                                     flagged(0.5, 0, true, true, true, true, 0.7, 2.5, 0.0),
                                     flagged(0.0, 3, false, false, false, false, 0, 0, 0)};
  std::ostringstream out;
  write_scatter_csv(out, recs);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> rows;
  std::getline(in, line);
  while (std::getline(in, line))
    rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].substr(0, 6), "0,2,0,");
  EXPECT_EQ(rows[1].substr(0, 8), "0,0,0.5,");
  EXPECT_EQ(rows[2].substr(0, 8), "0,1,0.5,");
}

// --- evaluation --------------------------------------------------------------

TEST(Evaluation, PerfectCopyScoresOne) {
  const std::vector<std::string> targets{"CCO", "c1ccccc1N", "CC(=O)Nc1ccc(O)cc1"};
  const std::vector<DecodeResult> decoded(targets.begin(), targets.end());
  const EvalMetrics m = evaluate_reconstruction(targets, decoded);
  EXPECT_EQ(m.token_accuracy, 1.0);
  EXPECT_EQ(m.molecule_accuracy, 1.0);
  EXPECT_EQ(m.tanimoto_accuracy, 1.0);
  EXPECT_EQ(m.validity, 1.0);
}

TEST(Evaluation, FailuresScoreZeroAndStayInRange) {
  const std::vector<std::string> targets{"CCO", "CCN"};
  const std::vector<DecodeResult> decoded{std::nullopt, std::string("C1CC")};
  const EvalMetrics m = evaluate_reconstruction(targets, decoded);
  EXPECT_EQ(m.molecule_accuracy, 0.0);
  EXPECT_EQ(m.tanimoto_accuracy, 0.0);
  EXPECT_EQ(m.validity, 0.0);
  EXPECT_GE(m.token_accuracy, 0.0);
  EXPECT_LE(m.token_accuracy, 1.0);
}

TEST(Evaluation, RandomDecoderRarelyReconstructs) {
  const auto corpus = read_corpus(kData / "corpus_1k.smi");
  std::vector<std::string> targets;
  std::vector<DecodeResult> decoded;
  for (std::size_t i = 0; i < 200; ++i) {
    targets.push_back(corpus[i].smiles);
    decoded.emplace_back(corpus[(i * 7919 + 13) % corpus.size()].smiles);
  }
  const EvalMetrics m = evaluate_reconstruction(targets, decoded);
  EXPECT_LT(m.molecule_accuracy, 0.02);
  EXPECT_LT(m.tanimoto_accuracy, 0.5);
  EXPECT_EQ(m.validity, 1.0);
}

TEST(Evaluation, TokenAccuracyCountsEndMarker) {
  // Target CCO: positions C, C, O, <end>. "CCN" matches two of four.
  const std::vector<std::string> targets{"CCO"};
  const std::vector<DecodeResult> decoded{std::string("CCN")};
  EXPECT_DOUBLE_EQ(evaluate_reconstruction(targets, decoded).token_accuracy, 0.75);
  const std::vector<DecodeResult> longer{std::string("CCOC")};
  EXPECT_DOUBLE_EQ(evaluate_reconstruction(targets, longer).token_accuracy, 0.75);
}

}  // namespace
}  // namespace mgb
