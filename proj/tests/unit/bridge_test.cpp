#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "mgbench/bridge/bridge.h"
#include "mgbench/molgraph/corpus.h"
#include "test_decoders.h"

namespace mgb {
namespace {

using testing::ConstantDecoder;
using testing::DistinctVectorDecoder;
using testing::FailingDecoder;

LatentVector unit(int dim, int axis) {
  LatentVector v(dim, 0.0);
  v[axis] = 1.0;
  return v;
}

double norm(const LatentVector &v) {
  double s = 0.0;
  for (double x : v)
    s += x * x;
  return std::sqrt(s);
}

TEST(Slerp, EndpointsAreExact) {
  const LatentVector a{0.3, -0.7, 0.2};
  const LatentVector b{-0.1, 0.4, 0.9};
  EXPECT_EQ(slerp(a, b, 0.0), a);
  EXPECT_EQ(slerp(a, b, 1.0), b);
}

TEST(Slerp, OrthonormalMidpoint) {
  const LatentVector mid = slerp(unit(4, 0), unit(4, 2), 0.5);
  EXPECT_NEAR(mid[0], 1.0 / std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(mid[2], 1.0 / std::numbers::sqrt2, 1e-12);
  EXPECT_EQ(mid[1], 0.0);
  EXPECT_EQ(mid[3], 0.0);
}

TEST(Slerp, ParallelVectorsFallBackToLinear) {
  const LatentVector a{0.5, 0.5};
  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    const LatentVector v = slerp(a, a, t);
    EXPECT_DOUBLE_EQ(v[0], 0.5);
    EXPECT_DOUBLE_EQ(v[1], 0.5);
  }
}

TEST(Slerp, Errors) {
  EXPECT_THROW(slerp({0.0, 0.0}, {1.0, 0.0}, 0.5), LatentError);
  EXPECT_THROW(slerp({1.0, 0.0}, {1.0, 0.0, 0.0}, 0.5), LatentError);
  EXPECT_THROW(slerp({1.0, 0.0}, {0.0, 1.0}, 1.5), LatentError);
  try {
    slerp({1.0, 0.0}, {-2.0, 0.0}, 0.5);
    FAIL() << "antipodal pair accepted";
  } catch (const LatentError &e) {
    EXPECT_STREQ(e.what(), "undefined great-circle");
  }
}

TEST(Slerp, NormIsContinuous) {
  const LatentVector a = unit(3, 0);
  const LatentVector b{0.0, 0.6, 0.8};
  double diff = 0.0;
  for (int i = 0; i < 3; ++i)
    diff += (a[i] - b[i]) * (a[i] - b[i]);
  const double bound = 10.0 * std::sqrt(diff) / 1000.0;
  double prev = norm(slerp(a, b, 0.0));
  for (int k = 1; k <= 1000; ++k) {
    const double cur = norm(slerp(a, b, k / 1000.0));
    EXPECT_LT(std::abs(cur - prev), bound);
    prev = cur;
  }
}

TEST(BridgeGrid, TwoPointsAreTheEndpoints) {
  const LatentVector a{1.0, 0.0};
  const LatentVector b{0.0, 1.0};
  const auto g = bridge_grid(a, b, 2);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], a);
  EXPECT_EQ(g[1], b);
}

TEST(BridgeGrid, HundredPoints) {
  const LatentVector a{0.2, 0.9, -0.1};
  const LatentVector b{0.7, -0.3, 0.5};
  const auto g = bridge_grid(a, b, 100);
  ASSERT_EQ(g.size(), 100u);
  EXPECT_EQ(g.front(), a);
  EXPECT_EQ(g.back(), b);
}

TEST(BridgeGrid, ThreePointMiddle) {
  const auto g = bridge_grid(unit(2, 0), unit(2, 1), 3);
  EXPECT_NEAR(g[1][0], 1.0 / std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(g[1][1], 1.0 / std::numbers::sqrt2, 1e-12);
}

TEST(BridgeGrid, Positions) {
  EXPECT_EQ(grid_positions(5), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(grid_positions(3, false), (std::vector<double>{0.25, 0.5, 0.75}));
  EXPECT_THROW(grid_positions(1), LatentError);
}

TEST(Perturb, ZeroSigmaIsIdentity) {
  std::mt19937_64 rng(1);
  const LatentVector v{0.1, -0.2, 0.3};
  EXPECT_EQ(perturb(v, 0.0, rng), v);
}

TEST(Perturb, NegativeSigmaRejected) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(perturb({0.0}, -0.1, rng), LatentError);
}

TEST(Perturb, MomentsMatchSigma) {
  constexpr int kDraws = 100000;
  constexpr double kSigma = 0.2;
  std::mt19937_64 rng(42);
  const LatentVector zero(3, 0.0);
  std::vector<double> sum(3, 0.0), sum_sq(3, 0.0);
  for (int i = 0; i < kDraws; ++i) {
    const LatentVector v = perturb(zero, kSigma, rng);
    for (int j = 0; j < 3; ++j) {
      sum[j] += v[j];
      sum_sq[j] += v[j] * v[j];
    }
  }
  for (int j = 0; j < 3; ++j) {
    const double mean = sum[j] / kDraws;
    const double sd = std::sqrt(sum_sq[j] / kDraws - mean * mean);
    EXPECT_LT(std::abs(mean), 4.0 * kSigma / std::sqrt(kDraws));
    EXPECT_NEAR(sd, kSigma, 0.05 * kSigma);
  }
}

TEST(Perturb, NoClamping) {
  std::mt19937_64 rng(5);
  const LatentVector v(200, 0.99);
  const LatentVector p = perturb(v, 0.5, rng);
  EXPECT_GT(*std::max_element(p.begin(), p.end()), 1.0);
}

TEST(CandidateSeed, DistinctAcrossCoordinates) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t g = 0; g < 50; ++g)
    for (std::uint64_t p = 0; p < 50; ++p)
      seeds.insert(candidate_seed(9, g, p));
  EXPECT_EQ(seeds.size(), 2500u);
  EXPECT_NE(candidate_seed(1, 0, 0), candidate_seed(2, 0, 0));
  EXPECT_NE(candidate_seed(0, 1, 2), candidate_seed(0, 2, 1));
}

TEST(BridgeRun, DeskScaleCount) {
  ConstantDecoder dec(8);
  BridgeConfig cfg;
  cfg.n_grid = 20;
  cfg.n_perturb = 50;
  const BridgeRun run = bridge_run(unit(8, 0), unit(8, 1), 0.1, dec, cfg);
  EXPECT_EQ(run.records.size(), 1000u);
  EXPECT_EQ(dec.calls.load(), 1000u);
  for (std::size_t i = 0; i < run.records.size(); ++i) {
    EXPECT_EQ(run.records[i].grid_index, static_cast<int>(i / 50));
    EXPECT_EQ(run.records[i].perturb_index, static_cast<int>(i % 50));
  }
  EXPECT_EQ(run.records.front().t, 0.0);
  EXPECT_EQ(run.records.back().t, 1.0);
}

TEST(BridgeRun, ChunkedBatchesKeepOrder) {
  DistinctVectorDecoder dec(4);
  BridgeConfig cfg;
  cfg.n_grid = 3;
  cfg.n_perturb = 7;
  cfg.max_batch = 3;
  cfg.seed = 11;
  const BridgeRun run = bridge_run(unit(4, 0), unit(4, 3), 0.2, dec, cfg);
  ASSERT_EQ(run.records.size(), 21u);
  for (int i = 0; i < 21; ++i)
    EXPECT_EQ(run.records[i].perturb_index, i % 7);
}

// Decodes each vector to the text of its components, so outputs depend only
// on the vector and any reordering shows up.
class PrintingDecoder: public Decoder {
public:
  std::vector<DecodeResult> decode_batch(std::span<const LatentVector> zs) override {
    std::vector<DecodeResult> out;
    for (const LatentVector &z : zs) {
      std::ostringstream s;
      s.precision(17);
      for (double x : z)
        s << x << ' ';
      out.emplace_back(s.str());
    }
    return out;
  }
  int latent_dim() const override { return 3; }
  std::string name() const override { return "printing"; }
};

TEST(BridgeRun, DeterministicAcrossThreadCounts) {
  PrintingDecoder dec;
  BridgeConfig cfg;
  cfg.n_grid = 12;
  cfg.n_perturb = 9;
  cfg.seed = 2024;
  cfg.record_timing = false;
  cfg.max_batch = 4;
  cfg.threads = 1;
  const BridgeRun one = bridge_run({1.0, 0.2, 0.0}, {0.0, 0.3, 1.0}, 0.15, dec, cfg);
  cfg.threads = 3;
  const BridgeRun three = bridge_run({1.0, 0.2, 0.0}, {0.0, 0.3, 1.0}, 0.15, dec, cfg);
  EXPECT_EQ(one.records, three.records);
  cfg.seed = 2025;
  const BridgeRun other = bridge_run({1.0, 0.2, 0.0}, {0.0, 0.3, 1.0}, 0.15, dec, cfg);
  EXPECT_NE(one.records, other.records);
}

TEST(BridgeRun, InvalidDecodesAreFlagged) {
  ConstantDecoder dec(2, "C1CC");
  BridgeConfig cfg;
  cfg.n_grid = 2;
  cfg.n_perturb = 3;
  const BridgeRun run = bridge_run(unit(2, 0), unit(2, 1), 0.0, dec, cfg);
  for (const GeneratedCandidate &c : run.records) {
    EXPECT_EQ(c.raw_smiles, "C1CC");
    EXPECT_FALSE(c.valid);
    EXPECT_TRUE(c.canonical.empty());
  }
}

TEST(BridgeRun, DimensionMismatchRejected) {
  ConstantDecoder dec(5);
  EXPECT_THROW(bridge_run(unit(4, 0), unit(4, 1), 0.0, dec, BridgeConfig{}), LatentError);
}

TEST(BridgeConfig, PaperScaleTotals) {
  EXPECT_EQ(BridgeConfig::coarse().total_candidates(), 10000);
  EXPECT_EQ(BridgeConfig::production().total_candidates(), 500000);
}

TEST(NoiseScan, ConstantDecoderSingleSigma) {
  ConstantDecoder dec(4);
  const double sigmas[] = {0.0};
  const ScanResult r = noise_scan(unit(4, 0), unit(4, 1), sigmas, dec, BridgeConfig::coarse(), {});
  ASSERT_EQ(r.per_sigma.size(), 1u);
  EXPECT_EQ(r.per_sigma[0].total, 10000);
  EXPECT_EQ(dec.calls.load(), 10000u);
  EXPECT_EQ(r.per_sigma[0].valid, 10000);
  EXPECT_EQ(r.per_sigma[0].unique, 1);
  EXPECT_EQ(r.per_sigma[0].novel, 1);
  ASSERT_TRUE(r.sigma_star);
  EXPECT_EQ(*r.sigma_star, 0.0);
}

TEST(NoiseScan, DistinctGridPointsAtZeroSigma) {
  DistinctVectorDecoder dec(4);
  BridgeConfig cfg;
  cfg.n_grid = 25;
  cfg.n_perturb = 4;
  const double sigmas[] = {0.0};
  const ScanResult r = noise_scan(unit(4, 0), unit(4, 1), sigmas, dec, cfg, {});
  EXPECT_EQ(r.per_sigma[0].unique, 25);
}

TEST(NoiseScan, NoveltyAgainstCorpusIndex) {
  ConstantDecoder dec(4, "OCC");
  BridgeConfig cfg;
  cfg.n_grid = 2;
  cfg.n_perturb = 2;
  const double sigmas[] = {0.0, 0.1};
  const ScanResult r = noise_scan(unit(4, 0), unit(4, 1), sigmas, dec, cfg, {"CCO"});
  EXPECT_EQ(r.per_sigma[0].unique, 1);
  EXPECT_EQ(r.per_sigma[0].novel, 0);
  // All-zero novelty ties; the smaller sigma wins.
  EXPECT_EQ(*r.sigma_star, 0.0);
}

TEST(NoiseScan, SigmaStarPrefersMoreNovelThenSmaller) {
  DistinctVectorDecoder dec(3);
  BridgeConfig cfg;
  cfg.n_grid = 4;
  cfg.n_perturb = 5;
  const double sigmas[] = {0.3, 0.0, 0.1};
  const ScanResult r = noise_scan(unit(3, 0), unit(3, 1), sigmas, dec, cfg, {});
  EXPECT_EQ(r.per_sigma[1].unique, 4);
  EXPECT_EQ(r.per_sigma[0].unique, 20);
  EXPECT_EQ(r.per_sigma[2].unique, 20);
  EXPECT_EQ(*r.sigma_star, 0.1);
}

TEST(NoiseScan, TransportFailureAbortsOnlyThatSigma) {
  FailingDecoder dec(3, 150);
  BridgeConfig cfg;
  cfg.n_grid = 10;
  cfg.n_perturb = 10;
  cfg.threads = 1;
  const double sigmas[] = {0.0, 0.1};
  const ScanResult r = noise_scan(unit(3, 0), unit(3, 1), sigmas, dec, cfg, {});
  EXPECT_FALSE(r.per_sigma[0].error);
  ASSERT_TRUE(r.per_sigma[1].error);
  EXPECT_EQ(*r.per_sigma[1].error, "peer vanished");
  EXPECT_EQ(*r.sigma_star, 0.0);
}

TEST(GenerationSetFile, RoundTrip) {
  GenerationSet set{{0, 0, 0.0, "CCO", true, "CCO", 12},
                    {0, 1, 0.0, "C1CC", false, "", 12},
                    {1, 0, 1.0 / 3.0, "", false, "", 0}};
  std::stringstream buf;
  write_generation_set(buf, set);
  EXPECT_EQ(read_generation_set(buf), set);
}

TEST(GenerationSetFile, ColumnLayout) {
  std::ostringstream out;
  write_generation_set(out, {{3, 4, 0.5, "OCC", true, "CCO", 99}});
  EXPECT_EQ(out.str(), "3\t4\t0.5\tOCC\t1\tCCO\t99\n");
}

TEST(GenerationSetFile, RejectsShortLines) {
  std::istringstream in("1\t2\t0.5\tC\n");
  EXPECT_THROW(read_generation_set(in), IoError);
}

}  // namespace
}  // namespace mgb
