#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mgbench/fingerprint/fingerprint_store.h"
#include "mgbench/fingerprint/morgan.h"
#include "mgbench/fingerprint/similarity.h"
#include "mgbench/molgraph/smiles.h"

namespace mgb {
namespace {

Fingerprint bits(std::initializer_list<int> on, int n = 64) {
  Fingerprint fp(n);
  for (int b : on)
    fp.set(b);
  return fp;
}

TEST(Fnv, KnownVector) {
  // FNV-1a of eight zero bytes.
  std::uint64_t h = Fnv1a64::kOffset;
  for (int i = 0; i < 8; ++i)
    h *= Fnv1a64::kPrime;
  EXPECT_EQ(Fnv1a64().add(0).digest(), h);
}

TEST(Morgan, MethaneSetsOneBit) {
  EXPECT_EQ(morgan_fingerprint(parse_smiles("C")).popcount(), 1);
}

TEST(Morgan, OrderInvariant) {
  EXPECT_EQ(morgan_fingerprint(parse_smiles("CCO")), morgan_fingerprint(parse_smiles("OCC")));
}

TEST(Morgan, EthaneSymmetric) {
  Molecule m = parse_smiles("CC");
  EXPECT_LE(morgan_fingerprint(m).popcount(), 3);
  auto envs = morgan_environments(m, 2);
  ASSERT_GE(envs.size(), 2u);
  EXPECT_EQ(envs[0].id, envs[1].id);
}

TEST(Morgan, RandomizedOrderingsAgree) {
  const char *mols[] = {"CC(C)Cc1ccc(C(C)C(=O)O)cc1", "c1ccc2c(c1)[nH]c1ccccc12",
                        "COc1cc2ncnc(Nc3ccc(F)c(Cl)c3)c2cc1OCCCN1CCOCC1"};
  std::mt19937_64 rng(5);
  for (const char *s : mols) {
    Molecule m = parse_smiles(s);
    const Fingerprint ref = morgan_fingerprint(m);
    for (int k = 0; k < 20; ++k)
      EXPECT_EQ(morgan_fingerprint(parse_smiles(randomize_smiles(m, rng), {1000})), ref);
  }
}

TEST(Morgan, ParallelMatchesSerial) {
  std::vector<Molecule> mols;
  for (const char *s : {"CCO", "c1ccccc1", "CC(=O)Nc1ccc(O)cc1", "C1CCNCC1", "OC(=O)CCl"})
    mols.push_back(parse_smiles(s));
  auto a = morgan_fingerprints(mols, 2, 2048, 1);
  auto b = morgan_fingerprints(mols, 2, 2048, 4);
  EXPECT_EQ(a, b);
}

TEST(Morgan, RejectsNonPowerOfTwo) {
  EXPECT_THROW(morgan_fingerprint(parse_smiles("CC"), 2, 1000), FingerprintError);
}

TEST(Similarity, Examples) {
  auto a = bits({1, 2, 3});
  auto b = bits({2, 3, 4});
  EXPECT_DOUBLE_EQ(tanimoto(a, b), 0.5);
  EXPECT_NEAR(dice(a, b), 4.0 / 6.0, 1e-15);
  EXPECT_DOUBLE_EQ(tanimoto(a, a), 1.0);
  EXPECT_DOUBLE_EQ(tanimoto(bits({1}), bits({2})), 0.0);
  EXPECT_DOUBLE_EQ(tanimoto(bits({}), bits({})), 1.0);
  EXPECT_THROW(tanimoto(bits({}, 64), bits({}, 128)), FingerprintError);
}

TEST(Rds, Endpoints) {
  auto a = bits({1, 2, 3, 4});
  auto b = bits({3, 4, 5, 6});
  RdsReference ref(a, b);
  EXPECT_DOUBLE_EQ(ref(a).value, -1.0);
  EXPECT_DOUBLE_EQ(ref(b).value, 1.0);
  EXPECT_DOUBLE_EQ(ref(bits({3, 4})).value, 0.0);
  EXPECT_DOUBLE_EQ(rds(a, b, a).value, 1.0);
  EXPECT_THROW(RdsReference(a, a), FingerprintError);
}

TEST(Rds, ClampIsCounted) {
  // d(B,i) = 2/3, d(A,i) = 0, d(A,B) = 1/2: raw value 4/3.
  RdsReference ref(bits({1, 2}), bits({2, 3}));
  auto v = ref(bits({3}));
  EXPECT_DOUBLE_EQ(v.value, 1.0);
  EXPECT_TRUE(v.clamped);
  EXPECT_EQ(ref.clamp_events(), 1u);
}

TEST(Store, RoundTrip) {
  FingerprintStore s;
  s.n_bits = 128;
  s.radius = 2;
  s.records.push_back({"a", bits({0, 5, 127}, 128)});
  s.records.push_back({"mol-2", bits({64}, 128)});
  std::stringstream buf;
  s.write(buf);
  EXPECT_EQ(buf.str().substr(0, 4), "MFP1");
  EXPECT_EQ(buf.str().size(), 4u + 4 + 4 + 8 + (4 + 1 + 16) + (4 + 5 + 16));
  auto t = FingerprintStore::read(buf);
  ASSERT_EQ(t.records.size(), 2u);
  EXPECT_EQ(t.records[0].fp, s.records[0].fp);
  EXPECT_EQ(t.records[1].id, "mol-2");
  std::stringstream bad("MFP2");
  EXPECT_THROW(FingerprintStore::read(bad), std::runtime_error);
}

}  // namespace
}  // namespace mgb
