#include <gtest/gtest.h>

#include "mgbench/descriptors/smarts.h"
#include "mgbench/molgraph/smiles.h"

namespace mgb {
namespace {

int count(const char *smarts, const char *smiles) {
  Molecule m = parse_smiles(smiles);
  SmartsTarget t(m);
  return count_matches(SmartsPattern(smarts), t);
}

TEST(Smarts, ElementsAndAromaticity) {
  EXPECT_EQ(count("C", "CCO"), 2);
  EXPECT_EQ(count("c", "c1ccccc1C"), 6);
  EXPECT_EQ(count("[#6]", "c1ccccc1C"), 7);
  EXPECT_EQ(count("a", "c1ccncc1"), 6);
  EXPECT_EQ(count("[n]", "c1ccncc1"), 1);
  EXPECT_EQ(count("N", "c1ccncc1"), 0);
  EXPECT_EQ(count("Cl", "ClCCCl"), 2);
}

TEST(Smarts, CountsAndCharges) {
  EXPECT_EQ(count("[CH3]", "CC(C)O"), 2);
  EXPECT_EQ(count("[OH1]", "CC(C)O"), 1);
  EXPECT_EQ(count("[D3]", "CC(C)O"), 1);
  EXPECT_EQ(count("[X4]", "CC(C)O"), 3);
  EXPECT_EQ(count("[N+]", "C[N+](C)(C)C"), 1);
  EXPECT_EQ(count("[O-]", "CC(=O)[O-]"), 1);
  EXPECT_EQ(count("[+0]", "CC(=O)[O-]"), 3);
  EXPECT_EQ(count("[v4]", "CC=O"), 2);
  EXPECT_EQ(count("[13C]", "CC"), 0);
}

TEST(Smarts, RingPrimitives) {
  EXPECT_EQ(count("[R]", "C1CC1CC"), 3);
  EXPECT_EQ(count("[R0]", "C1CC1CC"), 2);
  EXPECT_EQ(count("[R2]", "c1ccc2ccccc2c1"), 2);
  EXPECT_EQ(count("[r3]", "C1CC1C1CCCC1"), 3);
  EXPECT_EQ(count("[x3]", "c1ccc2ccccc2c1"), 2);
  EXPECT_EQ(count("C@C", "C1CC1CC"), 3);
  EXPECT_EQ(count("C!@C", "C1CC1CC"), 2);
}

TEST(Smarts, LogicOperators) {
  EXPECT_EQ(count("[C,N]", "CCNO"), 3);
  EXPECT_EQ(count("[!C]", "CCNO"), 2);
  EXPECT_EQ(count("[C&H3]", "CCNO"), 1);
  EXPECT_EQ(count("[N,O;H1]", "CNCO"), 2);
  EXPECT_EQ(count("[N,OH1]", "CN(C)CO"), 2);
}

TEST(Smarts, BondsAndTopology) {
  EXPECT_EQ(count("C=O", "CC(=O)O"), 1);
  EXPECT_EQ(count("C-O", "CC(=O)O"), 1);
  EXPECT_EQ(count("C~O", "CC(=O)O"), 2);
  EXPECT_EQ(count("cc", "c1ccccc1"), 6);
  EXPECT_EQ(count("c:c", "c1ccccc1"), 6);
  EXPECT_EQ(count("c-c", "c1ccccc1"), 0);
  EXPECT_EQ(count("c-c", "c1ccccc1-c1ccccc1"), 1);
  EXPECT_EQ(count("C(=O)O", "CC(=O)OC"), 1);
  EXPECT_EQ(count("*1**1", "C1CC1"), 1);
  EXPECT_EQ(count("C.C", "CC"), 1);
}

TEST(Smarts, Recursive) {
  EXPECT_EQ(count("[$(CO)]", "CCOC"), 2);
  EXPECT_EQ(count("[C;!$(C=O)]", "CC(=O)C"), 2);
  EXPECT_EQ(count("[$([CH3]C=O)]", "CC(=O)CC"), 1);
}

TEST(Smarts, ExplicitHydrogens) {
  Molecule m = with_explicit_hydrogens(parse_smiles("CO"));
  SmartsTarget t(m);
  EXPECT_EQ(count_matches(SmartsPattern("[#1]"), t), 4);
  EXPECT_EQ(count_matches(SmartsPattern("[#1]O"), t), 1);
  EXPECT_EQ(count_matches(SmartsPattern("[CH3]"), t), 1);
  EXPECT_EQ(count_matches(SmartsPattern("[H]"), t), 4);
}

TEST(Smarts, NonUniqueMatches) {
  Molecule m = parse_smiles("CC");
  SmartsTarget t(m);
  EXPECT_EQ(find_matches(SmartsPattern("CC"), t, {false, 0}).size(), 2u);
  EXPECT_EQ(find_matches(SmartsPattern("CC"), t).size(), 1u);
}

TEST(Smarts, SyntaxErrors) {
  for (const char *bad : {"", "[C", "C(", "C1CC", "C)", "[Zz]", "-C", "C="})
    EXPECT_THROW(SmartsPattern{bad}, SmartsError) << bad;
}

TEST(Smarts, BundledPatternFilesParse) {
  const std::string dir = MGB_DEFAULT_DATA_DIR;
  EXPECT_EQ(load_smarts_file(dir + "/qed_alerts.smarts").size(), 116u);
  EXPECT_EQ(load_smarts_file(dir + "/hba.smarts").size(), 11u);
}

}  // namespace
}  // namespace mgb
