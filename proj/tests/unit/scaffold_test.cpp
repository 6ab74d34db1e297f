#include <gtest/gtest.h>

#include <random>

#include "mgbench/molgraph/corpus.h"
#include "mgbench/molgraph/smiles.h"
#include "mgbench/scaffold/scaffold.h"

namespace mgb {
namespace {

std::string bm(const char *smiles) {
  auto s = bm_scaffold(parse_smiles(smiles));
  return s ? s->canonical : "<none>";
}

std::string generic(const char *smiles) {
  return generic_scaffold_smiles(parse_smiles(smiles)).value_or("<none>");
}

TEST(Scaffold, Examples) {
  EXPECT_EQ(bm("CCO"), "<none>");
  EXPECT_EQ(bm("Cc1ccccc1"), canonicalize("c1ccccc1"));
  EXPECT_EQ(bm("c1ccccc1Cc1ccccc1"), canonicalize("c1ccccc1Cc1ccccc1"));
  EXPECT_EQ(bm("CC(C)Cc1ccc(C(C)C(=O)O)cc1"), canonicalize("c1ccccc1"));
  EXPECT_EQ(bm("Cn1cccc1"), canonicalize("c1cc[nH]c1"));
}

TEST(Scaffold, ExocyclicDoubleBondsKept) {
  EXPECT_EQ(bm("CCC1CCCCC1=O"), canonicalize("O=C1CCCCC1"));
  EXPECT_EQ(bm("CC(=O)c1ccccc1"), canonicalize("c1ccccc1"));
  EXPECT_EQ(bm("O=C(Nc1ccccc1)c1ccccc1"), canonicalize("O=C(Nc1ccccc1)c1ccccc1"));
}

TEST(Scaffold, GenericExamples) {
  EXPECT_EQ(generic("c1ccccc1"), "C1CCCCC1");
  EXPECT_EQ(generic("c1ccncc1"), "C1CCCCC1");
  EXPECT_EQ(generic("c1ccc2ncccc2c1"), generic("c1ccc2ccccc2c1"));
  EXPECT_EQ(generic("O=C1CCCCC1"), "C1CCCCC1");
  EXPECT_EQ(generic("O=C(Nc1ccccc1)c1ccccc1"), generic("C(Cc1ccccc1)c1ccccc1"));
}

TEST(Scaffold, Novelty) {
  Molecule ibuprofen = parse_smiles("CC(C)Cc1ccc(C(C)C(=O)O)cc1");
  std::set<std::string> ref{*generic_scaffold_smiles(ibuprofen)};
  EXPECT_FALSE(is_novel_scaffold(ibuprofen, ref));
  EXPECT_FALSE(is_novel_scaffold(parse_smiles("CCCCO"), ref));
  std::set<std::string> bicyclic{*generic_scaffold_smiles(parse_smiles("c1ccc2ccccc2c1"))};
  EXPECT_TRUE(is_novel_scaffold(parse_smiles("OC1CCCCC1"), bicyclic));
}

TEST(Scaffold, IdempotentAndOrderInvariantOverCorpus) {
  auto recs = read_corpus(std::filesystem::path(MGB_DEFAULT_DATA_DIR) / "corpus_1k.smi");
  std::mt19937_64 rng(13);
  int checked = 0;
  for (std::size_t i = 0; i < recs.size(); i += 5) {
    Molecule m = parse_smiles(recs[i].smiles);
    auto s = bm_scaffold(m);
    if (!s)
      continue;
    ++checked;
    EXPECT_LE(s->molecule.num_atoms(), m.num_atoms());
    EXPECT_GE(s->molecule.rings().size(), m.rings().size());
    auto again = bm_scaffold(parse_smiles(s->canonical));
    ASSERT_TRUE(again);
    EXPECT_EQ(again->canonical, s->canonical) << recs[i].smiles;
    Scaffold g = generic_scaffold(*s);
    EXPECT_EQ(generic_scaffold(g).canonical, g.canonical);
    EXPECT_EQ(generic_scaffold_smiles(parse_smiles(randomize_smiles(m, rng), {1000})),
              g.canonical);
  }
  EXPECT_GT(checked, 150);
}

}  // namespace
}  // namespace mgb
