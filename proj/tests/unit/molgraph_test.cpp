#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mgbench/molgraph/corpus.h"
#include "mgbench/molgraph/smiles.h"

namespace mgb {
namespace {

TEST(ParseSmiles, EthanolHydrogens) {
  Molecule m = parse_smiles("CCO");
  ASSERT_EQ(m.num_atoms(), 3);
  EXPECT_EQ(m.atom(0).total_h, 3);
  EXPECT_EQ(m.atom(1).total_h, 2);
  EXPECT_EQ(m.atom(2).total_h, 1);
  EXPECT_EQ(canonical_smiles(m), canonicalize("OCC"));
}

TEST(ParseSmiles, BenzeneIsAromaticRing) {
  Molecule m = parse_smiles("c1ccccc1");
  ASSERT_EQ(m.rings().size(), 1u);
  for (int i = 0; i < m.num_atoms(); ++i) {
    EXPECT_TRUE(m.atom(i).aromatic);
    EXPECT_EQ(m.atom(i).total_h, 1);
  }
}

TEST(ParseSmiles, KekuleBenzeneAromatizes) {
  EXPECT_EQ(canonicalize("C1=CC=CC=C1"), canonicalize("c1ccccc1"));
  EXPECT_EQ(canonicalize("C1=CC=CN1"), canonicalize("c1cc[nH]c1"));
}

TEST(ParseSmiles, UnclosedRing) {
  try {
    parse_smiles("C1CC");
    FAIL();
  } catch (const SmilesError &e) {
    EXPECT_EQ(e.kind(), SmilesErrorKind::kUnclosedRing);
  }
}

TEST(ParseSmiles, RejectsStereoAndIsotopes) {
  auto kind_of = [](const char *s) {
    try {
      parse_smiles(s);
    } catch (const SmilesError &e) {
      return e.kind();
    }
    return SmilesErrorKind::kEmpty;
  };
  EXPECT_EQ(kind_of("C/C=C/C"), SmilesErrorKind::kStereo);
  EXPECT_EQ(kind_of("N[C@@H](C)C(=O)O"), SmilesErrorKind::kStereo);
  EXPECT_EQ(kind_of("[13CH4]"), SmilesErrorKind::kIsotope);
  EXPECT_EQ(kind_of("C(C)(C)(C)(C)C"), SmilesErrorKind::kValence);
  EXPECT_EQ(kind_of("cc"), SmilesErrorKind::kAromaticity);
  EXPECT_EQ(kind_of(""), SmilesErrorKind::kEmpty);
}

TEST(ParseSmiles, LengthCap) {
  std::string long_chain(201, 'C');
  EXPECT_THROW(parse_smiles(long_chain), SmilesError);
  EXPECT_NO_THROW(parse_smiles(long_chain, ParseOptions{215}));
}

TEST(ParseSmiles, PercentRingClosure) {
  EXPECT_EQ(canonicalize("C%10CCCCC%10"), canonicalize("C1CCCCC1"));
}

TEST(ParseSmiles, BracketAtoms) {
  Molecule m = parse_smiles("[NH4+]");
  EXPECT_EQ(m.atom(0).formal_charge, 1);
  EXPECT_EQ(m.atom(0).total_h, 4);
  EXPECT_EQ(canonicalize("C[N+](C)(C)C"), canonicalize("C[N+](C)(C)C"));
  EXPECT_EQ(canonicalize("[O-]C(=O)C"), canonicalize("CC([O-])=O"));
}

TEST(Rings, NaphthaleneHasTwoRings) {
  Molecule m = parse_smiles("c1ccc2ccccc2c1");
  EXPECT_EQ(m.rings().size(), 2u);
  for (const auto &r : m.rings())
    EXPECT_EQ(r.size(), 6u);
}

TEST(Rings, CubaneRingCount) {
  Molecule m = parse_smiles("C12C3C4C1C5C2C3C45");
  EXPECT_EQ(m.rings().size(), 5u);  // 12 bonds - 8 atoms + 1
}

TEST(Canonical, RandomOrderingsAgree) {
  const char *mols[] = {"CC(=O)Oc1ccccc1C(=O)O", "CC(C)Cc1ccc(C(C)C(=O)O)cc1",
                        "COc1ccc2cc(C(C)C(=O)O)ccc2c1", "C1CC2CCC1CC2",
                        "c1ccc2c(c1)[nH]c1ccccc12", "O=C1NC(=O)C(=O)N1",
                        "Cc1nc(C)c(C(=O)Nc2ccc(F)cc2)s1", "C12C3C4C1C5C2C3C45"};
  std::mt19937_64 rng(7);
  for (const char *s : mols) {
    Molecule m = parse_smiles(s);
    const std::string canon = canonical_smiles(m);
    for (int k = 0; k < 50; ++k) {
      const std::string r = randomize_smiles(m, rng);
      ASSERT_EQ(canonicalize(r, ParseOptions{215}), canon) << s << " via " << r;
    }
  }
}

TEST(Canonical, CorpusRoundTrip) {
  auto recs = read_corpus(std::filesystem::path(MGB_DEFAULT_DATA_DIR) / "corpus_1k.smi");
  ASSERT_EQ(recs.size(), 1000u);
  std::mt19937_64 rng(11);
  for (const auto &r : recs) {
    Molecule m = parse_smiles(r.smiles);
    const std::string canon = canonical_smiles(m);
    EXPECT_EQ(canonicalize(canon), canon) << r.smiles;
    for (int k = 0; k < 3; ++k)
      ASSERT_EQ(canonicalize(randomize_smiles(m, rng), ParseOptions{1000}), canon) << r.smiles;
  }
}

TEST(Strip, RemovesStereoAndSalts) {
  EXPECT_EQ(canonicalize(strip_stereo_and_components("C/C=C\\C")), canonicalize("CC=CC"));
  EXPECT_EQ(canonicalize(strip_stereo_and_components("N[C@@H](C)C(=O)O")),
            canonicalize("NC(C)C(=O)O"));
  EXPECT_EQ(canonicalize(strip_stereo_and_components("CCN.Cl")), canonicalize("CCN"));
  EXPECT_EQ(canonicalize(strip_stereo_and_components("[Na+].[O-]C(=O)c1ccccc1")),
            canonicalize("[O-]C(=O)c1ccccc1"));
}

}  // namespace
}  // namespace mgb
