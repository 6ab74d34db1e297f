#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "mgbench/molgraph/corpus.h"
#include "mgbench/tokenizer/tokenizer.h"

namespace mgb {
namespace {

TEST(Tokenize, Examples) {
  EXPECT_EQ(tokenize_atomwise("CCO"), (TokenSequence{"C", "C", "O"}));
  EXPECT_EQ(tokenize_atomwise("c1ccccc1Cl"),
            (TokenSequence{"c", "1", "c", "c", "c", "c", "c", "1", "Cl"}));
  EXPECT_EQ(tokenize_atomwise("C[NH+](C)C"),
            (TokenSequence{"C", "[NH+]", "(", "C", ")", "C"}));
  EXPECT_EQ(tokenize_atomwise("C%12CC%12Br"),
            (TokenSequence{"C", "%12", "C", "C", "%12", "Br"}));
}

TEST(Tokenize, UnterminatedBracket) {
  EXPECT_THROW(tokenize_atomwise("C[NH+"), TokenizerError);
}

TEST(Vocab, SmallCorpora) {
  std::vector<TokenSequence> one{tokenize_atomwise("CCO")};
  Vocab v = Vocab::build(one);
  EXPECT_EQ(v.size(), 6);
  EXPECT_EQ(v.token(4), "C");
  EXPECT_EQ(v.token(5), "O");

  std::vector<TokenSequence> two{tokenize_atomwise("CCO"), tokenize_atomwise("c1ccccc1")};
  Vocab w = Vocab::build(two);
  EXPECT_EQ(w.size(), 8);
  // c (6), C (2), 1 (2), O (1); ties broken lexicographically.
  EXPECT_EQ(w.tokens(), (std::vector<std::string>{"<PAD>", "<SOS>", "<EOS>", "<UNK>", "c",
                                                  "1", "C", "O"}));
}

TEST(Vocab, CorpusOrderIndependentAndRoundTrips) {
  auto recs = read_corpus(std::filesystem::path(MGB_DEFAULT_DATA_DIR) / "corpus_1k.smi");
  std::vector<TokenSequence> seqs;
  for (const auto &r : recs) {
    seqs.push_back(tokenize_atomwise(r.smiles));
    ASSERT_EQ(join_tokens(seqs.back()), r.smiles);
  }
  Vocab a = Vocab::build(seqs);
  std::shuffle(seqs.begin(), seqs.end(), std::mt19937_64(3));
  Vocab b = Vocab::build(seqs);
  EXPECT_EQ(a.tokens(), b.tokens());

  std::stringstream file;
  a.save(file);
  Vocab c = Vocab::load(file);
  EXPECT_EQ(a.tokens(), c.tokens());

  for (const auto &seq : seqs) {
    auto ids = encode(seq, a, 128);
    ASSERT_EQ(ids.size(), 128u);
    ASSERT_EQ(decode(ids, a), join_tokens(seq));
  }
}

TEST(Encode, PaddingAndErrors) {
  std::vector<TokenSequence> corpus{tokenize_atomwise("CCO")};
  Vocab v = Vocab::build(corpus);
  TokenSequence c{"C"};
  EXPECT_EQ(encode(c, v, 5), (std::vector<int>{Vocab::kStart, v.id("C"), Vocab::kEnd,
                                                Vocab::kPad, Vocab::kPad}));
  EXPECT_THROW(encode(tokenize_atomwise("CCCC"), v, 5), TokenizerError);
  EXPECT_THROW(encode(tokenize_atomwise("N"), v, 5), TokenizerError);
  EXPECT_EQ(encode(tokenize_atomwise("N"), v, 4, {true})[1], Vocab::kUnk);
  std::vector<int> bad{1, 99};
  EXPECT_THROW(decode(bad, v), TokenizerError);
}

TEST(Vocab, LoadRejectsBadHeader) {
  std::stringstream s("<PAD>\nC\n<EOS>\n<UNK>\n");
  EXPECT_THROW(Vocab::load(s), TokenizerError);
}

}  // namespace
}  // namespace mgb
