//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_TOKENIZER_TOKENIZER_H_
#define MGBENCH_TOKENIZER_TOKENIZER_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mgb {

class TokenizerError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using TokenSequence = std::vector<std::string>;

// Splits a SMILES string into atomwise tokens: bracket atoms, %nn ring
// labels, Cl and Br are single tokens and every other character stands alone.
TokenSequence tokenize_atomwise(std::string_view text);

std::string join_tokens(std::span<const std::string> tokens);

class Vocab {
public:
  static constexpr int kPad = 0;
  static constexpr int kStart = 1;
  static constexpr int kEnd = 2;
  static constexpr int kUnk = 3;
  static constexpr int kNumReserved = 4;

  Vocab();

  // Ordered by descending frequency, then lexicographically. The result does
  // not depend on the order of `corpus`.
  static Vocab build(std::span<const TokenSequence> corpus);

  static Vocab load(std::istream &in);
  static Vocab load(const std::filesystem::path &path);
  void save(std::ostream &out) const;
  void save(const std::filesystem::path &path) const;

  int size() const { return static_cast<int>(tokens_.size()); }
  bool contains(const std::string &token) const { return ids_.count(token) != 0; }
  // kUnk when absent.
  int id(const std::string &token) const;
  const std::string &token(int id) const;
  const std::vector<std::string> &tokens() const { return tokens_; }

private:
  void add(std::string token);

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

struct EncodeOptions {
  bool allow_unknown = false;
};

// Returns [START, ids..., END, PAD...] with exactly `max_len` entries.
std::vector<int> encode(std::span<const std::string> tokens, const Vocab &vocab,
                        std::size_t max_len, const EncodeOptions &opts = {});

// Concatenates the tokens after START and before the first END, skipping PAD.
std::string decode(std::span<const int> ids, const Vocab &vocab);

}  // namespace mgb

#endif  // MGBENCH_TOKENIZER_TOKENIZER_H_
