//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/tokenizer/tokenizer.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

namespace mgb {
namespace {

constexpr const char *kReserved[] = {"<PAD>", "<SOS>", "<EOS>", "<UNK>"};

}  // namespace

TokenSequence tokenize_atomwise(std::string_view text) {
  TokenSequence out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '[') {
      const std::size_t close = text.find(']', i);
      if (close == std::string_view::npos)
        throw TokenizerError("unterminated '[' at position " + std::to_string(i));
      out.emplace_back(text.substr(i, close - i + 1));
      i = close + 1;
    } else if (c == '%' && i + 2 < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i + 1])) &&
               std::isdigit(static_cast<unsigned char>(text[i + 2]))) {
      out.emplace_back(text.substr(i, 3));
      i += 3;
    } else if ((c == 'C' && i + 1 < text.size() && text[i + 1] == 'l') ||
               (c == 'B' && i + 1 < text.size() && text[i + 1] == 'r')) {
      out.emplace_back(text.substr(i, 2));
      i += 2;
    } else {
      out.emplace_back(1, c);
      ++i;
    }
  }
  return out;
}

std::string join_tokens(std::span<const std::string> tokens) {
  std::string out;
  for (const std::string &t : tokens)
    out += t;
  return out;
}

Vocab::Vocab() {
  for (const char *r : kReserved)
    add(r);
}

void Vocab::add(std::string token) {
  if (ids_.count(token) != 0)
    throw TokenizerError("duplicate vocabulary token '" + token + "'");
  ids_.emplace(token, static_cast<int>(tokens_.size()));
  tokens_.push_back(std::move(token));
}

Vocab Vocab::build(std::span<const TokenSequence> corpus) {
  std::map<std::string, std::size_t> freq;
  for (const TokenSequence &seq : corpus) {
    for (const std::string &t : seq)
      ++freq[t];
  }
  std::vector<std::pair<std::string, std::size_t>> entries(freq.begin(), freq.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  Vocab v;
  for (auto &[token, count] : entries) {
    if (!v.contains(token))
      v.add(token);
  }
  return v;
}

Vocab Vocab::load(std::istream &in) {
  Vocab v;
  v.tokens_.clear();
  v.ids_.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    v.add(line);
  }
  if (v.size() < kNumReserved)
    throw TokenizerError("vocabulary file is missing reserved tokens");
  for (int i = 0; i < kNumReserved; ++i) {
    if (v.tokens_[i] != kReserved[i])
      throw TokenizerError("vocabulary line " + std::to_string(i + 1) + " must be " +
                           kReserved[i]);
  }
  return v;
}

Vocab Vocab::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw TokenizerError("cannot read vocabulary " + path.string());
  return load(in);
}

void Vocab::save(std::ostream &out) const {
  for (const std::string &t : tokens_)
    out << t << '\n';
}

void Vocab::save(const std::filesystem::path &path) const {
  std::ofstream out(path);
  if (!out)
    throw TokenizerError("cannot write vocabulary " + path.string());
  save(out);
}

int Vocab::id(const std::string &token) const {
  auto it = ids_.find(token);
  return it == ids_.end() ? kUnk : it->second;
}

const std::string &Vocab::token(int id) const {
  if (id < 0 || id >= size())
    throw TokenizerError("token id " + std::to_string(id) + " out of range");
  return tokens_[id];
}

std::vector<int> encode(std::span<const std::string> tokens, const Vocab &vocab,
                        std::size_t max_len, const EncodeOptions &opts) {
  if (tokens.size() + 2 > max_len)
    throw TokenizerError("sequence of " + std::to_string(tokens.size()) +
                         " tokens does not fit max_len " + std::to_string(max_len));
  std::vector<int> ids;
  ids.reserve(max_len);
  ids.push_back(Vocab::kStart);
  for (const std::string &t : tokens) {
    const int id = vocab.id(t);
    if (id == Vocab::kUnk && !opts.allow_unknown)
      throw TokenizerError("unknown token '" + t + "'");
    ids.push_back(id);
  }
  ids.push_back(Vocab::kEnd);
  ids.resize(max_len, Vocab::kPad);
  return ids;
}

std::string decode(std::span<const int> ids, const Vocab &vocab) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const int id = ids[i];
    const std::string &tok = vocab.token(id);
    if (id == Vocab::kEnd)
      break;
    if (id == Vocab::kStart || id == Vocab::kPad)
      continue;
    out += tok;
  }
  return out;
}

}  // namespace mgb
