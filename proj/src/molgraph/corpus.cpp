//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/molgraph/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>

namespace mgb {

std::vector<CorpusRecord> read_corpus(std::istream &in) {
  std::vector<CorpusRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line[0] == '#')
      continue;
    CorpusRecord rec;
    rec.line = lineno;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      rec.smiles = line;
    } else {
      rec.smiles = line.substr(0, tab);
      rec.id = line.substr(tab + 1);
    }
    // Tolerate stray trailing spaces (space-padded training files).
    while (!rec.smiles.empty() && rec.smiles.back() == ' ')
      rec.smiles.pop_back();
    if (rec.smiles.empty())
      continue;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CorpusRecord> read_corpus(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot read corpus file " + path.string());
  return read_corpus(in);
}

void write_corpus(std::ostream &out, const std::vector<CorpusRecord> &records) {
  for (const CorpusRecord &r : records) {
    out << r.smiles;
    if (!r.id.empty())
      out << '\t' << r.id;
    out << '\n';
  }
}

}  // namespace mgb
