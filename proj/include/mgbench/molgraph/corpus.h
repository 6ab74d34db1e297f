//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_MOLGRAPH_CORPUS_H_
#define MGBENCH_MOLGRAPH_CORPUS_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgb {

// One corpus line: `SMILES<TAB>optional-id`.
struct CorpusRecord {
  std::string smiles;
  std::string id;
  std::size_t line = 0;
};

class IoError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Lines starting with '#' and blank lines are skipped. Trailing '\r' is
// removed.
std::vector<CorpusRecord> read_corpus(std::istream &in);
std::vector<CorpusRecord> read_corpus(const std::filesystem::path &path);

void write_corpus(std::ostream &out, const std::vector<CorpusRecord> &records);

}  // namespace mgb

#endif  // MGBENCH_MOLGRAPH_CORPUS_H_
