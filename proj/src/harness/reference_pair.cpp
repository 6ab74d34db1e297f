//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/harness/reference_pair.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "mgbench/decoder/reference_decoder.h"
#include "mgbench/fingerprint/morgan.h"
#include "mgbench/molgraph/corpus.h"
#include "mgbench/molgraph/smiles.h"
#include "mgbench/scaffold/scaffold.h"

namespace mgb {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

ReferenceTarget make_target(const std::string &name, const std::string &smiles,
                            const Projection *projection, int n_bits) {
  ReferenceTarget t;
  t.name = name;
  t.molecule = parse_smiles(strip_stereo_and_components(smiles));
  t.canonical = canonical_smiles(t.molecule);
  t.fp = morgan_fingerprint(t.molecule, kDefaultFingerprintRadius, n_bits);
  t.generic_scaffold = generic_scaffold_smiles(t.molecule);
  if (projection)
    t.latent = reference_encode(t.fp, *projection);
  return t;
}

}  // namespace

std::vector<ReferencePairSpec> load_reference_pairs(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path.string());
  std::vector<ReferencePairSpec> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line.front() == '#')
      continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
      f.push_back(line.substr(start, tab - start));
    f.push_back(line.substr(start));
    if (f.size() != 5)
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 5 fields");
    pairs.push_back({f[0], f[1], f[2], f[3], f[4]});
  }
  return pairs;
}

const ReferencePairSpec &find_reference_pair(const std::vector<ReferencePairSpec> &pairs,
                                             std::string_view key) {
  const std::string k = lower(key);
  for (const ReferencePairSpec &p : pairs) {
    if (lower(p.class_name) == k || lower(p.name_a + "/" + p.name_b) == k)
      return p;
  }
  throw std::invalid_argument("unknown reference pair '" + std::string(key) + "'");
}

ReferencePair make_reference_pair(const ReferencePairSpec &spec, const Projection *projection,
                                  int n_bits) {
  ReferencePair pair;
  pair.class_name = spec.class_name;
  pair.a = make_target(spec.name_a, spec.smiles_a, projection, n_bits);
  pair.b = make_target(spec.name_b, spec.smiles_b, projection, n_bits);
  if (pair.a.canonical == pair.b.canonical)
    throw std::invalid_argument("reference pair " + spec.class_name +
                                " has identical targets");
  return pair;
}

}  // namespace mgb
