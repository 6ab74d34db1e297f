//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/harness/evaluation.h"

#include <limits>
#include <stdexcept>

#include "mgbench/fingerprint/morgan.h"
#include "mgbench/fingerprint/similarity.h"
#include "mgbench/molgraph/smiles.h"
#include "mgbench/tokenizer/tokenizer.h"

namespace mgb {

EvalMetrics evaluate_reconstruction(std::span<const std::string> targets,
                                    std::span<const DecodeResult> decoded, int n_bits) {
  if (targets.size() != decoded.size())
    throw std::invalid_argument("evaluate_reconstruction: size mismatch");
  EvalMetrics m;
  m.n = targets.size();
  if (targets.empty())
    return m;

  const ParseOptions unlimited{.max_length = std::numeric_limits<std::size_t>::max()};
  std::size_t token_hits = 0;
  std::size_t token_total = 0;
  std::size_t exact = 0;
  std::size_t valid = 0;
  double tanimoto_sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Molecule target = parse_smiles(targets[i], unlimited);
    const std::string target_canonical = canonical_smiles(target);

    const TokenSequence want = tokenize_atomwise(targets[i]);
    TokenSequence got;
    if (decoded[i]) {
      try {
        got = tokenize_atomwise(*decoded[i]);
      } catch (const TokenizerError &) {
        got.clear();
      }
    }
    for (std::size_t k = 0; k <= want.size(); ++k) {
      const bool want_end = k == want.size();
      const bool got_end = k == got.size();
      if (want_end ? got_end : (!got_end && k < got.size() && got[k] == want[k]))
        ++token_hits;
    }
    token_total += want.size() + 1;

    if (!decoded[i])
      continue;
    const auto canonical = canonical_if_valid(*decoded[i]);
    if (!canonical)
      continue;
    ++valid;
    exact += *canonical == target_canonical;
    const Molecule mol = parse_smiles(*canonical, unlimited);
    tanimoto_sum += tanimoto(morgan_fingerprint(target, kDefaultFingerprintRadius, n_bits),
                             morgan_fingerprint(mol, kDefaultFingerprintRadius, n_bits));
  }
  const double n = static_cast<double>(targets.size());
  m.token_accuracy = static_cast<double>(token_hits) / token_total;
  m.molecule_accuracy = exact / n;
  m.tanimoto_accuracy = tanimoto_sum / n;
  m.validity = valid / n;
  return m;
}

}  // namespace mgb
