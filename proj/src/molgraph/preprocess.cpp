//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mgbench/molgraph/smiles.h"

namespace mgb {
namespace {

std::string strip_stereo_marks(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_bracket = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[')
      in_bracket = true;
    else if (c == ']')
      in_bracket = false;

    if (c == '/' || c == '\\')
      continue;
    if (in_bracket && c == '@') {
      // @, @@, and the long forms @TH1, @AL2, @SP3, @TB12, @OH25.
      std::size_t j = i + 1;
      if (j < text.size() && text[j] == '@') {
        ++j;
      } else if (j + 1 < text.size() && std::isupper(static_cast<unsigned char>(text[j])) &&
                 std::isupper(static_cast<unsigned char>(text[j + 1]))) {
        j += 2;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
      }
      i = j - 1;
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string strip_stereo_and_components(std::string_view text, const ParseOptions &opts) {
  const std::string stripped = strip_stereo_marks(text);

  struct Best {
    Molecule mol;
    int heavy;
    std::string canonical;
  };
  std::optional<Best> best;

  std::size_t start = 0;
  while (start <= stripped.size()) {
    std::size_t dot = stripped.find('.', start);
    if (dot == std::string::npos)
      dot = stripped.size();
    const std::string_view part = std::string_view(stripped).substr(start, dot - start);
    start = dot + 1;
    if (part.empty())
      continue;

    Molecule mol = parse_smiles(part, opts);
    const int heavy = mol.heavy_atom_count();
    if (best && heavy < best->heavy)
      continue;
    std::string canonical = canonical_smiles(mol);
    if (!best || heavy > best->heavy || canonical < best->canonical)
      best = Best{std::move(mol), heavy, std::move(canonical)};
  }
  if (!best)
    throw SmilesError(SmilesErrorKind::kEmpty, 0, "no components left after stripping");
  return write_smiles(best->mol);
}

std::optional<std::string> canonical_if_valid(std::string_view raw) {
  if (raw.empty())
    return std::nullopt;
  try {
    const Molecule mol =
        parse_smiles(strip_stereo_marks(raw), {.max_length = std::numeric_limits<std::size_t>::max()});
    if (mol.num_atoms() == 0)
      return std::nullopt;
    return canonical_smiles(mol);
  } catch (const SmilesError &) {
    return std::nullopt;
  }
}

}  // namespace mgb
