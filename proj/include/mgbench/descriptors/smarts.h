//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_DESCRIPTORS_SMARTS_H_
#define MGBENCH_DESCRIPTORS_SMARTS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mgbench/molgraph/molecule.h"

namespace mgb {

class SmartsError: public std::runtime_error {
public:
  SmartsError(std::size_t position, const std::string &what);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

namespace smarts_detail {
struct Pattern;
}

// Compiled SMARTS query. Supported: atomic primitives (element symbols,
// #n, *, a, A, H, D, X, v, R, r, x, charge, isotope), the operators ! & , ;
// recursive $(...), bond primitives - = # : ~ @ with the same operators,
// branches, ring closures and '.'-separated components. Immutable and safe to
// share between threads.
class SmartsPattern {
public:
  explicit SmartsPattern(std::string_view text);

  const std::string &text() const { return text_; }
  int num_atoms() const;

private:
  friend class SmartsMatcher;
  std::string text_;
  std::shared_ptr<const smarts_detail::Pattern> pattern_;
};

// Per-molecule view with precomputed atom properties. H counts include
// explicit hydrogen neighbors. Holds a recursive-match cache, so one target
// must not be used from several threads at once.
class SmartsTarget {
public:
  explicit SmartsTarget(const Molecule &mol);

  const Molecule &molecule() const { return mol_; }

  struct AtomProps {
    int total_h;
    int degree;
    int total_degree;
    int valence;
    int ring_bonds;
  };
  const AtomProps &props(int atom) const { return props_[atom]; }

private:
  friend class SmartsMatcher;
  const Molecule &mol_;
  std::vector<AtomProps> props_;
  mutable std::unordered_map<const void *, std::vector<std::int8_t>> recursive_cache_;
};

struct MatchOptions {
  // Report each set of target atoms once.
  bool unique = true;
  // 0 means unlimited.
  std::size_t max_matches = 0;
};

// Each match lists target atom indices in query atom order.
std::vector<std::vector<int>> find_matches(const SmartsPattern &pattern,
                                           const SmartsTarget &target,
                                           const MatchOptions &opts = {});
bool has_match(const SmartsPattern &pattern, const SmartsTarget &target);
int count_matches(const SmartsPattern &pattern, const SmartsTarget &target);

// Reads one pattern per line; blank lines and '#' comments are skipped.
std::vector<SmartsPattern> load_smarts_file(const std::string &path);

}  // namespace mgb

#endif  // MGBENCH_DESCRIPTORS_SMARTS_H_
