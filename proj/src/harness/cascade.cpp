//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/harness/cascade.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mgbench/fingerprint/morgan.h"
#include "mgbench/molgraph/smiles.h"
#include "mgbench/scaffold/scaffold.h"

namespace mgb {

ChemistryProbe::ChemistryProbe(const ReferencePair &pair, const DescriptorTables &tables,
                               const QedParams &qed_params, const FragScores &frag_scores)
    : tables_(tables),
      qed_params_(qed_params),
      frag_scores_(frag_scores),
      rds_(pair.a.fp, pair.b.fp),
      n_bits_(pair.a.fp.n_bits()) {
  if (pair.a.generic_scaffold)
    reference_scaffolds_.insert(*pair.a.generic_scaffold);
  if (pair.b.generic_scaffold)
    reference_scaffolds_.insert(*pair.b.generic_scaffold);
}

MoleculeProperties ChemistryProbe::evaluate(const std::string &canonical) const {
  const Molecule mol =
      parse_smiles(canonical, {.max_length = std::numeric_limits<std::size_t>::max()});
  MoleculeProperties p;
  p.qed = qed(descriptor_vector(mol, tables_), qed_params_);
  p.sas = sas(mol, frag_scores_);
  const RdsValue r = rds_(morgan_fingerprint(mol, kDefaultFingerprintRadius, n_bits_));
  p.rds = r.value;
  p.rds_clamped = r.clamped;
  p.novel_scaffold = is_novel_scaffold(mol, reference_scaffolds_);
  return p;
}

std::vector<GenerationRecord> filter_cascade(const GenerationSet &set,
                                             const std::unordered_set<std::string> &training_index,
                                             const PropertyProbe &probe,
                                             const CascadeConfig &cfg) {
  std::vector<GenerationRecord> records;
  records.reserve(set.size());
  std::unordered_set<std::string> seen;
  std::vector<std::size_t> firsts;
  for (const GeneratedCandidate &c : set) {
    GenerationRecord r;
    r.grid_index = c.grid_index;
    r.perturb_index = c.perturb_index;
    r.t = c.t;
    r.raw_smiles = c.raw_smiles;
    r.valid = c.valid;
    r.canonical = c.valid ? c.canonical : std::string();
    r.decode_micros = c.decode_micros;
    if (r.valid && seen.insert(r.canonical).second) {
      r.unique_first = true;
      r.novel = !training_index.contains(r.canonical);
      firsts.push_back(records.size());
    }
    records.push_back(std::move(r));
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < firsts.size();) {
      GenerationRecord &r = records[firsts[k]];
      try {
        const MoleculeProperties p = probe.evaluate(r.canonical);
        r.qed = p.qed;
        r.sas = p.sas;
        r.rds = p.rds;
        r.rds_clamped = p.rds_clamped;
        r.pc_pass = r.novel && pc_filter(p.qed, p.sas, cfg.pc);
        r.nbm_pass = r.pc_pass && p.novel_scaffold;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = firsts.size();
      }
    }
  };
  int n_threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n_threads = std::max(1, std::min<int>(n_threads, static_cast<int>(firsts.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n_threads; ++i)
      pool.emplace_back(worker);
  }
  if (error)
    std::rethrow_exception(error);
  return records;
}

}  // namespace mgb
