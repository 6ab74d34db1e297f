//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MGBENCH_DECODER_REFERENCE_DECODER_H_
#define MGBENCH_DECODER_REFERENCE_DECODER_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgbench/decoder/decoder.h"
#include "mgbench/fingerprint/fingerprint.h"
#include "mgbench/molgraph/molecule.h"

namespace mgb {

inline constexpr int kDefaultLatentDim = 150;

class LatentIndexError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// d_fp x d_latent matrix of standard normal draws, row-major, generated from
// std::mt19937_64(seed).
class Projection {
public:
  Projection() = default;
  Projection(std::uint64_t seed, int d_fp, int d_latent);

  std::uint64_t seed() const { return seed_; }
  int d_fp() const { return d_fp_; }
  int d_latent() const { return d_latent_; }
  std::span<const double> row(int bit) const {
    return {values_.data() + static_cast<std::size_t>(bit) * d_latent_,
            static_cast<std::size_t>(d_latent_)};
  }

private:
  std::uint64_t seed_ = 0;
  int d_fp_ = 0;
  int d_latent_ = 0;
  std::vector<double> values_;
};

// tanh(P^T x / sqrt(popcount(x))) for the 0/1 bit vector x.
LatentVector reference_encode(const Fingerprint &fp, const Projection &projection);

struct LatentEntry {
  std::string smiles;
  Fingerprint fp;
  LatentVector latent;
};

// Canonical SMILES, fingerprints and latents of a corpus, deduplicated by
// canonical form in first-seen order. Latents are held at f32 precision,
// the precision of the index file, so a loaded index decodes exactly like
// the one that was saved.
class LatentIndex {
public:
  static LatentIndex build(std::span<const Molecule> corpus, std::uint64_t seed,
                           int d_latent = kDefaultLatentDim, int n_bits = kDefaultFingerprintBits,
                           int threads = 0);

  std::uint64_t seed() const { return projection_.seed(); }
  int d_latent() const { return projection_.d_latent(); }
  int d_fp() const { return projection_.d_fp(); }
  std::size_t size() const { return smiles_.size(); }
  const Projection &projection() const { return projection_; }

  const std::string &smiles(std::size_t i) const { return smiles_[i]; }
  const Fingerprint &fingerprint(std::size_t i) const { return fps_[i]; }
  LatentVector latent(std::size_t i) const;
  LatentEntry entry(std::size_t i) const { return {smiles_[i], fps_[i], latent(i)}; }

  LatentVector encode(const Fingerprint &fp) const { return reference_encode(fp, projection_); }

  // Entry with the smallest Euclidean distance to z; ties go to the
  // lexicographically smallest SMILES.
  std::size_t nearest(std::span<const double> z) const;

  void save(std::ostream &out) const;
  void save(const std::filesystem::path &path) const;
  static LatentIndex load(std::istream &in);
  static LatentIndex load(const std::filesystem::path &path);

private:
  Projection projection_;
  std::vector<std::string> smiles_;
  std::vector<Fingerprint> fps_;
  std::vector<float> latents_;
};

std::string nn_decode(std::span<const double> z, const LatentIndex &index);

// Decoder over a LatentIndex: every finite vector decodes to its nearest
// entry. Vectors with NaN or infinite components yield failure slots.
class ReferenceDecoder: public Decoder {
public:
  explicit ReferenceDecoder(std::shared_ptr<const LatentIndex> index);

  std::vector<DecodeResult> decode_batch(std::span<const LatentVector> zs) override;
  int latent_dim() const override { return index_->d_latent(); }
  std::string name() const override { return "reference"; }

  const LatentIndex &index() const { return *index_; }

private:
  std::shared_ptr<const LatentIndex> index_;
};

}  // namespace mgb

#endif  // MGBENCH_DECODER_REFERENCE_DECODER_H_
