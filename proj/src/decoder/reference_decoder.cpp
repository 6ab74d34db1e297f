//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/decoder/reference_decoder.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <unordered_set>

#include "mgbench/fingerprint/morgan.h"
#include "mgbench/molgraph/smiles.h"
#include "mgbench/util/binary_io.h"

namespace mgb {

Projection::Projection(std::uint64_t seed, int d_fp, int d_latent)
    : seed_(seed), d_fp_(d_fp), d_latent_(d_latent) {
  if (d_fp <= 0 || d_latent <= 0)
    throw LatentIndexError("projection dimensions must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  values_.resize(static_cast<std::size_t>(d_fp) * d_latent);
  for (double &v : values_)
    v = normal(rng);
}

LatentVector reference_encode(const Fingerprint &fp, const Projection &projection) {
  if (fp.n_bits() != projection.d_fp())
    throw LatentIndexError("fingerprint width " + std::to_string(fp.n_bits()) +
                           " does not match projection rows " +
                           std::to_string(projection.d_fp()));
  const std::vector<int> bits = fp.on_bits();
  if (bits.empty())
    throw LatentIndexError("cannot encode an empty fingerprint");
  LatentVector z(projection.d_latent(), 0.0);
  for (int bit : bits) {
    const auto row = projection.row(bit);
    for (std::size_t j = 0; j < z.size(); ++j)
      z[j] += row[j];
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(bits.size()));
  for (double &v : z)
    v = std::tanh(v * scale);
  return z;
}

LatentIndex LatentIndex::build(std::span<const Molecule> corpus, std::uint64_t seed, int d_latent,
                               int n_bits, int threads) {
  if (corpus.empty())
    throw LatentIndexError("cannot build an index from an empty corpus");
  LatentIndex index;
  index.projection_ = Projection(seed, n_bits, d_latent);

  std::unordered_set<std::string> seen;
  std::vector<Molecule> kept;
  for (const Molecule &mol : corpus) {
    std::string canonical = canonical_smiles(mol);
    if (!seen.insert(canonical).second)
      continue;
    index.smiles_.push_back(std::move(canonical));
    kept.push_back(mol);
  }
  index.fps_ = morgan_fingerprints(kept, kDefaultFingerprintRadius, n_bits, threads);
  index.latents_.reserve(kept.size() * static_cast<std::size_t>(d_latent));
  for (const Fingerprint &fp : index.fps_) {
    for (double v : index.encode(fp))
      index.latents_.push_back(static_cast<float>(v));
  }
  return index;
}

LatentVector LatentIndex::latent(std::size_t i) const {
  const std::size_t d = static_cast<std::size_t>(d_latent());
  return LatentVector(latents_.begin() + i * d, latents_.begin() + (i + 1) * d);
}

std::size_t LatentIndex::nearest(std::span<const double> z) const {
  if (smiles_.empty())
    throw LatentIndexError("nearest-neighbour query on an empty index");
  const std::size_t d = static_cast<std::size_t>(d_latent());
  if (z.size() != d)
    throw LatentIndexError("query dimension " + std::to_string(z.size()) +
                           " does not match index dimension " + std::to_string(d));
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < smiles_.size(); ++i) {
    const float *row = latents_.data() + i * d;
    double dist = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = z[j] - static_cast<double>(row[j]);
      dist += diff * diff;
    }
    if (dist < best_dist || (dist == best_dist && smiles_[i] < smiles_[best])) {
      best = i;
      best_dist = dist;
    }
  }
  return best;
}

void LatentIndex::save(std::ostream &out) const {
  using namespace binio;
  write_magic(out, "LIX1");
  write_le<std::uint64_t>(out, seed());
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(d_latent()));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(d_fp()));
  write_le<std::uint64_t>(out, size());
  const std::size_t d = static_cast<std::size_t>(d_latent());
  for (std::size_t i = 0; i < size(); ++i) {
    write_le<std::uint32_t>(out, static_cast<std::uint32_t>(smiles_[i].size()));
    out.write(smiles_[i].data(), static_cast<std::streamsize>(smiles_[i].size()));
    const auto bytes = fps_[i].to_bytes();
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    for (std::size_t j = 0; j < d; ++j)
      write_le<float>(out, latents_[i * d + j]);
  }
}

void LatentIndex::save(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw LatentIndexError("cannot open " + path.string() + " for writing");
  save(out);
  if (!out)
    throw LatentIndexError("write failed: " + path.string());
}

LatentIndex LatentIndex::load(std::istream &in) {
  using namespace binio;
  expect_magic(in, "LIX1");
  const auto seed = read_le<std::uint64_t>(in);
  const auto d_latent = read_le<std::uint32_t>(in);
  const auto d_fp = read_le<std::uint32_t>(in);
  const auto count = read_le<std::uint64_t>(in);
  if (d_latent == 0 || d_fp == 0 || d_fp % 8 != 0 || d_latent > (1u << 20) || d_fp > (1u << 24))
    throw FormatError("implausible index dimensions");

  LatentIndex index;
  index.projection_ = Projection(seed, static_cast<int>(d_fp), static_cast<int>(d_latent));
  std::vector<std::uint8_t> bytes(d_fp / 8);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto len = read_le<std::uint32_t>(in);
    if (len > (1u << 20))
      throw FormatError("implausible SMILES length in index");
    std::string smiles(len, '\0');
    read_bytes(in, smiles.data(), len);
    read_bytes(in, bytes.data(), bytes.size());
    index.smiles_.push_back(std::move(smiles));
    index.fps_.push_back(Fingerprint::from_bytes(bytes.data(), static_cast<int>(d_fp),
                                                 kDefaultFingerprintRadius));
    for (std::uint32_t j = 0; j < d_latent; ++j)
      index.latents_.push_back(read_le<float>(in));
  }
  return index;
}

LatentIndex LatentIndex::load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw LatentIndexError("cannot open " + path.string());
  return load(in);
}

std::string nn_decode(std::span<const double> z, const LatentIndex &index) {
  return index.smiles(index.nearest(z));
}

ReferenceDecoder::ReferenceDecoder(std::shared_ptr<const LatentIndex> index)
    : index_(std::move(index)) {
  if (!index_ || index_->size() == 0)
    throw LatentIndexError("reference decoder needs a non-empty index");
}

std::vector<DecodeResult> ReferenceDecoder::decode_batch(std::span<const LatentVector> zs) {
  std::vector<DecodeResult> out;
  out.reserve(zs.size());
  for (const LatentVector &z : zs) {
    bool finite = true;
    for (double v : z)
      finite = finite && std::isfinite(v);
    if (!finite) {
      out.emplace_back(std::nullopt);
      continue;
    }
    out.emplace_back(index_->smiles(index_->nearest(z)));
  }
  return out;
}

}  // namespace mgb
