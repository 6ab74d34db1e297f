//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/fingerprint/fingerprint_store.h"

#include <fstream>

#include "mgbench/util/binary_io.h"

namespace mgb {

void FingerprintStore::write(std::ostream &out) const {
  if (n_bits <= 0 || n_bits % 8 != 0)
    throw FingerprintError("store width must be a positive multiple of 8");
  binio::write_magic(out, "MFP1");
  binio::write_le<std::uint32_t>(out, static_cast<std::uint32_t>(n_bits));
  binio::write_le<std::uint32_t>(out, static_cast<std::uint32_t>(radius));
  binio::write_le<std::uint64_t>(out, records.size());
  for (const FingerprintRecord &r : records) {
    if (r.fp.n_bits() != n_bits)
      throw FingerprintError("record '" + r.id + "' has the wrong fingerprint width");
    binio::write_le<std::uint32_t>(out, static_cast<std::uint32_t>(r.id.size()));
    out.write(r.id.data(), static_cast<std::streamsize>(r.id.size()));
    const auto bytes = r.fp.to_bytes();
    out.write(reinterpret_cast<const char *>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  if (!out)
    throw FingerprintError("failed writing fingerprint store");
}

void FingerprintStore::write(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw FingerprintError("cannot write " + path.string());
  write(out);
}

FingerprintStore FingerprintStore::read(std::istream &in) {
  binio::expect_magic(in, "MFP1");
  FingerprintStore s;
  s.n_bits = static_cast<int>(binio::read_le<std::uint32_t>(in));
  s.radius = static_cast<int>(binio::read_le<std::uint32_t>(in));
  if (s.n_bits <= 0 || s.n_bits % 8 != 0)
    throw binio::FormatError("invalid fingerprint width in store");
  const std::uint64_t count = binio::read_le<std::uint64_t>(in);
  std::vector<std::uint8_t> bytes(s.n_bits / 8);
  for (std::uint64_t i = 0; i < count; ++i) {
    FingerprintRecord r;
    r.id.resize(binio::read_le<std::uint32_t>(in));
    binio::read_bytes(in, r.id.data(), r.id.size());
    binio::read_bytes(in, bytes.data(), bytes.size());
    r.fp = Fingerprint::from_bytes(bytes.data(), s.n_bits, s.radius);
    s.records.push_back(std::move(r));
  }
  return s;
}

FingerprintStore FingerprintStore::read(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FingerprintError("cannot read " + path.string());
  return read(in);
}

}  // namespace mgb
