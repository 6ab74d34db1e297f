//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/bridge/generation_set.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "mgbench/molgraph/corpus.h"

namespace mgb {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

template <typename T>
T parse_number(std::string_view s, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw IoError("generation set line " + std::to_string(line_no) + ": bad number '" +
                  std::string(s) + "'");
  return value;
}

}  // namespace

void write_generation_set(std::ostream &out, const GenerationSet &set) {
  char tbuf[32];
  for (const GeneratedCandidate &c : set) {
    std::snprintf(tbuf, sizeof tbuf, "%.17g", c.t);
    out << c.grid_index << '\t' << c.perturb_index << '\t' << tbuf << '\t' << c.raw_smiles << '\t'
        << (c.valid ? 1 : 0) << '\t' << c.canonical << '\t' << c.decode_micros << '\n';
  }
}

void write_generation_set(const std::filesystem::path &path, const GenerationSet &set) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot open " + path.string() + " for writing");
  write_generation_set(out, set);
  if (!out)
    throw IoError("write failed: " + path.string());
}

GenerationSet read_generation_set(std::istream &in) {
  GenerationSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    const auto f = split_tabs(line);
    if (f.size() != 7)
      throw IoError("generation set line " + std::to_string(line_no) + ": expected 7 fields, got " +
                    std::to_string(f.size()));
    GeneratedCandidate c;
    c.grid_index = parse_number<int>(f[0], line_no);
    c.perturb_index = parse_number<int>(f[1], line_no);
    c.t = parse_number<double>(f[2], line_no);
    c.raw_smiles = std::string(f[3]);
    if (f[4] != "0" && f[4] != "1")
      throw IoError("generation set line " + std::to_string(line_no) + ": valid_flag must be 0 or 1");
    c.valid = f[4] == "1";
    c.canonical = std::string(f[5]);
    c.decode_micros = parse_number<std::int64_t>(f[6], line_no);
    set.push_back(std::move(c));
  }
  return set;
}

GenerationSet read_generation_set(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open " + path.string());
  return read_generation_set(in);
}

}  // namespace mgb
