//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "mgbench/decoder/protocol.h"

#include "json.hpp"

namespace mgb::protocol {
namespace {

using nlohmann::json;

json parse_object(std::string_view frame) {
  json j = json::parse(frame, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw ProtocolError("malformed frame: " + std::string(frame.substr(0, 120)));
  return j;
}

std::uint64_t get_id(const json &j) {
  const auto it = j.find("id");
  if (it == j.end() || !it->is_number_unsigned())
    throw ProtocolError("frame lacks an unsigned integer id");
  return it->get<std::uint64_t>();
}

}  // namespace

std::string encode_handshake(const Handshake &h) {
  return json{{"latent_dim", h.latent_dim}, {"name", h.name}}.dump();
}

std::string encode_request(std::uint64_t id, const LatentVector &z) {
  return json{{"id", id}, {"z", z}}.dump();
}

std::string encode_response(const Response &r) {
  json j{{"id", r.id}, {"ok", r.ok}};
  if (r.ok)
    j["smiles"] = r.smiles;
  else if (!r.error.empty())
    j["error"] = r.error;
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

Handshake parse_handshake(std::string_view frame) {
  const json j = parse_object(frame);
  const auto dim = j.find("latent_dim");
  const auto name = j.find("name");
  if (dim == j.end() || !dim->is_number_integer() || dim->get<long long>() <= 0)
    throw ProtocolError("handshake lacks a positive latent_dim");
  if (name == j.end() || !name->is_string())
    throw ProtocolError("handshake lacks a name");
  return {dim->get<int>(), name->get<std::string>()};
}

Request parse_request(std::string_view frame) {
  const json j = parse_object(frame);
  Request r;
  r.id = get_id(j);
  const auto z = j.find("z");
  if (z == j.end() || !z->is_array())
    throw ProtocolError("request lacks a z array");
  r.z.reserve(z->size());
  for (const json &v : *z) {
    if (!v.is_number())
      throw ProtocolError("request z holds a non-number");
    r.z.push_back(v.get<double>());
  }
  return r;
}

Response parse_response(std::string_view frame) {
  const json j = parse_object(frame);
  Response r;
  r.id = get_id(j);
  const auto ok = j.find("ok");
  if (ok == j.end() || !ok->is_boolean())
    throw ProtocolError("response lacks a boolean ok");
  r.ok = ok->get<bool>();
  const auto smiles = j.find("smiles");
  if (r.ok) {
    if (smiles == j.end() || !smiles->is_string())
      throw ProtocolError("ok response lacks smiles");
    r.smiles = smiles->get<std::string>();
  }
  if (const auto err = j.find("error"); err != j.end() && err->is_string())
    r.error = err->get<std::string>();
  return r;
}

}  // namespace mgb::protocol
