// Copyright 2026 The clsc-tkem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clsc/hybrid.hpp"

#include <sodium.h>

namespace clsc {

std::string_view protocol_name(Protocol p) {
  return p == Protocol::kLsw ? "lsw" : "dktuts";
}

Protocol parse_protocol(std::string_view name) {
  if (name == "lsw") return Protocol::kLsw;
  if (name == "dktuts") return Protocol::kDktuts;
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

SigncryptedMessage signcrypt(const SystemParams& params, Protocol protocol, ByteView message,
                             const UserKeyPair& sender, const CombinedPublicKey& receiver,
                             Rng& rng, const Clock* clock) {
  const HashSuite& suite = params.suite();
  SigncryptedMessage out;
  out.protocol = protocol;
  if (protocol == Protocol::kLsw) {
    auto [key, state] = lsw_symmetric_key_gen(params, sender.pk.id, receiver, rng);
    SymmetricKey dem = suite.dem_key(key);
    out.dem_ciphertext = suite.sym_encrypt(dem, message);
    out.encapsulation = lsw_encapsulate(params, state, out.dem_ciphertext, sender, rng);
    sodium_memzero(dem.bytes.data(), dem.bytes.size());
    sodium_memzero(key.bytes.data(), key.bytes.size());
    return out;
  }
  if (clock == nullptr) throw std::invalid_argument("dktuts signcryption needs a clock");
  auto [key, state] = dktuts_symmetric_key_gen(params, sender.pk.id, receiver, *clock, rng);
  SymmetricKey dem = suite.dem_key(key);
  out.dem_ciphertext = suite.sym_encrypt(dem, message);
  out.encapsulation = dktuts_encapsulate(params, state, out.dem_ciphertext, sender, rng);
  sodium_memzero(dem.bytes.data(), dem.bytes.size());
  sodium_memzero(key.bytes.data(), key.bytes.size());
  return out;
}

std::optional<Bytes> unsigncrypt(const SystemParams& params, const SigncryptedMessage& sc,
                                 const FullPublicKey& sender, const UserKeyPair& recipient,
                                 const Clock* clock, std::int64_t window) {
  std::optional<SymmetricKey> key;
  if (sc.protocol == Protocol::kLsw) {
    const auto* phi = std::get_if<LswEncapsulation>(&sc.encapsulation);
    if (phi == nullptr) return std::nullopt;
    key = lsw_decapsulate(params, *phi, sc.dem_ciphertext, sender, recipient);
  } else {
    const auto* phi = std::get_if<DktutsEncapsulation>(&sc.encapsulation);
    if (phi == nullptr) return std::nullopt;
    if (clock == nullptr) throw std::invalid_argument("dktuts unsigncryption needs a clock");
    key = dktuts_decapsulate(params, *phi, sc.dem_ciphertext, sender, recipient, *clock, window);
  }
  if (!key) return std::nullopt;
  SymmetricKey dem = params.suite().dem_key(*key);
  std::optional<Bytes> message;
  try {
    message = params.suite().sym_decrypt(dem, sc.dem_ciphertext);
  } catch (const DecryptFailure&) {
    message.reset();
  }
  sodium_memzero(dem.bytes.data(), dem.bytes.size());
  return message;
}

}  // namespace clsc
