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

#ifndef CLSC_HYBRID_HPP_
#define CLSC_HYBRID_HPP_

#include <optional>
#include <string_view>
#include <variant>

#include "clsc/dktuts.hpp"
#include "clsc/lsw.hpp"

namespace clsc {

enum class Protocol : std::uint8_t { kLsw = 1, kDktuts = 2 };

std::string_view protocol_name(Protocol p);
/// "lsw" / "dktuts"; throws std::invalid_argument otherwise.
Protocol parse_protocol(std::string_view name);

/// Tag-KEM + DEM output. The DEM ciphertext is the encapsulation's tag.
struct SigncryptedMessage {
  Protocol protocol = Protocol::kLsw;
  std::variant<LswEncapsulation, DktutsEncapsulation> encapsulation;
  Bytes dem_ciphertext;
};

/// K <- SymmetricKeyGen; c = AEAD(dem_key(K), message); phi <- Encapsulation
/// with tag c. DKTUTS needs `clock`; std::invalid_argument without one.
SigncryptedMessage signcrypt(const SystemParams& params, Protocol protocol, ByteView message,
                             const UserKeyPair& sender, const CombinedPublicKey& receiver,
                             Rng& rng, const Clock* clock = nullptr);

/// The message, or nullopt on any failure.
std::optional<Bytes> unsigncrypt(const SystemParams& params, const SigncryptedMessage& sc,
                                 const FullPublicKey& sender, const UserKeyPair& recipient,
                                 const Clock* clock = nullptr,
                                 std::int64_t window = kDefaultFreshnessWindow);

}  // namespace clsc

#endif  // CLSC_HYBRID_HPP_
