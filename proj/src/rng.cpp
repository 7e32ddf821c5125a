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

#include "clsc/rng.hpp"

#include <sodium.h>

#include <algorithm>

namespace clsc {

SystemRng::SystemRng() {
  if (sodium_init() < 0) throw Error("libsodium initialization failed");
}

void SystemRng::fill(std::span<std::uint8_t> out) { randombytes_buf(out.data(), out.size()); }

SeededRng::SeededRng(std::uint64_t seed) {
  std::array<std::uint8_t, 8> le{};
  for (int i = 0; i < 8; ++i) le[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  crypto_generichash(key_.data(), key_.size(), le.data(), le.size(), nullptr, 0);
}

void SeededRng::fill(std::span<std::uint8_t> out) {
  std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  for (int i = 0; i < 8; ++i) nonce[i] = static_cast<std::uint8_t>(calls_ >> (8 * i));
  ++calls_;
  crypto_stream_chacha20_ietf(out.data(), out.size(), nonce.data(), key_.data());
}

ScriptedRng& ScriptedRng::push_scalar(std::uint64_t v) {
  Bytes block(64, 0);
  for (int i = 0; i < 8; ++i) block[i] = static_cast<std::uint8_t>(v >> (8 * i));
  queue_.push_back(std::move(block));
  return *this;
}

ScriptedRng& ScriptedRng::push_bytes(Bytes block) {
  queue_.push_back(std::move(block));
  return *this;
}

void ScriptedRng::fill(std::span<std::uint8_t> out) {
  if (queue_.empty()) throw Error("scripted rng exhausted");
  if (queue_.front().size() != out.size()) {
    throw Error("scripted rng: next block has " + std::to_string(queue_.front().size()) +
                " bytes, caller asked for " + std::to_string(out.size()));
  }
  std::copy(queue_.front().begin(), queue_.front().end(), out.begin());
  queue_.pop_front();
}

Scalar random_nonzero_scalar(const Group& group, Rng& rng) {
  std::array<std::uint8_t, 64> wide{};
  for (;;) {
    rng.fill(wide);
    Scalar s = group.scalar_from_wide(wide);
    if (!s.is_zero()) {
      sodium_memzero(wide.data(), wide.size());
      return s;
    }
  }
}

}  // namespace clsc
