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

#ifndef CLSC_RNG_HPP_
#define CLSC_RNG_HPP_

#include <array>
#include <cstdint>
#include <deque>

#include "clsc/common.hpp"
#include "clsc/group.hpp"

namespace clsc {

class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// OS randomness through libsodium.
class SystemRng final : public Rng {
 public:
  SystemRng();
  void fill(std::span<std::uint8_t> out) override;
};

// ChaCha20 keystream under a key derived from `seed`. Same seed, same
// sequence of fill() calls -> same bytes.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(std::uint64_t seed);
  void fill(std::span<std::uint8_t> out) override;

 private:
  std::array<std::uint8_t, 32> key_{};
  std::uint64_t calls_ = 0;
};

// Replays queued blocks, one per fill() call. A block must match the
// requested size exactly. Used to force hand-chosen nonces in vectors.
class ScriptedRng final : public Rng {
 public:
  // Queues a 64-byte block that random_nonzero_scalar reduces to v.
  ScriptedRng& push_scalar(std::uint64_t v);
  ScriptedRng& push_bytes(Bytes block);
  std::size_t remaining() const { return queue_.size(); }

  void fill(std::span<std::uint8_t> out) override;

 private:
  std::deque<Bytes> queue_;
};

/// Uniform scalar in [1, q-1]: reduce 64 random bytes, redraw on zero.
Scalar random_nonzero_scalar(const Group& group, Rng& rng);

}  // namespace clsc

#endif  // CLSC_RNG_HPP_
