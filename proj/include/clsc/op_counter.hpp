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

#ifndef CLSC_OP_COUNTER_HPP_
#define CLSC_OP_COUNTER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace clsc {

enum class Phase : std::uint8_t { kKeyGen = 0, kEncap = 1, kDecap = 2, kPrecompute = 3 };

std::string_view phase_name(Phase phase);

// Tally of the operations priced in the cost tables. Scalar
// multiplications are "EM"; scalar-by-scalar products are field
// multiplications; additions, hashing and point additions are free.
struct OpCounts {
  std::uint64_t em_online = 0;
  std::uint64_t em_offline = 0;
  std::uint64_t field_inversions = 0;
  std::uint64_t field_mults = 0;
  std::uint64_t sym_encryptions = 0;
  std::uint64_t sym_decryptions = 0;

  OpCounts& operator+=(const OpCounts& other);
  friend OpCounts operator+(OpCounts a, const OpCounts& b) { return a += b; }
  bool operator==(const OpCounts&) const = default;
  bool is_zero() const { return *this == OpCounts{}; }
};

// Per-phase counter. A scalar multiplication made while the precompute
// phase is active is tallied as offline; every other phase is online.
// Not thread-safe: each instrumented run owns its own counter.
class OpCounter {
 public:
  void begin(Phase phase) { phase_ = phase; }
  Phase phase() const { return phase_; }

  void count_scalar_mult();
  void count_field_inversion() { ++current().field_inversions; }
  void count_field_mult() { ++current().field_mults; }
  void count_encryption() { ++current().sym_encryptions; }
  void count_decryption() { ++current().sym_decryptions; }

  const OpCounts& in_phase(Phase phase) const {
    return per_phase_[static_cast<std::size_t>(phase)];
  }
  OpCounts total() const;
  void reset();

 private:
  OpCounts& current() { return per_phase_[static_cast<std::size_t>(phase_)]; }

  Phase phase_ = Phase::kKeyGen;
  std::array<OpCounts, 4> per_phase_{};
};

}  // namespace clsc

#endif  // CLSC_OP_COUNTER_HPP_
