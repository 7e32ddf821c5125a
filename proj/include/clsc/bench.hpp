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

// Operation counting and timing for the two tag-KEMs.
//
// Counting convention: every scalar multiplication of a group element is
// one EM, every scalar-by-scalar product is one field multiplication,
// inversions are counted separately, and point additions, scalar
// additions and hashing are free. Combined public keys are built in the
// precompute phase and reported as offline work outside the row totals.

#ifndef CLSC_BENCH_HPP_
#define CLSC_BENCH_HPP_

#include <string>
#include <vector>

#include "clsc/hybrid.hpp"
#include "clsc/op_counter.hpp"

namespace clsc {

enum class Role : std::uint8_t { kSender, kRecipient };

std::string_view role_name(Role role);

/// Reference cost row. Offline EM is only nonzero for the unmeasured schemes.
struct ReferenceCostRow {
  std::string_view protocol;
  Role role;
  OpCounts counts;
  bool measured;  // false: carried as a constant, never run
};

/// Eight reference rows: four schemes, sender and recipient.
const std::vector<ReferenceCostRow>& reference_rows();
const ReferenceCostRow& reference_row(Protocol protocol, Role role);

/// Tallies of one instrumented run on the production backend.
struct CountResult {
  Protocol protocol;
  Role role;
  OpCounts online;      // keygen + encap, or decap
  OpCounts precompute;  // combined-key construction
};

CountResult count_sender(Protocol protocol, std::uint64_t seed = 1);
CountResult count_recipient(Protocol protocol, std::uint64_t seed = 1);

struct PhaseTiming {
  std::string phase;
  double median_us = 0;
  double p95_us = 0;
};

struct TimingReport {
  Protocol protocol;
  std::size_t iterations = 0;
  std::vector<PhaseTiming> phases;  // empty when iterations == 0
};

TimingReport timing_bench(Protocol protocol, std::size_t iterations, std::uint64_t seed = 1);

/// Measured-vs-reference table for both roles of both protocols plus the
/// constant rows.
std::string cost_table_text();
std::string cost_table_json();
std::string timing_text(const TimingReport& report);
std::string timing_json(const TimingReport& report);

}  // namespace clsc

#endif  // CLSC_BENCH_HPP_
