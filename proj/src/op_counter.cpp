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

#include "clsc/op_counter.hpp"

namespace clsc {

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kKeyGen:
      return "keygen";
    case Phase::kEncap:
      return "encap";
    case Phase::kDecap:
      return "decap";
    case Phase::kPrecompute:
      return "precompute";
  }
  return "unknown";
}

OpCounts& OpCounts::operator+=(const OpCounts& other) {
  em_online += other.em_online;
  em_offline += other.em_offline;
  field_inversions += other.field_inversions;
  field_mults += other.field_mults;
  sym_encryptions += other.sym_encryptions;
  sym_decryptions += other.sym_decryptions;
  return *this;
}

void OpCounter::count_scalar_mult() {
  if (phase_ == Phase::kPrecompute) {
    ++current().em_offline;
  } else {
    ++current().em_online;
  }
}

OpCounts OpCounter::total() const {
  OpCounts sum;
  for (const auto& c : per_phase_) sum += c;
  return sum;
}

void OpCounter::reset() {
  per_phase_ = {};
  phase_ = Phase::kKeyGen;
}

}  // namespace clsc
