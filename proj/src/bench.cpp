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

#include "clsc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace clsc {

namespace {

constexpr Timestamp kBenchTime = 1700000000;
constexpr std::string_view kTag = "bench-tag";

OpCounts row(std::uint64_t em_on, std::uint64_t em_off, std::uint64_t inv, std::uint64_t mult,
             std::uint64_t enc, std::uint64_t dec) {
  OpCounts c;
  c.em_online = em_on;
  c.em_offline = em_off;
  c.field_inversions = inv;
  c.field_mults = mult;
  c.sym_encryptions = enc;
  c.sym_decryptions = dec;
  return c;
}

struct Fixture {
  SystemParams params;
  UserKeyPair alice;
  UserKeyPair bob;
};

Fixture make_fixture(SeededRng& rng) {
  auto [params, msk] = setup(make_ristretto255(), rng);
  UserKeyPair alice = assemble_user_keys(params, extract_partial_key(msk, params, "alice", rng), rng);
  UserKeyPair bob = assemble_user_keys(params, extract_partial_key(msk, params, "bob", rng), rng);
  return {params, std::move(alice), std::move(bob)};
}

// Produces phi for `protocol` from alice to bob on uninstrumented params.
std::variant<LswEncapsulation, DktutsEncapsulation> honest_phi(const Fixture& f,
                                                               Protocol protocol, Rng& rng,
                                                               const Clock& clock) {
  CombinedPublicKey bob = combine_public_key(f.params, f.bob.pk);
  if (protocol == Protocol::kLsw) {
    auto [k, state] = lsw_symmetric_key_gen(f.params, f.alice.pk.id, bob, rng);
    return lsw_encapsulate(f.params, state, as_bytes(kTag), f.alice, rng);
  }
  auto [k, state] = dktuts_symmetric_key_gen(f.params, f.alice.pk.id, bob, clock, rng);
  return dktuts_encapsulate(f.params, state, as_bytes(kTag), f.alice, rng);
}

std::string counts_cell(const OpCounts& c, Role role) {
  std::ostringstream os;
  os << c.em_online << "EM/" << c.em_offline << "EM inv=" << c.field_inversions
     << " mult=" << c.field_mults << ' '
     << (role == Role::kSender ? "enc=" : "dec=")
     << (role == Role::kSender ? c.sym_encryptions : c.sym_decryptions);
  return os.str();
}

nlohmann::json counts_json(const OpCounts& c) {
  return {{"em_online", c.em_online},        {"em_offline", c.em_offline},
          {"field_inversions", c.field_inversions}, {"field_mults", c.field_mults},
          {"sym_encryptions", c.sym_encryptions},   {"sym_decryptions", c.sym_decryptions}};
}

CountResult count(Protocol protocol, Role role) {
  return role == Role::kSender ? count_sender(protocol) : count_recipient(protocol);
}

double percentile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  // Nearest-rank.
  std::size_t rank = static_cast<std::size_t>(p * static_cast<double>(v.size()) + 0.999999);
  rank = std::clamp<std::size_t>(rank, 1, v.size());
  return v[rank - 1];
}

}  // namespace

std::string_view role_name(Role role) { return role == Role::kSender ? "sender" : "recipient"; }

const std::vector<ReferenceCostRow>& reference_rows() {
  static const std::vector<ReferenceCostRow> rows = {
      {"CLSC-TKEM", Role::kSender, row(2, 0, 0, 2, 0, 0), false},
      {"eCLSC-TKEM", Role::kSender, row(4, 2, 0, 0, 0, 0), false},
      {"LSW-CLSC-TKEM", Role::kSender, row(3, 0, 1, 2, 0, 0), true},
      {"DKTUTS-CLSC-TKEM", Role::kSender, row(2, 0, 1, 1, 1, 0), true},
      {"CLSC-TKEM", Role::kRecipient, row(5, 3, 0, 0, 0, 0), false},
      {"eCLSC-TKEM", Role::kRecipient, row(4, 2, 0, 0, 0, 0), false},
      {"LSW-CLSC-TKEM", Role::kRecipient, row(3, 0, 1, 0, 0, 0), true},
      {"DKTUTS-CLSC-TKEM", Role::kRecipient, row(2, 0, 0, 1, 0, 1), true},
  };
  return rows;
}

const ReferenceCostRow& reference_row(Protocol protocol, Role role) {
  std::string_view name = protocol == Protocol::kLsw ? "LSW-CLSC-TKEM" : "DKTUTS-CLSC-TKEM";
  for (const auto& r : reference_rows()) {
    if (r.protocol == name && r.role == role) return r;
  }
  throw std::logic_error("missing reference row");
}

CountResult count_sender(Protocol protocol, std::uint64_t seed) {
  SeededRng rng(seed);
  Fixture f = make_fixture(rng);
  FixedClock clock(kBenchTime);
  OpCounter counter;
  SystemParams inst = f.params.instrumented(counter);

  counter.begin(Phase::kPrecompute);
  CombinedPublicKey bob = combine_public_key(inst, f.bob.pk);
  if (protocol == Protocol::kLsw) {
    counter.begin(Phase::kKeyGen);
    auto [k, state] = lsw_symmetric_key_gen(inst, f.alice.pk.id, bob, rng);
    counter.begin(Phase::kEncap);
    lsw_encapsulate(inst, state, as_bytes(kTag), f.alice, rng);
  } else {
    counter.begin(Phase::kKeyGen);
    auto [k, state] = dktuts_symmetric_key_gen(inst, f.alice.pk.id, bob, clock, rng);
    counter.begin(Phase::kEncap);
    dktuts_encapsulate(inst, state, as_bytes(kTag), f.alice, rng);
  }
  return {protocol, Role::kSender,
          counter.in_phase(Phase::kKeyGen) + counter.in_phase(Phase::kEncap),
          counter.in_phase(Phase::kPrecompute)};
}

CountResult count_recipient(Protocol protocol, std::uint64_t seed) {
  SeededRng rng(seed);
  Fixture f = make_fixture(rng);
  FixedClock clock(kBenchTime);
  auto phi = honest_phi(f, protocol, rng, clock);
  OpCounter counter;
  SystemParams inst = f.params.instrumented(counter);

  std::optional<SymmetricKey> key;
  if (protocol == Protocol::kLsw) {
    counter.begin(Phase::kPrecompute);
    CombinedPublicKey alice = combine_public_key(inst, f.alice.pk);
    counter.begin(Phase::kDecap);
    key = lsw_decapsulate(inst, std::get<LswEncapsulation>(phi), as_bytes(kTag), alice, f.bob);
  } else {
    counter.begin(Phase::kDecap);
    key = dktuts_decapsulate(inst, std::get<DktutsEncapsulation>(phi), as_bytes(kTag),
                             f.alice.pk, f.bob, clock);
  }
  if (!key) throw std::logic_error("honest decapsulation rejected");
  return {protocol, Role::kRecipient, counter.in_phase(Phase::kDecap),
          counter.in_phase(Phase::kPrecompute)};
}

TimingReport timing_bench(Protocol protocol, std::size_t iterations, std::uint64_t seed) {
  TimingReport report{protocol, iterations, {}};
  if (iterations == 0) return report;
  SeededRng rng(seed);
  Fixture f = make_fixture(rng);
  FixedClock clock(kBenchTime);
  CombinedPublicKey bob = combine_public_key(f.params, f.bob.pk);
  CombinedPublicKey alice = combine_public_key(f.params, f.alice.pk);
  std::vector<double> keygen, encap, decap;
  using Micros = std::chrono::duration<double, std::micro>;
  for (std::size_t i = 0; i < iterations; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::optional<SymmetricKey> sent, got;
    std::chrono::steady_clock::time_point t1, t2, t3;
    if (protocol == Protocol::kLsw) {
      auto [k, state] = lsw_symmetric_key_gen(f.params, f.alice.pk.id, bob, rng);
      t1 = std::chrono::steady_clock::now();
      auto phi = lsw_encapsulate(f.params, state, as_bytes(kTag), f.alice, rng);
      t2 = std::chrono::steady_clock::now();
      got = lsw_decapsulate(f.params, phi, as_bytes(kTag), alice, f.bob);
      t3 = std::chrono::steady_clock::now();
      sent = k;
    } else {
      auto [k, state] = dktuts_symmetric_key_gen(f.params, f.alice.pk.id, bob, clock, rng);
      t1 = std::chrono::steady_clock::now();
      auto phi = dktuts_encapsulate(f.params, state, as_bytes(kTag), f.alice, rng);
      t2 = std::chrono::steady_clock::now();
      got = dktuts_decapsulate(f.params, phi, as_bytes(kTag), f.alice.pk, f.bob, clock);
      t3 = std::chrono::steady_clock::now();
      sent = k;
    }
    if (got != sent) throw std::logic_error("honest decapsulation rejected");
    keygen.push_back(Micros(t1 - t0).count());
    encap.push_back(Micros(t2 - t1).count());
    decap.push_back(Micros(t3 - t2).count());
  }
  for (auto& [name, samples] : {std::pair{"keygen", &keygen}, {"encap", &encap}, {"decap", &decap}}) {
    report.phases.push_back({name, percentile(*samples, 0.5), percentile(*samples, 0.95)});
  }
  return report;
}

std::string cost_table_text() {
  std::ostringstream os;
  for (Role role : {Role::kSender, Role::kRecipient}) {
    os << role_name(role) << '\n';
    for (const auto& r : reference_rows()) {
      if (r.role != role) continue;
      char line[160];
      std::snprintf(line, sizeof line, "  %-18s reference %-30s", std::string(r.protocol).c_str(),
                    counts_cell(r.counts, role).c_str());
      os << line;
      if (!r.measured) {
        os << " measured (not implemented)\n";
        continue;
      }
      Protocol p = r.protocol == "LSW-CLSC-TKEM" ? Protocol::kLsw : Protocol::kDktuts;
      CountResult m = count(p, role);
      os << " measured " << counts_cell(m.online, role)
         << (m.online == r.counts ? "  match" : "  MISMATCH")
         << "  precompute " << m.precompute.em_offline << "EM\n";
    }
  }
  return os.str();
}

std::string cost_table_json() {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : reference_rows()) {
    nlohmann::json j = {{"protocol", r.protocol},
                        {"role", role_name(r.role)},
                        {"reference", counts_json(r.counts)}};
    if (r.measured) {
      Protocol p = r.protocol == "LSW-CLSC-TKEM" ? Protocol::kLsw : Protocol::kDktuts;
      CountResult m = count(p, r.role);
      j["measured"] = counts_json(m.online);
      j["precompute"] = counts_json(m.precompute);
      j["match"] = m.online == r.counts;
    } else {
      j["measured"] = nullptr;
    }
    rows.push_back(std::move(j));
  }
  return nlohmann::json{{"backend", "ristretto255"}, {"rows", rows}}.dump(2);
}

std::string timing_text(const TimingReport& report) {
  std::ostringstream os;
  os << protocol_name(report.protocol) << " iterations=" << report.iterations << '\n';
  for (const auto& p : report.phases) {
    char line[96];
    std::snprintf(line, sizeof line, "  %-7s median %9.1f us  p95 %9.1f us\n", p.phase.c_str(),
                  p.median_us, p.p95_us);
    os << line;
  }
  return os.str();
}

std::string timing_json(const TimingReport& report) {
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& p : report.phases) {
    phases.push_back({{"phase", p.phase}, {"median_us", p.median_us}, {"p95_us", p.p95_us}});
  }
  return nlohmann::json{{"protocol", protocol_name(report.protocol)},
                        {"iterations", report.iterations},
                        {"phases", phases}}
      .dump(2);
}

}  // namespace clsc
