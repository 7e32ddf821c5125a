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

// clsc: drives every protocol role from the command line.
//
// Exit codes: 0 ok, 1 usage or I/O, 2 cryptographic rejection,
// 3 key-validation failure.
//
// Test hooks (toy backend only, never for real keys):
//   CLSC_TEST_RNG    rng script, see parse_rng_script()
//   CLSC_TEST_STUBS  vector file whose hash stubs replace the real hashes

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clsc/bench.hpp"
#include "clsc/codec.hpp"
#include "clsc/test_vectors.hpp"

namespace {

using namespace clsc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitReject = 2;
constexpr int kExitKeyValidation = 3;

struct Rejected {};

std::unique_ptr<Rng> make_rng() {
  if (const char* script = std::getenv("CLSC_TEST_RNG")) return parse_rng_script(script);
  return std::make_unique<SystemRng>();
}

SystemParams load_params(const std::string& path) {
  SystemParams params = read_params(read_file(path));
  if (const char* stubs = std::getenv("CLSC_TEST_STUBS")) {
    if (params.group().backend() != BackendId::kToy) {
      throw std::invalid_argument("CLSC_TEST_STUBS is only honoured on the toy backend");
    }
    Bytes text = read_file(stubs);
    params = params.with_stubs(load_stub_table(
        params.group(), std::string_view(reinterpret_cast<const char*>(text.data()), text.size())));
  }
  return params;
}

std::unique_ptr<Clock> make_clock(const std::optional<Timestamp>& now) {
  if (now) return std::make_unique<FixedClock>(*now);
  return std::make_unique<SystemClock>();
}

struct KeyArgs {
  std::string params;
  std::string priv;
  std::string peer_pub;
};

void add_key_args(CLI::App* cmd, KeyArgs& a) {
  cmd->add_option("--params", a.params, "system parameters file")->required();
  cmd->add_option("--priv", a.priv, "own private key file")->required();
  cmd->add_option("--peer-pub", a.peer_pub, "peer public key file")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificateless signcryption tag-KEM tool"};
  app.require_subcommand(1);

  unsigned bits = 256;
  std::string out_params, out_msk;
  auto* setup_cmd = app.add_subcommand("setup", "create system parameters and a master key");
  setup_cmd->add_option("--bits", bits, "256 (ristretto255), 4 or 61 (toy)");
  setup_cmd->add_option("--out-params", out_params)->required();
  setup_cmd->add_option("--out-msk", out_msk)->required();

  std::string msk_path, params_path, id, out;
  auto* extract_cmd = app.add_subcommand("extract", "issue a partial private key");
  extract_cmd->add_option("--msk", msk_path)->required();
  extract_cmd->add_option("--params", params_path)->required();
  extract_cmd->add_option("--id", id)->required();
  extract_cmd->add_option("--out", out)->required();

  std::string partial_path, out_priv, out_pub;
  auto* userkeys_cmd = app.add_subcommand("userkeys", "validate a partial key and build a key pair");
  userkeys_cmd->add_option("--params", params_path)->required();
  userkeys_cmd->add_option("--partial", partial_path)->required();
  userkeys_cmd->add_option("--out-priv", out_priv)->required();
  userkeys_cmd->add_option("--out-pub", out_pub)->required();

  std::string protocol_name_arg = "lsw";
  KeyArgs keys;
  std::string tag_file, in, out_key;
  std::optional<Timestamp> now;
  std::int64_t window = kDefaultFreshnessWindow;
  auto protocol_opt = [&](CLI::App* cmd) {
    cmd->add_option("--protocol", protocol_name_arg, "lsw or dktuts")
        ->check(CLI::IsMember({"lsw", "dktuts"}));
  };

  auto* encap_cmd = app.add_subcommand("encap", "generate K and encapsulate it for a peer");
  protocol_opt(encap_cmd);
  add_key_args(encap_cmd, keys);
  encap_cmd->add_option("--tag-file", tag_file)->required();
  encap_cmd->add_option("--out", out, "encapsulation file")->required();
  encap_cmd->add_option("--out-key", out_key, "symmetric key file");
  encap_cmd->add_option("--now", now, "timestamp override (dktuts)");

  auto* decap_cmd = app.add_subcommand("decap", "verify an encapsulation and recover K");
  protocol_opt(decap_cmd);
  add_key_args(decap_cmd, keys);
  decap_cmd->add_option("--in", in)->required();
  decap_cmd->add_option("--tag-file", tag_file)->required();
  decap_cmd->add_option("--out-key", out_key)->required();
  decap_cmd->add_option("--now", now, "clock override (dktuts)");
  decap_cmd->add_option("--window", window, "freshness window in seconds (dktuts)");

  auto* sc_cmd = app.add_subcommand("signcrypt", "signcrypt a message file");
  protocol_opt(sc_cmd);
  add_key_args(sc_cmd, keys);
  sc_cmd->add_option("--in", in)->required();
  sc_cmd->add_option("--out", out)->required();
  sc_cmd->add_option("--now", now);

  auto* usc_cmd = app.add_subcommand("unsigncrypt", "verify and decrypt a signcrypted file");
  add_key_args(usc_cmd, keys);
  usc_cmd->add_option("--in", in)->required();
  usc_cmd->add_option("--out", out)->required();
  usc_cmd->add_option("--now", now);
  usc_cmd->add_option("--window", window);

  std::string bench_protocol = "all", json_out;
  bool table = false;
  std::size_t iterations = 0;
  auto* bench_cmd = app.add_subcommand("bench", "operation counts and timings");
  bench_cmd->add_option("--protocol", bench_protocol)
      ->check(CLI::IsMember({"lsw", "dktuts", "all"}));
  bench_cmd->add_flag("--table", table, "print the cost table");
  bench_cmd->add_option("--iterations", iterations, "timing iterations (0: skip)");
  bench_cmd->add_option("--json", json_out, "write the report as JSON");

  std::vector<std::string> vector_files;
  auto* vectors_cmd = app.add_subcommand("vectors", "replay test-vector files");
  vectors_cmd->add_option("--check", vector_files)->required()->expected(1, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*setup_cmd) {
      auto rng = make_rng();
      auto [params, msk] = setup(bits, *rng);
      write_file(out_params, write_params(params));
      write_file(out_msk, write_master_key(params, msk), true);
    } else if (*extract_cmd) {
      SystemParams params = load_params(params_path);
      MasterKey msk = read_master_key(params, read_file(msk_path));
      auto rng = make_rng();
      write_file(out, write_partial_key(params, extract_partial_key(msk, params, id, *rng)), true);
    } else if (*userkeys_cmd) {
      SystemParams params = load_params(params_path);
      PartialPrivateKey ppk = read_partial_key(params, read_file(partial_path));
      auto rng = make_rng();
      UserKeyPair pair = assemble_user_keys(params, ppk, *rng);
      write_file(out_priv, write_private_key(params, pair), true);
      write_file(out_pub, write_public_key(params, pair.pk));
    } else if (*encap_cmd) {
      SystemParams params = load_params(keys.params);
      UserKeyPair self = read_private_key(params, read_file(keys.priv));
      CombinedPublicKey peer =
          combine_public_key(params, read_public_key(params, read_file(keys.peer_pub)));
      Bytes tag = read_file(tag_file);
      auto rng = make_rng();
      SymmetricKey key;
      if (parse_protocol(protocol_name_arg) == Protocol::kLsw) {
        auto [k, state] = lsw_symmetric_key_gen(params, self.pk.id, peer, *rng);
        write_file(out, write_encapsulation(params, lsw_encapsulate(params, state, tag, self, *rng)));
        key = k;
      } else {
        auto clock = make_clock(now);
        auto [k, state] = dktuts_symmetric_key_gen(params, self.pk.id, peer, *clock, *rng);
        write_file(out,
                   write_encapsulation(params, dktuts_encapsulate(params, state, tag, self, *rng)));
        key = k;
      }
      if (!out_key.empty()) write_file(out_key, write_symmetric_key(params, key), true);
    } else if (*decap_cmd) {
      SystemParams params = load_params(keys.params);
      UserKeyPair self = read_private_key(params, read_file(keys.priv));
      FullPublicKey peer = read_public_key(params, read_file(keys.peer_pub));
      Bytes tag = read_file(tag_file);
      Bytes phi_file = read_file(in);
      std::optional<SymmetricKey> key;
      try {
        if (parse_protocol(protocol_name_arg) == Protocol::kLsw) {
          key = lsw_decapsulate(params, read_lsw_encapsulation(params, phi_file), tag, peer, self);
        } else {
          auto clock = make_clock(now);
          key = dktuts_decapsulate(params, read_dktuts_encapsulation(params, phi_file), tag, peer,
                                   self, *clock, window);
        }
      } catch (const DecodeError&) {
        throw Rejected{};
      }
      if (!key) throw Rejected{};
      write_file(out_key, write_symmetric_key(params, *key), true);
    } else if (*sc_cmd) {
      SystemParams params = load_params(keys.params);
      UserKeyPair self = read_private_key(params, read_file(keys.priv));
      CombinedPublicKey peer =
          combine_public_key(params, read_public_key(params, read_file(keys.peer_pub)));
      Bytes message = read_file(in);
      auto rng = make_rng();
      auto clock = make_clock(now);
      SigncryptedMessage sc =
          signcrypt(params, parse_protocol(protocol_name_arg), message, self, peer, *rng, clock.get());
      write_file(out, write_signcrypted(params, sc));
    } else if (*usc_cmd) {
      SystemParams params = load_params(keys.params);
      UserKeyPair self = read_private_key(params, read_file(keys.priv));
      FullPublicKey peer = read_public_key(params, read_file(keys.peer_pub));
      Bytes sc_file = read_file(in);
      auto clock = make_clock(now);
      std::optional<Bytes> message;
      try {
        message = unsigncrypt(params, read_signcrypted(params, sc_file), peer, self, clock.get(),
                              window);
      } catch (const DecodeError&) {
        throw Rejected{};
      }
      if (!message) throw Rejected{};
      write_file(out, *message);
    } else if (*bench_cmd) {
      std::vector<Protocol> protocols;
      if (bench_protocol != "dktuts") protocols.push_back(Protocol::kLsw);
      if (bench_protocol != "lsw") protocols.push_back(Protocol::kDktuts);
      if (table || iterations == 0) std::cout << cost_table_text();
      std::string json = "{\n\"costs\": " + cost_table_json() + ",\n\"timings\": [";
      for (std::size_t i = 0; i < protocols.size(); ++i) {
        TimingReport report = timing_bench(protocols[i], iterations);
        if (iterations > 0) std::cout << timing_text(report);
        json += (i ? ",\n" : "\n") + timing_json(report);
      }
      json += "\n]\n}\n";
      if (!json_out.empty()) write_file(json_out, as_bytes(json));
    } else if (*vectors_cmd) {
      bool all_ok = true;
      for (const auto& path : vector_files) {
        VectorReport r = check_vector_file(path);
        std::cout << path << ": " << r.protocol << ", " << r.checked << " values checked, "
                  << (r.ok() ? "ok" : "MISMATCH") << '\n';
        for (const auto& m : r.mismatches) std::cout << "  " << m << '\n';
        all_ok &= r.ok();
      }
      return all_ok ? kExitOk : kExitReject;
    }
  } catch (const Rejected&) {
    std::cerr << "rejected\n";
    return kExitReject;
  } catch (const KeyValidationError& e) {
    std::cerr << "key validation failed: " << e.what() << '\n';
    return kExitKeyValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
