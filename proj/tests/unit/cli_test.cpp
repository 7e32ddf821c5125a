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

// Drives the clsc binary end to end and compares its files against the
// library.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "clsc/codec.hpp"
#include "clsc/test_vectors.hpp"

namespace clsc {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("clsc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs `clsc args` in the scratch directory; returns the exit code.
  int run(const std::string& args, const std::string& env = "") {
    std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" CLSC_CLI_PATH "' " + args +
                      " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string stubs(const std::string& name) {
    return "CLSC_TEST_STUBS='" CLSC_VECTOR_DIR "/" + name + "'";
  }
  Bytes file(const std::string& name) { return read_file(dir_ / name); }
  void put(const std::string& name, std::string_view data) { write_file(dir_ / name, as_bytes(data)); }

  // setup -> extract -> userkeys for alice and bob with the toy vector's
  // scalars.
  void enroll(const std::string& vector) {
    const std::string s = stubs(vector);
    ASSERT_EQ(run("setup --bits 4 --out-params params --out-msk msk", "CLSC_TEST_RNG=3"), 0);
    ASSERT_EQ(run("extract --msk msk --params params --id alice --out a.ppk",
                  s + " CLSC_TEST_RNG=2"), 0);
    ASSERT_EQ(run("extract --msk msk --params params --id bob --out b.ppk", s + " CLSC_TEST_RNG=7"),
              0);
    ASSERT_EQ(run("userkeys --params params --partial a.ppk --out-priv a.sk --out-pub a.pk",
                  s + " CLSC_TEST_RNG=6"), 0);
    ASSERT_EQ(run("userkeys --params params --partial b.ppk --out-priv b.sk --out-pub b.pk",
                  s + " CLSC_TEST_RNG=5"), 0);
    put("tag", "tau");
  }

  fs::path dir_;
};

TEST_F(Cli, LswPipelineReproducesVector) {
  enroll("toy_lsw.json");
  const std::string s = stubs("toy_lsw.json");
  ASSERT_EQ(run("encap --protocol lsw --params params --priv a.sk --peer-pub b.pk --tag-file tag "
                "--out phi --out-key k.send",
                s + " CLSC_TEST_RNG=2,3"), 0);
  ASSERT_EQ(run("decap --protocol lsw --params params --priv b.sk --peer-pub a.pk --in phi "
                "--tag-file tag --out-key k.recv", s), 0);

  SystemParams params = read_params(file("params"));
  SymmetricKey k = read_symmetric_key(params, file("k.recv"));
  EXPECT_EQ(to_hex(k.bytes), "a0a1a2a3a4a5a6a7a8a9aaabacadaeaf");
  EXPECT_EQ(file("k.send"), file("k.recv"));
  LswEncapsulation phi = read_lsw_encapsulation(params, file("phi"));
  EXPECT_EQ(to_hex(encode_lsw_body(params.group(), phi)),
            "0000000000000003000000000000000900000000000000060000000000000007");

  // Golden comparison against the library's own writer.
  EXPECT_EQ(file("phi"), write_encapsulation(params, phi));
  EXPECT_EQ(toy_value(read_public_key(params, file("b.pk")).p), 5u);
  EXPECT_EQ(read_private_key(params, file("a.sk")).sk.d.low_u64(), 4u);

  Bytes bad = file("phi");
  bad[7 + 23] ^= 1;  // low byte of s; s never enters a stubbed hash
  write_file(dir_ / "phi.bad", bad);
  EXPECT_EQ(run("decap --protocol lsw --params params --priv b.sk --peer-pub a.pk --in phi.bad "
                "--tag-file tag --out-key k.bad", s), 2);
  EXPECT_FALSE(fs::exists(dir_ / "k.bad"));
}

TEST_F(Cli, DktutsPipelineReproducesVector) {
  enroll("toy_dktuts.json");
  const std::string s = stubs("toy_dktuts.json");
  ASSERT_EQ(run("encap --protocol dktuts --params params --priv a.sk --peer-pub b.pk "
                "--tag-file tag --out phi --out-key k.send --now 1700000000",
                s + " CLSC_TEST_RNG=xb0b1b2b3b4b5b6b7b8b9babbbcbdbebf,4,2"), 0);
  EXPECT_EQ(run("decap --protocol dktuts --params params --priv b.sk --peer-pub a.pk --in phi "
                "--tag-file tag --out-key k.recv --now 1700000120", s), 0);
  EXPECT_EQ(run("decap --protocol dktuts --params params --priv b.sk --peer-pub a.pk --in phi "
                "--tag-file tag --out-key k.late --now 1700000121", s), 2);
  SystemParams params = read_params(file("params"));
  EXPECT_EQ(to_hex(read_symmetric_key(params, file("k.recv")).bytes),
            "b0b1b2b3b4b5b6b7b8b9babbbcbdbebf");
  DktutsEncapsulation phi = read_dktuts_encapsulation(params, file("phi"));
  EXPECT_EQ(phi.r.low_u64(), 3u);
  EXPECT_EQ(phi.s.low_u64(), 12u);
}

TEST_F(Cli, SigncryptRoundTripOnRistretto) {
  ASSERT_EQ(run("setup --out-params params --out-msk msk"), 0);
  ASSERT_EQ(run("extract --msk msk --params params --id alice --out a.ppk"), 0);
  ASSERT_EQ(run("extract --msk msk --params params --id bob --out b.ppk"), 0);
  ASSERT_EQ(run("userkeys --params params --partial a.ppk --out-priv a.sk --out-pub a.pk"), 0);
  ASSERT_EQ(run("userkeys --params params --partial b.ppk --out-priv b.sk --out-pub b.pk"), 0);
  put("msg", "hello bob");
  for (std::string proto : {"lsw", "dktuts"}) {
    ASSERT_EQ(run("signcrypt --protocol " + proto +
                  " --params params --priv a.sk --peer-pub b.pk --in msg --out sc"), 0);
    ASSERT_EQ(run("unsigncrypt --params params --priv b.sk --peer-pub a.pk --in sc --out out"), 0);
    EXPECT_EQ(file("out"), file("msg"));
    Bytes sc = file("sc");
    sc.back() ^= 0x80;
    write_file(dir_ / "sc", sc);
    EXPECT_EQ(run("unsigncrypt --params params --priv b.sk --peer-pub a.pk --in sc --out out"), 2);
    EXPECT_EQ(run("unsigncrypt --params params --priv a.sk --peer-pub a.pk --in sc --out out"), 2);
  }
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("setup --bits 7 --out-params p --out-msk m"), 1);
  EXPECT_EQ(run("extract --msk missing --params missing --id a --out x"), 1);
  ASSERT_EQ(run("setup --out-params params --out-msk msk"), 0);
  ASSERT_EQ(run("extract --msk msk --params params --id alice --out a.ppk"), 0);
  // Partial key issued under another KGC.
  ASSERT_EQ(run("setup --out-params params2 --out-msk msk2"), 0);
  EXPECT_EQ(run("userkeys --params params2 --partial a.ppk --out-priv a.sk --out-pub a.pk"), 3);
  EXPECT_EQ(run("userkeys --params params --partial msk --out-priv a.sk --out-pub a.pk"), 1);
}

TEST_F(Cli, VectorsCheck) {
  EXPECT_EQ(run("vectors --check '" CLSC_VECTOR_DIR "/toy_lsw.json' '" CLSC_VECTOR_DIR
                "/toy_dktuts.json'"), 0);
  put("bad.json", "{\"backend\": \"toy\"}");
  EXPECT_NE(run("vectors --check bad.json"), 0);
}

TEST_F(Cli, BenchWritesJson) {
  EXPECT_EQ(run("bench --table --iterations 3 --json report.json"), 0);
  Bytes b = file("report.json");
  std::string s(b.begin(), b.end());
  EXPECT_NE(s.find("\"match\": true"), std::string::npos);
  EXPECT_EQ(s.find("\"match\": false"), std::string::npos);
}

}  // namespace
}  // namespace clsc
