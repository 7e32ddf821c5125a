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

#include "clsc/codec.hpp"

#include <sys/stat.h>

#include <filesystem>

#include <gtest/gtest.h>

#include "support/world.hpp"

namespace clsc {
namespace {

using testing::kT0;
using testing::make_world;
using testing::World;

class CodecBackends : public ::testing::TestWithParam<unsigned> {
 protected:
  void SetUp() override { w_.emplace(make_world(group_for_bits(GetParam()), rng_)); }
  SeededRng rng_{21};
  std::optional<World> w_;
};

TEST_P(CodecBackends, EveryFormatRoundTrips) {
  const World& w = *w_;
  const SystemParams& p = w.params;

  Bytes f = write_params(p);
  EXPECT_EQ(write_params(read_params(f)), f);
  f = write_master_key(p, w.msk);
  EXPECT_EQ(write_master_key(p, read_master_key(p, f)), f);
  PartialPrivateKey ppk = extract_partial_key(w.msk, p, "carol", rng_);
  f = write_partial_key(p, ppk);
  EXPECT_EQ(write_partial_key(p, read_partial_key(p, f)), f);
  f = write_private_key(p, w.alice);
  EXPECT_EQ(write_private_key(p, read_private_key(p, f)), f);
  f = write_public_key(p, w.bob.pk);
  EXPECT_EQ(read_public_key(p, f), w.bob.pk);
  EXPECT_EQ(write_public_key(p, read_public_key(p, f)), f);

  auto lsw = testing::lsw_run(w, as_bytes("t"), rng_);
  f = write_encapsulation(p, lsw.phi);
  EXPECT_EQ(write_encapsulation(p, read_lsw_encapsulation(p, f)), f);
  f = write_symmetric_key(p, lsw.key);
  EXPECT_EQ(read_symmetric_key(p, f), lsw.key);

  FixedClock clock(kT0);
  auto dk = testing::dktuts_run(w, as_bytes("t"), clock, rng_);
  f = write_encapsulation(p, dk.phi);
  EXPECT_EQ(write_encapsulation(p, read_dktuts_encapsulation(p, f)), f);

  for (Protocol proto : {Protocol::kLsw, Protocol::kDktuts}) {
    SigncryptedMessage sc = signcrypt(p, proto, as_bytes("msg"), w.alice, w.bob_c, rng_, &clock);
    f = write_signcrypted(p, sc);
    EXPECT_EQ(write_signcrypted(p, read_signcrypted(p, f)), f);
    EXPECT_EQ(peek_role(f), FileRole::kSigncrypted);
  }
}

TEST_P(CodecBackends, HeaderIsChecked) {
  const SystemParams& p = w_->params;
  Bytes f = write_public_key(p, w_->bob.pk);
  EXPECT_EQ(Bytes(f.begin(), f.begin() + 5), (Bytes{'C', 'L', 'S', 'C', 1}));

  Bytes bad = f;
  bad[4] = 2;
  EXPECT_THROW(read_public_key(p, bad), DecodeError);
  bad = f;
  bad[0] = 'X';
  EXPECT_THROW(read_public_key(p, bad), DecodeError);
  EXPECT_THROW(read_private_key(p, f), DecodeError);
  bad = f;
  bad.push_back(0);
  EXPECT_THROW(read_public_key(p, bad), DecodeError);
  bad = f;
  bad.pop_back();
  EXPECT_THROW(read_public_key(p, bad), DecodeError);
  bad = f;
  bad[5] = GetParam() == 256 ? 2 : 1;
  EXPECT_THROW(read_public_key(p, bad), DecodeError);
}

INSTANTIATE_TEST_SUITE_P(Backends, CodecBackends, ::testing::Values(256u, 4u));

TEST(Codec, ToyParamsCarryTheOrder) {
  SeededRng rng(1);
  auto [params, msk] = setup(61, rng);
  SystemParams back = read_params(write_params(params));
  EXPECT_EQ(back.group().order(), params.group().order());
  Bytes f = write_params(params);
  f[7] = 0x7f;  // q = 2^63 - 1, composite
  EXPECT_THROW(read_params(f), DecodeError);
}

TEST(Codec, IdentityPublicKeyRejected) {
  SeededRng rng(2);
  World w = make_world(make_toy_group(), rng);
  FullPublicKey pk = w.bob.pk;
  pk.p = w.params.group().identity();
  EXPECT_THROW(read_public_key(w.params, write_public_key(w.params, pk)), DecodeError);
}

TEST(Codec, SecretFilesAreOwnerOnly) {
  auto dir = std::filesystem::temp_directory_path() / "clsc_codec_test";
  std::filesystem::create_directories(dir);
  auto secret = dir / "secret";
  auto open = dir / "open";
  std::filesystem::remove(secret);
  write_file(secret, Bytes{1, 2, 3}, true);
  write_file(open, Bytes{4});
  struct stat st {};
  ASSERT_EQ(::stat(secret.c_str(), &st), 0);
  EXPECT_EQ(st.st_mode & 0777, 0600u);
  EXPECT_EQ(read_file(secret), (Bytes{1, 2, 3}));
  EXPECT_THROW(read_file(dir / "missing"), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace clsc
