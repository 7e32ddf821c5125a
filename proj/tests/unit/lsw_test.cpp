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

#include "clsc/lsw.hpp"

#include <gtest/gtest.h>

#include "support/world.hpp"

namespace clsc {
namespace {

using testing::lsw_open;
using testing::lsw_run;
using testing::make_world;
using testing::World;

const ByteView kTag = as_bytes("tag-bytes");

class LswBackends : public ::testing::TestWithParam<unsigned> {};

TEST_P(LswBackends, RoundTrip) {
  SeededRng rng(GetParam());
  World w = make_world(group_for_bits(GetParam()), rng);
  for (int i = 0; i < 25; ++i) {
    auto run = lsw_run(w, kTag, rng);
    auto key = lsw_open(w, run.phi, kTag);
    ASSERT_TRUE(key.has_value());
    EXPECT_EQ(*key, run.key);
    auto cached = lsw_decapsulate(w.params, run.phi, kTag, w.alice_c, w.bob);
    EXPECT_EQ(cached, key);
  }
}

TEST_P(LswBackends, SignatureEquationHolds) {
  SeededRng rng(GetParam() + 1);
  World w = make_world(group_for_bits(GetParam()), rng);
  const Group& g = w.params.group();
  auto run = lsw_run(w, kTag, rng);
  // s*(h*x_A + d_A)*P == Q and s*(h*P_A + Y'_A) == Q
  Scalar k = g.scalar_mul(run.phi.s, g.scalar_add(g.scalar_mul(run.phi.h, w.alice.sk.x),
                                                   w.alice.sk.d));
  EXPECT_EQ(g.base_mul(k), run.phi.q);
  EXPECT_EQ(g.point_mul(run.phi.s, g.point_add(g.point_mul(run.phi.h, w.alice.pk.p),
                                                w.alice_c.partial)),
            run.phi.q);
  EXPECT_EQ(g.point_mul(g.scalar_invert(g.scalar_add(w.bob.sk.d, w.bob.sk.x)), run.phi.u), run.x);
}

INSTANTIATE_TEST_SUITE_P(Backends, LswBackends, ::testing::Values(256u, 4u, 61u));

TEST(Lsw, StateIsSingleUse) {
  SeededRng rng(1);
  World w = make_world(make_ristretto255(), rng);
  auto [key, state] = lsw_symmetric_key_gen(w.params, "alice", w.bob_c, rng);
  EXPECT_FALSE(state.consumed());
  lsw_encapsulate(w.params, state, kTag, w.alice, rng);
  EXPECT_TRUE(state.consumed());
  EXPECT_TRUE(state.ephemeral().is_zero());
  EXPECT_THROW(lsw_encapsulate(w.params, state, kTag, w.alice, rng), StateConsumed);
}

TEST(Lsw, SenderMustMatchState) {
  SeededRng rng(2);
  World w = make_world(make_ristretto255(), rng);
  auto [key, state] = lsw_symmetric_key_gen(w.params, "alice", w.bob_c, rng);
  EXPECT_THROW(lsw_encapsulate(w.params, state, kTag, w.bob, rng), KeyMismatch);
}

TEST(Lsw, WrongTagRejected) {
  SeededRng rng(3);
  World w = make_world(make_ristretto255(), rng);
  auto run = lsw_run(w, kTag, rng);
  EXPECT_FALSE(lsw_open(w, run.phi, as_bytes("tag-bytez")).has_value());
  EXPECT_FALSE(lsw_open(w, run.phi, {}).has_value());
}

TEST(Lsw, WrongRecipientRejected) {
  SeededRng rng(4);
  World w = make_world(make_ristretto255(), rng);
  auto run = lsw_run(w, kTag, rng);
  UserKeyPair carol =
      assemble_user_keys(w.params, extract_partial_key(w.msk, w.params, "carol", rng), rng);
  EXPECT_FALSE(lsw_decapsulate(w.params, run.phi, kTag, w.alice.pk, carol).has_value());
  // Bob's name and public key with someone else's secrets.
  UserKeyPair fake = w.bob;
  fake.sk.x = carol.sk.x;
  EXPECT_FALSE(lsw_decapsulate(w.params, run.phi, kTag, w.alice.pk, fake).has_value());
}

TEST(Lsw, EveryOtherCombinedSecretRejectedAtThirteen) {
  // Only d_B + x_B enters decapsulation, so enumerate all other sums.
  SeededRng rng(5);
  World w = make_world(make_toy_group(13), rng);
  const Group& g = w.params.group();
  auto run = lsw_run(w, kTag, rng);
  const std::uint64_t sigma = g.scalar_add(w.bob.sk.d, w.bob.sk.x).low_u64();
  int tried = 0;
  for (std::uint64_t v = 1; v < 13; ++v) {
    if (v == sigma) continue;
    UserKeyPair other = w.bob;
    other.sk.x = g.scalar_sub(g.scalar_from_u64(v), other.sk.d);
    auto key = lsw_decapsulate(w.params, run.phi, kTag, w.alice.pk, other);
    // Wrong X means a wrong key even if h happens to collide in Z_13.
    EXPECT_TRUE(!key.has_value() || *key != run.key) << v;
    ++tried;
  }
  EXPECT_EQ(tried, 11);
}

TEST(Lsw, DegenerateFieldsRejected) {
  SeededRng rng(6);
  World w = make_world(make_ristretto255(), rng);
  auto run = lsw_run(w, kTag, rng);
  const Group& g = w.params.group();
  LswEncapsulation phi = run.phi;
  phi.s = g.scalar_from_u64(0);
  EXPECT_FALSE(lsw_open(w, phi, kTag).has_value());
  phi = run.phi;
  phi.u = g.identity();
  EXPECT_FALSE(lsw_open(w, phi, kTag).has_value());
  phi = run.phi;
  phi.q = g.identity();
  EXPECT_FALSE(lsw_open(w, phi, kTag).has_value());
}

TEST(Lsw, BodyRoundTrip) {
  SeededRng rng(7);
  World w = make_world(make_ristretto255(), rng);
  auto run = lsw_run(w, kTag, rng);
  Bytes body = encode_lsw_body(w.params.group(), run.phi);
  EXPECT_EQ(body.size(), 128u);
  EXPECT_EQ(*decode_lsw_body(w.params.group(), body), run.phi);
  body.pop_back();
  EXPECT_FALSE(decode_lsw_body(w.params.group(), body).has_value());
}

TEST(Lsw, KeyDependsOnIdentities) {
  SeededRng rng(8);
  World w = make_world(make_ristretto255(), rng, "alice", "bob");
  auto a = lsw_run(w, kTag, rng);
  auto b = lsw_run(w, kTag, rng);
  EXPECT_NE(a.key, b.key);
}

}  // namespace
}  // namespace clsc
