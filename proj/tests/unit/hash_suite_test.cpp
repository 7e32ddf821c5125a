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

#include "clsc/hash_suite.hpp"

#include <gtest/gtest.h>

#include "clsc/op_counter.hpp"

namespace clsc {
namespace {

// Known answers come from tests/oracle/hash_kat.py (hashlib, hmac and
// the cryptography package).
class HashSuiteKat : public ::testing::Test {
 protected:
  GroupPtr toy61_ = make_toy_group((std::uint64_t{1} << 61) - 1);
  HashSuite suite_{toy61_};
};

TEST_F(HashSuiteKat, H1) {
  Transcript t(*toy61_);
  t.identity("alice").element(toy_element(2));
  EXPECT_EQ(suite_.h1(t).low_u64(), 1393190575931641307u);
}

TEST_F(HashSuiteKat, Kdf) {
  Transcript t(*toy61_);
  t.element(toy_element(5)).element(toy_element(9)).identity("alice").identity("bob");
  SymmetricKey k = suite_.kdf_key(t);
  EXPECT_EQ(to_hex(k.bytes), "35f725578bc5563fa2a07c11e3538db4");
  EXPECT_THROW(suite_.kdf_key(t, 256), UnsupportedParameter);
}

TEST_F(HashSuiteKat, KdfSplit) {
  Transcript t(*toy61_);
  t.element(toy_element(7));
  auto [k1, k2] = suite_.kdf_split(t);
  EXPECT_EQ(to_hex(k1.bytes), "f9862511a77a379ad4e4a083aea6ac7b");
  EXPECT_EQ(to_hex(k2.bytes), "78897f745f271ebcfd25541b4439787143a27553c88a576a05a0c12fd568e685");
}

TEST_F(HashSuiteKat, Mac) {
  MacKey k2;
  for (std::size_t i = 0; i < k2.bytes.size(); ++i) k2.bytes[i] = static_cast<std::uint8_t>(i);
  Transcript t(*toy61_);
  t.timestamp(1700000000).tag(as_bytes("tau"));
  EXPECT_EQ(suite_.mac(k2, t).low_u64(), 1368319814802349500u);
}

TEST_F(HashSuiteKat, DemKeyAndCipher) {
  SymmetricKey k;
  for (std::size_t i = 0; i < k.bytes.size(); ++i) k.bytes[i] = static_cast<std::uint8_t>(i);
  EXPECT_EQ(to_hex(suite_.dem_key(k).bytes), "5e589b3e6683477575a105f9b273e72c");
  Bytes c = suite_.sym_encrypt(k, as_bytes("hello"));
  EXPECT_EQ(to_hex(c), "21b3eb3ff6d5da0429e8cdfe3e7c225048a22ae7c0");
  Bytes p = suite_.sym_decrypt(k, c);
  EXPECT_EQ(std::string(p.begin(), p.end()), "hello");
}

TEST(HashSuite, RistrettoH2) {
  GroupPtr g = make_ristretto255();
  HashSuite suite(g);
  Transcript t(*g);
  t.tag(as_bytes("tau"));
  EXPECT_EQ(to_hex(g->encode_scalar(suite.h2(t))),
            "9e83109af0927f539e5ce96cec391b989d313e63d3636cbdcb41b72f2e57e204");
}

TEST(HashSuite, LabelsSeparateFunctions) {
  GroupPtr g = make_ristretto255();
  HashSuite suite(g);
  Transcript t(*g);
  t.identity("alice");
  EXPECT_NE(suite.h1(t), suite.h2(t));
}

TEST(HashSuite, CipherRejectsTamperingAndShortInput) {
  GroupPtr g = make_toy_group();
  HashSuite suite(g);
  SymmetricKey k;
  k.bytes.fill(7);
  Bytes c = suite.sym_encrypt(k, as_bytes("message"));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Bytes m = c;
    m[i] ^= 1;
    EXPECT_THROW(suite.sym_decrypt(k, m), DecryptFailure) << i;
  }
  EXPECT_THROW(suite.sym_decrypt(k, Bytes(kAeadTagBytes - 1)), DecryptFailure);
  Bytes empty = suite.sym_encrypt(k, {});
  EXPECT_EQ(empty.size(), kAeadTagBytes);
  EXPECT_TRUE(suite.sym_decrypt(k, empty).empty());
}

TEST(HashSuite, CounterSeesCipherCalls) {
  OpCounter counter;
  HashSuite suite = HashSuite(make_toy_group()).with_counter(&counter);
  SymmetricKey k;
  counter.begin(Phase::kEncap);
  Bytes c = suite.sym_encrypt(k, as_bytes("x"));
  counter.begin(Phase::kDecap);
  suite.sym_decrypt(k, c);
  EXPECT_EQ(counter.in_phase(Phase::kEncap).sym_encryptions, 1u);
  EXPECT_EQ(counter.in_phase(Phase::kDecap).sym_decryptions, 1u);
}

TEST(Transcript, ExactEncodingAndParse) {
  GroupPtr g = make_toy_group();
  Transcript t(*g);
  t.identity("ab").element(toy_element(5)).timestamp(-1);
  Bytes want = {1, 0, 0, 0, 2, 'a', 'b',                       //
                2, 0, 0, 0, 8, 0, 0, 0, 0, 0, 0, 0, 5,         //
                5, 0, 0, 0, 8, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff};
  EXPECT_EQ(t.encoding(), want);
  auto items = parse_transcript(t.encoding());
  ASSERT_TRUE(items.has_value());
  ASSERT_EQ(items->size(), 3u);
  EXPECT_EQ((*items)[0].type, ItemType::kIdentity);
  EXPECT_EQ((*items)[1].value, (Bytes{0, 0, 0, 0, 0, 0, 0, 5}));
  Bytes truncated(want.begin(), want.end() - 1);
  EXPECT_FALSE(parse_transcript(truncated).has_value());
}

TEST(Transcript, BoundariesAreUnambiguous) {
  GroupPtr g = make_toy_group();
  Transcript a(*g), b(*g);
  a.identity("ab").identity("c");
  b.identity("a").identity("bc");
  EXPECT_NE(a.encoding(), b.encoding());
}

TEST(Stubs, HitAndMiss) {
  GroupPtr g = make_toy_group();
  Transcript t(*g);
  t.identity("alice").element(toy_element(2));
  auto table = std::make_shared<StubTable>();
  table->add(HashFn::kH1, t.encoding(), g->encode_scalar(g->scalar_from_u64(5)));
  HashSuite suite = HashSuite(g).with_stubs(table);
  EXPECT_TRUE(suite.stubbed());
  EXPECT_EQ(suite.h1(t).low_u64(), 5u);
  EXPECT_THROW(suite.h2(t), StubMiss);
  Transcript other(*g);
  other.identity("bob");
  EXPECT_THROW(suite.h1(other), StubMiss);
}

}  // namespace
}  // namespace clsc
