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

#include <openssl/evp.h>
#include <sodium.h>

#include <algorithm>

#include "clsc/op_counter.hpp"

namespace clsc {

namespace {

using Digest = std::array<std::uint8_t, crypto_hash_sha512_BYTES>;

void put_u32_be(Bytes& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

Bytes label_prefix(HashFn fn) {
  std::string_view label = hash_label(fn);
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(label.size()));
  out.insert(out.end(), label.begin(), label.end());
  return out;
}

Digest sha512(std::initializer_list<ByteView> parts) {
  crypto_hash_sha512_state st;
  crypto_hash_sha512_init(&st);
  for (ByteView p : parts) crypto_hash_sha512_update(&st, p.data(), p.size());
  Digest d;
  crypto_hash_sha512_final(&st, d.data());
  return d;
}

Scalar nonzero(const Group& group, Scalar s) {
  return s.is_zero() ? group.scalar_from_u64(1) : s;
}

struct CipherCtx {
  CipherCtx() : ctx(EVP_CIPHER_CTX_new()) {
    if (ctx == nullptr) throw Error("EVP_CIPHER_CTX_new failed");
  }
  ~CipherCtx() { EVP_CIPHER_CTX_free(ctx); }
  CipherCtx(const CipherCtx&) = delete;
  CipherCtx& operator=(const CipherCtx&) = delete;
  EVP_CIPHER_CTX* ctx;
};

constexpr std::array<std::uint8_t, 12> kZeroNonce{};

}  // namespace

// ---------------------------------------------------------------------------
// Transcript

Transcript& Transcript::raw(ItemType type, ByteView value) {
  encoding_.push_back(static_cast<std::uint8_t>(type));
  put_u32_be(encoding_, static_cast<std::uint32_t>(value.size()));
  encoding_.insert(encoding_.end(), value.begin(), value.end());
  return *this;
}

Transcript& Transcript::identity(std::string_view id) { return raw(ItemType::kIdentity, as_bytes(id)); }

Transcript& Transcript::element(const Element& e) {
  return raw(ItemType::kElement, group_->encode_element(e));
}

Transcript& Transcript::scalar(const Scalar& s) {
  return raw(ItemType::kScalar, group_->encode_scalar(s));
}

Transcript& Transcript::tag(ByteView tag) { return raw(ItemType::kTag, tag); }

Transcript& Transcript::timestamp(std::int64_t ts) {
  std::array<std::uint8_t, 8> be{};
  auto u = static_cast<std::uint64_t>(ts);
  for (int i = 7; i >= 0; --i, u >>= 8) be[i] = static_cast<std::uint8_t>(u);
  return raw(ItemType::kTimestamp, be);
}

Transcript& Transcript::key(const SymmetricKey& k) { return raw(ItemType::kKey, k.bytes); }

std::optional<std::vector<TranscriptItem>> parse_transcript(ByteView encoding) {
  std::vector<TranscriptItem> items;
  std::size_t pos = 0;
  while (pos < encoding.size()) {
    if (encoding.size() - pos < 5) return std::nullopt;
    std::uint8_t type = encoding[pos];
    if (type < 0x01 || type > 0x06) return std::nullopt;
    std::uint32_t len = 0;
    for (int i = 1; i <= 4; ++i) len = (len << 8) | encoding[pos + i];
    pos += 5;
    if (encoding.size() - pos < len) return std::nullopt;
    items.push_back({static_cast<ItemType>(type),
                     Bytes(encoding.begin() + pos, encoding.begin() + pos + len)});
    pos += len;
  }
  return items;
}

// ---------------------------------------------------------------------------
// StubTable

void StubTable::add(HashFn fn, Bytes input, Bytes output) {
  entries_[{fn, std::move(input)}] = std::move(output);
}

const Bytes* StubTable::find(HashFn fn, ByteView input) const {
  auto it = entries_.find({fn, Bytes(input.begin(), input.end())});
  return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// HashSuite

std::string_view hash_label(HashFn fn) {
  switch (fn) {
    case HashFn::kH1:
      return "CLSC-TKEM-v1/H1";
    case HashFn::kH2:
      return "CLSC-TKEM-v1/H2";
    case HashFn::kKdf:
      return "CLSC-TKEM-v1/KDF";
    case HashFn::kKdfSplit:
      return "CLSC-TKEM-v1/H2-SPLIT";
    case HashFn::kMac:
      return "CLSC-TKEM-v1/F";
    case HashFn::kDem:
      return "CLSC-TKEM-v1/DEM";
  }
  return "";
}

HashSuite::HashSuite(GroupPtr group) : group_(std::move(group)) {
  if (sodium_init() < 0) throw Error("libsodium initialization failed");
}

HashSuite HashSuite::with_stubs(std::shared_ptr<const StubTable> stubs) const {
  HashSuite copy = *this;
  copy.stubs_ = std::move(stubs);
  return copy;
}

HashSuite HashSuite::with_counter(OpCounter* counter) const {
  HashSuite copy = *this;
  copy.counter_ = counter;
  return copy;
}

HashSuite HashSuite::with_group(GroupPtr group) const {
  HashSuite copy = *this;
  copy.group_ = std::move(group);
  return copy;
}

const Bytes& HashSuite::stub_value(HashFn fn, ByteView input) const {
  const Bytes* v = stubs_->find(fn, input);
  if (v == nullptr) {
    throw StubMiss(std::string("no stub for ") + std::string(hash_label(fn)) + " input " +
                   to_hex(input));
  }
  return *v;
}

Scalar HashSuite::scalar_from_stub(HashFn fn, ByteView input) const {
  auto s = group_->decode_scalar(stub_value(fn, input));
  if (!s || s->is_zero()) {
    throw StubMiss(std::string("stub for ") + std::string(hash_label(fn)) +
                   " is not a nonzero scalar");
  }
  return *s;
}

Scalar HashSuite::hash_to_scalar(HashFn fn, const Transcript& t) const {
  if (stubs_) return scalar_from_stub(fn, t.encoding());
  Digest d = sha512({label_prefix(fn), t.encoding()});
  return nonzero(*group_, group_->scalar_from_wide(d));
}

Scalar HashSuite::h1(const Transcript& t) const { return hash_to_scalar(HashFn::kH1, t); }

Scalar HashSuite::h2(const Transcript& t) const { return hash_to_scalar(HashFn::kH2, t); }

SymmetricKey HashSuite::kdf_key(const Transcript& t, std::size_t out_bits) const {
  if (out_bits != 8 * kSymmetricKeyBytes) {
    throw UnsupportedParameter("kdf output must be " + std::to_string(8 * kSymmetricKeyBytes) +
                               " bits");
  }
  SymmetricKey k;
  if (stubs_) {
    const Bytes& v = stub_value(HashFn::kKdf, t.encoding());
    if (v.size() != k.bytes.size()) throw StubMiss("KDF stub has wrong length");
    std::copy(v.begin(), v.end(), k.bytes.begin());
    return k;
  }
  Digest d = sha512({label_prefix(HashFn::kKdf), t.encoding()});
  std::copy_n(d.begin(), k.bytes.size(), k.bytes.begin());
  return k;
}

std::pair<SymmetricKey, MacKey> HashSuite::kdf_split(const Transcript& t) const {
  SymmetricKey k1;
  MacKey k2;
  if (stubs_) {
    const Bytes& v = stub_value(HashFn::kKdfSplit, t.encoding());
    if (v.size() != k1.bytes.size() + k2.bytes.size()) {
      throw StubMiss("KDF-split stub has wrong length");
    }
    std::copy_n(v.begin(), k1.bytes.size(), k1.bytes.begin());
    std::copy(v.begin() + k1.bytes.size(), v.end(), k2.bytes.begin());
    return {k1, k2};
  }
  const Bytes prefix = label_prefix(HashFn::kKdfSplit);
  const std::uint8_t enc_label = 0x01;
  const std::uint8_t mac_label = 0x02;
  Digest d1 = sha512({prefix, ByteView(&enc_label, 1), t.encoding()});
  Digest d2 = sha512({prefix, ByteView(&mac_label, 1), t.encoding()});
  std::copy_n(d1.begin(), k1.bytes.size(), k1.bytes.begin());
  std::copy_n(d2.begin(), k2.bytes.size(), k2.bytes.begin());
  sodium_memzero(d1.data(), d1.size());
  sodium_memzero(d2.data(), d2.size());
  return {k1, k2};
}

Scalar HashSuite::mac(const MacKey& k2, const Transcript& t) const {
  if (stubs_) {
    Bytes input(k2.bytes.begin(), k2.bytes.end());
    input.insert(input.end(), t.encoding().begin(), t.encoding().end());
    return scalar_from_stub(HashFn::kMac, input);
  }
  const Bytes prefix = label_prefix(HashFn::kMac);
  crypto_auth_hmacsha512_state st;
  crypto_auth_hmacsha512_init(&st, k2.bytes.data(), k2.bytes.size());
  crypto_auth_hmacsha512_update(&st, prefix.data(), prefix.size());
  crypto_auth_hmacsha512_update(&st, t.encoding().data(), t.encoding().size());
  Digest d;
  crypto_auth_hmacsha512_final(&st, d.data());
  return nonzero(*group_, group_->scalar_from_wide(d));
}

SymmetricKey HashSuite::dem_key(const SymmetricKey& k) const {
  Transcript t = transcript();
  t.key(k);
  SymmetricKey out;
  if (stubs_) {
    const Bytes& v = stub_value(HashFn::kDem, t.encoding());
    if (v.size() != out.bytes.size()) throw StubMiss("DEM stub has wrong length");
    std::copy(v.begin(), v.end(), out.bytes.begin());
    return out;
  }
  Digest d = sha512({label_prefix(HashFn::kDem), t.encoding()});
  std::copy_n(d.begin(), out.bytes.size(), out.bytes.begin());
  return out;
}

Bytes HashSuite::sym_encrypt(const SymmetricKey& k1, ByteView plaintext) const {
  if (counter_) counter_->count_encryption();
  CipherCtx c;
  Bytes out(plaintext.size() + kAeadTagBytes);
  int len = 0;
  static constexpr std::uint8_t kEmpty = 0;
  const std::uint8_t* in = plaintext.empty() ? &kEmpty : plaintext.data();
  if (EVP_EncryptInit_ex(c.ctx, EVP_aes_128_gcm(), nullptr, k1.bytes.data(), kZeroNonce.data()) != 1 ||
      EVP_EncryptUpdate(c.ctx, out.data(), &len, in, static_cast<int>(plaintext.size())) != 1) {
    throw Error("AES-128-GCM encrypt failed");
  }
  int fin = 0;
  if (EVP_EncryptFinal_ex(c.ctx, out.data() + len, &fin) != 1 ||
      EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_GET_TAG, kAeadTagBytes,
                          out.data() + plaintext.size()) != 1) {
    throw Error("AES-128-GCM finalize failed");
  }
  return out;
}

Bytes HashSuite::sym_decrypt(const SymmetricKey& k1, ByteView ciphertext) const {
  if (counter_) counter_->count_decryption();
  if (ciphertext.size() < kAeadTagBytes) throw DecryptFailure();
  const std::size_t body = ciphertext.size() - kAeadTagBytes;
  CipherCtx c;
  // One spare byte keeps out.data() non-null: a null output buffer would
  // switch EVP into AAD mode.
  Bytes out(body + 1);
  int len = 0;
  Bytes tag(ciphertext.begin() + body, ciphertext.end());
  if (EVP_DecryptInit_ex(c.ctx, EVP_aes_128_gcm(), nullptr, k1.bytes.data(), kZeroNonce.data()) != 1 ||
      EVP_DecryptUpdate(c.ctx, out.data(), &len, ciphertext.data(), static_cast<int>(body)) != 1 ||
      EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_SET_TAG, kAeadTagBytes, tag.data()) != 1) {
    throw DecryptFailure();
  }
  int fin = 0;
  if (EVP_DecryptFinal_ex(c.ctx, out.data() + len, &fin) != 1) {
    sodium_memzero(out.data(), out.size());
    throw DecryptFailure();
  }
  out.resize(body);
  return out;
}

}  // namespace clsc
