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

#include "clsc/dktuts.hpp"

#include <sodium.h>

#include <algorithm>
#include <ctime>
#include <tuple>

namespace clsc {

namespace {

std::pair<SymmetricKey, MacKey> split_keys(const SystemParams& params, const Element& x,
                                           const Element& u) {
  Transcript t = params.suite().transcript();
  t.element(params.group().point_add(x, u));
  return params.suite().kdf_split(t);
}

std::optional<Element> element_item(const Group& group, const TranscriptItem& item) {
  if (item.type != ItemType::kElement) return std::nullopt;
  return group.decode_element(item.value);
}

}  // namespace

Timestamp SystemClock::now() const { return static_cast<Timestamp>(std::time(nullptr)); }

Transcript encode_inner_plaintext(const Group& group, const InnerPlaintext& pt) {
  Transcript t(group);
  t.key(pt.key)
      .timestamp(pt.ts)
      .tag(pt.tag)
      .identity(pt.sender_id)
      .identity(pt.receiver_id)
      .element(pt.r_a)
      .element(pt.r_b)
      .element(pt.p_a)
      .element(pt.p_b)
      .element(pt.x)
      .element(pt.u);
  return t;
}

std::optional<InnerPlaintext> decode_inner_plaintext(const Group& group, ByteView bytes) {
  auto items = parse_transcript(bytes);
  if (!items || items->size() != 11) return std::nullopt;
  const auto& it = *items;
  if (it[0].type != ItemType::kKey || it[0].value.size() != kSymmetricKeyBytes) return std::nullopt;
  if (it[1].type != ItemType::kTimestamp || it[1].value.size() != 8) return std::nullopt;
  if (it[2].type != ItemType::kTag) return std::nullopt;
  if (it[3].type != ItemType::kIdentity || it[4].type != ItemType::kIdentity) return std::nullopt;

  InnerPlaintext pt;
  std::copy(it[0].value.begin(), it[0].value.end(), pt.key.bytes.begin());
  std::uint64_t ts = 0;
  for (std::uint8_t b : it[1].value) ts = (ts << 8) | b;
  pt.ts = static_cast<Timestamp>(ts);
  pt.tag = it[2].value;
  pt.sender_id.assign(it[3].value.begin(), it[3].value.end());
  pt.receiver_id.assign(it[4].value.begin(), it[4].value.end());
  Element* slots[] = {&pt.r_a, &pt.r_b, &pt.p_a, &pt.p_b, &pt.x, &pt.u};
  for (std::size_t i = 0; i < 6; ++i) {
    auto e = element_item(group, it[5 + i]);
    if (!e) return std::nullopt;
    *slots[i] = *e;
  }
  return pt;
}

DktutsSessionState::~DktutsSessionState() {
  sodium_memzero(x_.le.data(), x_.le.size());
  sodium_memzero(k1_.bytes.data(), k1_.bytes.size());
  sodium_memzero(k2_.bytes.data(), k2_.bytes.size());
  sodium_memzero(key_.bytes.data(), key_.bytes.size());
}

DktutsKeyGen dktuts_symmetric_key_gen(const SystemParams& params, std::string_view sender_id,
                                      const CombinedPublicKey& receiver, const Clock& clock,
                                      Rng& rng) {
  const Group& g = params.group();
  DktutsSessionState state;
  rng.fill(state.key_.bytes);
  state.x_ = random_nonzero_scalar(g, rng);
  Scalar a = random_nonzero_scalar(g, rng);
  state.big_u_ = g.base_mul(a);
  state.big_x_ = g.point_mul(state.x_, receiver.y);
  std::tie(state.k1_, state.k2_) = split_keys(params, state.big_x_, state.big_u_);
  state.ts_ = clock.now();
  state.sender_id_ = std::string(sender_id);
  state.receiver_ = receiver;
  sodium_memzero(a.le.data(), a.le.size());
  SymmetricKey k = state.key_;
  return {k, std::move(state)};
}

DktutsEncapsulation dktuts_encapsulate(const SystemParams& params, DktutsSessionState& state,
                                       ByteView tag, const UserKeyPair& sender, Rng& rng) {
  if (state.consumed_) throw StateConsumed();
  if (sender.sk.id != state.sender_id_ || sender.pk.id != state.sender_id_) {
    throw KeyMismatch("sender key does not belong to '" + state.sender_id_ + "'");
  }
  const Group& g = params.group();
  const HashSuite& suite = params.suite();
  const FullPublicKey& receiver = state.receiver_.pk;
  for (;;) {
    InnerPlaintext pt{state.key_,        state.ts_,   Bytes(tag.begin(), tag.end()),
                      state.sender_id_,  receiver.id, sender.pk.r,
                      receiver.r,        sender.pk.p, receiver.p,
                      state.big_x_,      state.big_u_};
    Transcript t = encode_inner_plaintext(g, pt);
    Bytes c = suite.sym_encrypt(state.k1_, t.encoding());
    Scalar r = suite.mac(state.k2_, t);
    Scalar denom = g.scalar_add(r, sender.sk.x);
    if (denom.is_zero()) {
      // r depends on X, so x is the only free variable left.
      state.x_ = random_nonzero_scalar(g, rng);
      state.big_x_ = g.point_mul(state.x_, state.receiver_.y);
      std::tie(state.k1_, state.k2_) = split_keys(params, state.big_x_, state.big_u_);
      continue;
    }
    Scalar s = g.scalar_mul(state.x_, g.scalar_invert(denom));
    state.consumed_ = true;
    sodium_memzero(state.x_.le.data(), state.x_.le.size());
    return {state.big_u_, std::move(c), r, s};
  }
}

bool is_fresh(Timestamp ts, Timestamp now, std::int64_t window) {
  // Compare without overflow for adversarial timestamps.
  if (ts > now) return static_cast<std::uint64_t>(ts) - static_cast<std::uint64_t>(now) <=
                       static_cast<std::uint64_t>(window);
  return static_cast<std::uint64_t>(now) - static_cast<std::uint64_t>(ts) <=
         static_cast<std::uint64_t>(window);
}

std::optional<SymmetricKey> dktuts_decapsulate(const SystemParams& params,
                                               const DktutsEncapsulation& phi, ByteView tag,
                                               const FullPublicKey& sender,
                                               const UserKeyPair& recipient, const Clock& clock,
                                               std::int64_t window) {
  const Group& g = params.group();
  const HashSuite& suite = params.suite();
  if (phi.r.is_zero() || phi.s.is_zero() || phi.u.is_identity()) return std::nullopt;

  // s*(d_B + x_B) first, so the point work is r*P and one more multiply.
  Scalar t = g.scalar_mul(phi.s, g.scalar_add(recipient.sk.d, recipient.sk.x));
  Element x_prime = g.point_mul(t, g.point_add(sender.p, g.base_mul(phi.r)));
  auto [k1, k2] = split_keys(params, x_prime, phi.u);

  Bytes plain;
  try {
    plain = suite.sym_decrypt(k1, phi.c);
  } catch (const DecryptFailure&) {
    return std::nullopt;
  }
  auto pt = decode_inner_plaintext(g, plain);
  sodium_memzero(plain.data(), plain.size());
  if (!pt) return std::nullopt;

  Scalar r_prime = suite.mac(k2, encode_inner_plaintext(g, *pt));

  bool ok = is_fresh(pt->ts, clock.now(), window);
  ok &= pt->u == phi.u;
  ok &= pt->x == x_prime;
  ok &= r_prime == phi.r;
  ok &= std::equal(pt->tag.begin(), pt->tag.end(), tag.begin(), tag.end());
  ok &= pt->sender_id == sender.id && pt->receiver_id == recipient.pk.id;
  ok &= pt->r_a == sender.r && pt->p_a == sender.p;
  ok &= pt->r_b == recipient.pk.r && pt->p_b == recipient.pk.p;
  if (!ok) return std::nullopt;
  return pt->key;
}

Bytes encode_dktuts_body(const Group& group, const DktutsEncapsulation& phi) {
  Bytes out = group.encode_element(phi.u);
  const auto len = static_cast<std::uint32_t>(phi.c.size());
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(len >> shift));
  out.insert(out.end(), phi.c.begin(), phi.c.end());
  for (const Bytes& part : {group.encode_scalar(phi.r), group.encode_scalar(phi.s)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<DktutsEncapsulation> decode_dktuts_body(const Group& group, ByteView bytes) {
  const std::size_t es = group.element_size();
  const std::size_t ss = group.scalar_size();
  if (bytes.size() < es + 4 + 2 * ss) return std::nullopt;
  auto u = group.decode_element(bytes.subspan(0, es));
  std::uint32_t len = 0;
  for (std::size_t i = 0; i < 4; ++i) len = (len << 8) | bytes[es + i];
  if (bytes.size() != es + 4 + std::size_t{len} + 2 * ss) return std::nullopt;
  ByteView c = bytes.subspan(es + 4, len);
  auto r = group.decode_scalar(bytes.subspan(es + 4 + len, ss));
  auto s = group.decode_scalar(bytes.subspan(es + 4 + len + ss, ss));
  if (!u || !r || !s) return std::nullopt;
  return DktutsEncapsulation{*u, Bytes(c.begin(), c.end()), *r, *s};
}

bool ReplayCache::admit(const Group& group, const DktutsEncapsulation& phi, Timestamp now) {
  // A phi stays acceptable until TS + window and TS may lead `now` by up to
  // window, so an entry has to outlive its admission by 2 * window.
  std::erase_if(seen_, [&](const auto& entry) { return now - entry.second > 2 * window_; });
  Bytes body = encode_dktuts_body(group, phi);
  Bytes digest(crypto_hash_sha256_BYTES);
  crypto_hash_sha256(digest.data(), body.data(), body.size());
  auto [it, inserted] = seen_.try_emplace(std::move(digest), now);
  return inserted;
}

}  // namespace clsc
