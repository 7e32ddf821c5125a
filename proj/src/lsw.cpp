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

#include <sodium.h>

namespace clsc {

namespace {

SymmetricKey session_key(const SystemParams& params, const Element& x, const Element& u,
                         std::string_view sender_id, std::string_view receiver_id) {
  Transcript t = params.suite().transcript();
  t.element(x).element(u).identity(sender_id).identity(receiver_id);
  return params.suite().kdf_key(t);
}

Scalar signature_hash(const SystemParams& params, ByteView tag, const FullPublicKey& sender,
                      const FullPublicKey& receiver, const Element& q, const Element& x,
                      const Element& u) {
  Transcript t = params.suite().transcript();
  t.tag(tag)
      .identity(sender.id)
      .identity(receiver.id)
      .element(sender.r)
      .element(receiver.r)
      .element(sender.p)
      .element(receiver.p)
      .element(q)
      .element(x)
      .element(u);
  return params.suite().h2(t);
}

}  // namespace

LswSessionState::~LswSessionState() { sodium_memzero(u_.le.data(), u_.le.size()); }

LswKeyGen lsw_symmetric_key_gen(const SystemParams& params, std::string_view sender_id,
                                const CombinedPublicKey& receiver, Rng& rng) {
  const Group& g = params.group();
  LswSessionState state;
  state.u_ = random_nonzero_scalar(g, rng);
  state.big_u_ = g.point_mul(state.u_, receiver.y);
  state.x_ = g.base_mul(state.u_);
  state.sender_id_ = std::string(sender_id);
  state.receiver_ = receiver;
  SymmetricKey k = session_key(params, state.x_, state.big_u_, sender_id, receiver.pk.id);
  return {k, std::move(state)};
}

LswEncapsulation lsw_encapsulate(const SystemParams& params, LswSessionState& state, ByteView tag,
                                 const UserKeyPair& sender, Rng& rng) {
  if (state.consumed_) throw StateConsumed();
  if (sender.sk.id != state.sender_id_ || sender.pk.id != state.sender_id_) {
    throw KeyMismatch("sender key does not belong to '" + state.sender_id_ + "'");
  }
  const Group& g = params.group();
  for (;;) {
    Scalar a = random_nonzero_scalar(g, rng);
    Element q = g.base_mul(a);
    Scalar h = signature_hash(params, tag, sender.pk, state.receiver_.pk, q, state.x_,
                              state.big_u_);
    Scalar denom = g.scalar_add(g.scalar_mul(h, sender.sk.x), sender.sk.d);
    // Probability ~1/q; a fresh a changes Q and therefore h.
    if (denom.is_zero()) continue;
    Scalar s = g.scalar_mul(a, g.scalar_invert(denom));
    state.consumed_ = true;
    sodium_memzero(state.u_.le.data(), state.u_.le.size());
    sodium_memzero(a.le.data(), a.le.size());
    return {q, state.big_u_, s, h};
  }
}

std::optional<SymmetricKey> lsw_decapsulate(const SystemParams& params,
                                            const LswEncapsulation& phi, ByteView tag,
                                            const CombinedPublicKey& sender,
                                            const UserKeyPair& recipient) {
  const Group& g = params.group();
  if (phi.s.is_zero() || phi.h.is_zero() || phi.u.is_identity() || phi.q.is_identity()) {
    return std::nullopt;
  }
  Scalar sigma = g.scalar_add(recipient.sk.d, recipient.sk.x);
  if (sigma.is_zero()) return std::nullopt;
  Element x = g.point_mul(g.scalar_invert(sigma), phi.u);

  Scalar h = signature_hash(params, tag, sender.pk, recipient.pk, phi.q, x, phi.u);
  if (h != phi.h) return std::nullopt;
  // s * (h*P_A + R_A + H1(ID_A, R_A)*P_pub) == Q
  Element lhs = g.point_mul(phi.s, g.point_add(g.point_mul(h, sender.pk.p), sender.partial));
  if (lhs != phi.q) return std::nullopt;
  return session_key(params, x, phi.u, sender.pk.id, recipient.pk.id);
}

std::optional<SymmetricKey> lsw_decapsulate(const SystemParams& params,
                                            const LswEncapsulation& phi, ByteView tag,
                                            const FullPublicKey& sender,
                                            const UserKeyPair& recipient) {
  CombinedPublicKey combined;
  try {
    combined = combine_public_key(params, sender);
  } catch (const KeyValidationError&) {
    return std::nullopt;
  }
  return lsw_decapsulate(params, phi, tag, combined, recipient);
}

Bytes encode_lsw_body(const Group& group, const LswEncapsulation& phi) {
  Bytes out;
  for (const Bytes& part : {group.encode_element(phi.q), group.encode_element(phi.u),
                            group.encode_scalar(phi.s), group.encode_scalar(phi.h)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<LswEncapsulation> decode_lsw_body(const Group& group, ByteView bytes) {
  const std::size_t es = group.element_size();
  const std::size_t ss = group.scalar_size();
  if (bytes.size() != 2 * es + 2 * ss) return std::nullopt;
  auto q = group.decode_element(bytes.subspan(0, es));
  auto u = group.decode_element(bytes.subspan(es, es));
  auto s = group.decode_scalar(bytes.subspan(2 * es, ss));
  auto h = group.decode_scalar(bytes.subspan(2 * es + ss, ss));
  if (!q || !u || !s || !h) return std::nullopt;
  return LswEncapsulation{*q, *u, *s, *h};
}

}  // namespace clsc
