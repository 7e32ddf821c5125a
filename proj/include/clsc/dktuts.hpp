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

// DKTUTS-CLSC-TKEM: direct key transport with a timestamp. K is chosen at
// random and encrypted, together with the full transcript, under k1; the
// keyed hash r = F_k2(...) is signed as s = x / (r + x_A).

#ifndef CLSC_DKTUTS_HPP_
#define CLSC_DKTUTS_HPP_

#include <map>
#include <optional>
#include <string>

#include "clsc/clock.hpp"
#include "clsc/user_keys.hpp"

namespace clsc {

inline constexpr std::int64_t kDefaultFreshnessWindow = 120;

/// phi = <U, c, r, s>.
struct DktutsEncapsulation {
  Element u;
  Bytes c;
  Scalar r;
  Scalar s;
  bool operator==(const DktutsEncapsulation&) const = default;
};

/// The tuple encrypted under k1 and authenticated by F_k2, encoded as a
/// transcript in this order:
///   K (key), TS (timestamp), tag, ID_A, ID_B (identity),
///   R_A, R_B, P_A, P_B, X, U (element)
struct InnerPlaintext {
  SymmetricKey key;
  Timestamp ts = 0;
  Bytes tag;
  std::string sender_id;
  std::string receiver_id;
  Element r_a, r_b, p_a, p_b, x, u;
  bool operator==(const InnerPlaintext&) const = default;
};

Transcript encode_inner_plaintext(const Group& group, const InnerPlaintext& pt);
std::optional<InnerPlaintext> decode_inner_plaintext(const Group& group, ByteView bytes);

class DktutsSessionState {
 public:
  DktutsSessionState(DktutsSessionState&&) = default;
  DktutsSessionState& operator=(DktutsSessionState&&) = default;
  DktutsSessionState(const DktutsSessionState&) = delete;
  DktutsSessionState& operator=(const DktutsSessionState&) = delete;
  ~DktutsSessionState();

  bool consumed() const { return consumed_; }
  Timestamp timestamp() const { return ts_; }
  const std::string& sender_id() const { return sender_id_; }
  const CombinedPublicKey& receiver() const { return receiver_; }
  const Scalar& ephemeral() const { return x_; }
  const Element& x() const { return big_x_; }
  const Element& u() const { return big_u_; }
  const SymmetricKey& k1() const { return k1_; }
  const MacKey& k2() const { return k2_; }

 private:
  friend struct DktutsKeyGen dktuts_symmetric_key_gen(const SystemParams&, std::string_view,
                                                      const CombinedPublicKey&, const Clock&,
                                                      Rng&);
  friend DktutsEncapsulation dktuts_encapsulate(const SystemParams&, DktutsSessionState&,
                                                ByteView, const UserKeyPair&, Rng&);
  DktutsSessionState() = default;

  Scalar x_;
  SymmetricKey k1_;
  MacKey k2_;
  Timestamp ts_ = 0;
  std::string sender_id_;
  CombinedPublicKey receiver_;
  Element big_x_;
  Element big_u_;
  SymmetricKey key_;
  bool consumed_ = false;
};

struct DktutsKeyGen {
  SymmetricKey key;
  DktutsSessionState state;
};

/// Draws K, then x and a; U = a*P, X = x*Y_B, (k1, k2) = KDF-split(X + U),
/// TS = clock.now(). Two scalar multiplications.
DktutsKeyGen dktuts_symmetric_key_gen(const SystemParams& params, std::string_view sender_id,
                                      const CombinedPublicKey& receiver, const Clock& clock,
                                      Rng& rng);

/// c = E_k1(plaintext), r = F_k2(plaintext), s = x / (r + x_A). If
/// r + x_A == 0 the state's x is redrawn (X, k1, k2 recomputed) from `rng`.
/// Throws StateConsumed on reuse and KeyMismatch on a wrong sender.
DktutsEncapsulation dktuts_encapsulate(const SystemParams& params, DktutsSessionState& state,
                                       ByteView tag, const UserKeyPair& sender, Rng& rng);

/// X' = s*(d_B + x_B) * (P_A + r*P); (k1, k2) = KDF-split(X' + U);
/// decrypts c and accepts K only if TS is within `window` seconds of
/// clock.now(), the plaintext U and X equal the transmitted U and X', the
/// recomputed r equals r, and the plaintext tag, identities and public keys
/// equal the supplied ones. nullopt is the single rejection value.
std::optional<SymmetricKey> dktuts_decapsulate(const SystemParams& params,
                                               const DktutsEncapsulation& phi, ByteView tag,
                                               const FullPublicKey& sender,
                                               const UserKeyPair& recipient, const Clock& clock,
                                               std::int64_t window = kDefaultFreshnessWindow);

bool is_fresh(Timestamp ts, Timestamp now, std::int64_t window);

/// U || len(c) (4 bytes, big-endian) || c || r || s.
Bytes encode_dktuts_body(const Group& group, const DktutsEncapsulation& phi);
std::optional<DktutsEncapsulation> decode_dktuts_body(const Group& group, ByteView bytes);

/// Optional caller-side replay filter. The protocol accepts a replayed phi
/// for as long as its timestamp is fresh; this remembers every admitted phi
/// (by SHA-256 of its body) for 2 * `window` seconds after admission.
class ReplayCache {
 public:
  explicit ReplayCache(std::int64_t window = kDefaultFreshnessWindow) : window_(window) {}

  /// True if phi has not been admitted within the window; records it.
  bool admit(const Group& group, const DktutsEncapsulation& phi, Timestamp now);
  std::size_t size() const { return seen_.size(); }

 private:
  std::int64_t window_;
  std::map<Bytes, Timestamp> seen_;
};

}  // namespace clsc

#endif  // CLSC_DKTUTS_HPP_
