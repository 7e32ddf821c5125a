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

// LSW-CLSC-TKEM: certificateless signcryption tag-KEM built on a
// Schnorr-like signature. The sender encrypts u*Y_B, signs the transcript
// with (x_A, d_A), and the session key is KDF(X, U, ID_A, ID_B).

#ifndef CLSC_LSW_HPP_
#define CLSC_LSW_HPP_

#include <optional>
#include <string>

#include "clsc/user_keys.hpp"

namespace clsc {

/// phi = <Q, U, sigma = (s, h)>.
struct LswEncapsulation {
  Element q;
  Element u;
  Scalar s;
  Scalar h;
  bool operator==(const LswEncapsulation&) const = default;
};

/// Sender state between key generation and encapsulation. Single use:
/// lsw_encapsulate marks it consumed and a second call throws
/// StateConsumed. Move-only.
class LswSessionState {
 public:
  LswSessionState(LswSessionState&&) = default;
  LswSessionState& operator=(LswSessionState&&) = default;
  LswSessionState(const LswSessionState&) = delete;
  LswSessionState& operator=(const LswSessionState&) = delete;
  ~LswSessionState();

  bool consumed() const { return consumed_; }
  const std::string& sender_id() const { return sender_id_; }
  const CombinedPublicKey& receiver() const { return receiver_; }
  const Scalar& ephemeral() const { return u_; }
  const Element& x() const { return x_; }
  const Element& u() const { return big_u_; }

 private:
  friend struct LswKeyGen lsw_symmetric_key_gen(const SystemParams&, std::string_view,
                                                const CombinedPublicKey&, Rng&);
  friend LswEncapsulation lsw_encapsulate(const SystemParams&, LswSessionState&, ByteView,
                                          const UserKeyPair&, Rng&);
  LswSessionState() = default;

  Scalar u_;
  std::string sender_id_;
  CombinedPublicKey receiver_;
  Element x_;
  Element big_u_;
  bool consumed_ = false;
};

struct LswKeyGen {
  SymmetricKey key;
  LswSessionState state;
};

/// Draws u, computes U = u*Y_B and X = u*P, K = KDF(X, U, ID_A, ID_B).
/// Two scalar multiplications.
LswKeyGen lsw_symmetric_key_gen(const SystemParams& params, std::string_view sender_id,
                                const CombinedPublicKey& receiver, Rng& rng);

/// Q = a*P, h = H2(tag, ID_A, ID_B, R_A, R_B, P_A, P_B, Q, X, U),
/// s = a / (h*x_A + d_A). Redraws a if the denominator is zero. Throws
/// StateConsumed on reuse and KeyMismatch if `sender` is not the state's
/// sender.
LswEncapsulation lsw_encapsulate(const SystemParams& params, LswSessionState& state, ByteView tag,
                                 const UserKeyPair& sender, Rng& rng);

/// Returns K, or nullopt (the single rejection value) if phi does not
/// verify under the sender's key for this tag and recipient.
/// `sender` is the sender's precomputed combined key; its `partial` member
/// supplies R_A + H1(ID_A, R_A)*P_pub.
std::optional<SymmetricKey> lsw_decapsulate(const SystemParams& params,
                                            const LswEncapsulation& phi, ByteView tag,
                                            const CombinedPublicKey& sender,
                                            const UserKeyPair& recipient);

/// Same, combining the sender's public key first (one extra scalar
/// multiplication). A degenerate sender key is a rejection.
std::optional<SymmetricKey> lsw_decapsulate(const SystemParams& params,
                                            const LswEncapsulation& phi, ByteView tag,
                                            const FullPublicKey& sender,
                                            const UserKeyPair& recipient);

/// Q || U || s || h in canonical encodings.
Bytes encode_lsw_body(const Group& group, const LswEncapsulation& phi);
std::optional<LswEncapsulation> decode_lsw_body(const Group& group, ByteView bytes);

}  // namespace clsc

#endif  // CLSC_LSW_HPP_
