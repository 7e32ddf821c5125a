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

#ifndef CLSC_USER_KEYS_HPP_
#define CLSC_USER_KEYS_HPP_

#include <string>

#include "clsc/kgc.hpp"

namespace clsc {

/// sk = (x, d): user secret value plus KGC partial key.
struct FullPrivateKey {
  std::string id;
  Scalar x;
  Scalar d;
};

/// pk = (P_E, R): P_E = x*P and the KGC's R. Carries its identity so it
/// cannot be used under another ID in a transcript.
struct FullPublicKey {
  std::string id;
  Element p;
  Element r;
  bool operator==(const FullPublicKey&) const = default;
};

/// A user's own key material. Protocol roles need both halves: the
/// transcripts bind R and P_E of both parties.
struct UserKeyPair {
  FullPrivateKey sk;
  FullPublicKey pk;
};

struct SecretValue {
  Scalar x;
  Element p;
};

/// Cached public-key precomputation for a peer:
///   partial = R + H1(id, R)*P_pub      (equals d*P)
///   y       = partial + P_E            (equals (d + x)*P)
/// Costs one scalar multiplication. Caching is up to the caller.
struct CombinedPublicKey {
  FullPublicKey pk;
  Element partial;
  Element y;
};

/// x uniform in [1, q-1], P_E = x*P.
SecretValue gen_user_keys(const SystemParams& params, Rng& rng);

/// Validates the partial key, then draws x (redrawing while d + x == 0,
/// which would make the combined key the identity). Throws
/// KeyValidationError if the partial key fails validation.
UserKeyPair assemble_user_keys(const SystemParams& params, const PartialPrivateKey& partial,
                               Rng& rng);

/// Throws KeyValidationError if R, P_E or the resulting Y is the identity.
CombinedPublicKey combine_public_key(const SystemParams& params, const FullPublicKey& pk);

}  // namespace clsc

#endif  // CLSC_USER_KEYS_HPP_
