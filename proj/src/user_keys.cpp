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

#include "clsc/user_keys.hpp"

namespace clsc {

SecretValue gen_user_keys(const SystemParams& params, Rng& rng) {
  Scalar x = random_nonzero_scalar(params.group(), rng);
  return {x, params.group().base_mul(x)};
}

UserKeyPair assemble_user_keys(const SystemParams& params, const PartialPrivateKey& partial,
                               Rng& rng) {
  if (!validate_partial_key(params, partial)) {
    throw KeyValidationError("partial private key for '" + partial.id + "' does not validate");
  }
  const Group& g = params.group();
  for (;;) {
    SecretValue sv = gen_user_keys(params, rng);
    if (g.scalar_add(sv.x, partial.d).is_zero()) continue;
    return {FullPrivateKey{partial.id, sv.x, partial.d},
            FullPublicKey{partial.id, sv.p, partial.r}};
  }
}

CombinedPublicKey combine_public_key(const SystemParams& params, const FullPublicKey& pk) {
  const Group& g = params.group();
  if (pk.id.empty()) throw KeyValidationError("public key without identity");
  if (pk.p.is_identity() || pk.r.is_identity()) {
    throw KeyValidationError("public key component is the identity");
  }
  Scalar h = identity_hash(params, pk.id, pk.r);
  Element partial = g.point_add(pk.r, g.point_mul(h, params.p_pub()));
  Element y = g.point_add(partial, pk.p);
  if (y.is_identity() || partial.is_identity()) {
    throw KeyValidationError("combined public key is the identity");
  }
  return {pk, partial, y};
}

}  // namespace clsc
