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

#ifndef CLSC_KGC_HPP_
#define CLSC_KGC_HPP_

#include <string>
#include <string_view>

#include "clsc/group.hpp"
#include "clsc/hash_suite.hpp"
#include "clsc/rng.hpp"

namespace clsc {

class OpCounter;

/// Public system parameters: the group, the KGC public key P_pub and the
/// hash suite. Cheap to copy; all members are immutable or shared.
class SystemParams {
 public:
  SystemParams(GroupPtr group, Element p_pub);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Element& p_pub() const { return p_pub_; }
  const HashSuite& suite() const { return suite_; }

  /// Same parameters with hash outputs taken from `stubs`.
  SystemParams with_stubs(std::shared_ptr<const StubTable> stubs) const;
  /// Same parameters with group and cipher operations tallied into
  /// `counter`, which must outlive the returned value.
  SystemParams instrumented(OpCounter& counter) const;

 private:
  GroupPtr group_;
  Element p_pub_;
  HashSuite suite_;
};

struct MasterKey {
  Scalar x_msk;
};

/// KGC-issued half of a user's key: R = r*P and d = r + x_msk*H1(id, R).
struct PartialPrivateKey {
  std::string id;
  Element r;
  Scalar d;
};

struct SetupResult {
  SystemParams params;
  MasterKey msk;
};

/// Backend for a security parameter: 256 -> ristretto255, 4 -> toy Z_13,
/// 61 -> toy Z_(2^61-1). Throws UnsupportedParameter otherwise.
GroupPtr group_for_bits(unsigned bits);

SetupResult setup(unsigned bits, Rng& rng);
SetupResult setup(GroupPtr group, Rng& rng);

/// H1(id, R).
Scalar identity_hash(const SystemParams& params, std::string_view id, const Element& r);

/// Throws std::invalid_argument on an empty id.
PartialPrivateKey extract_partial_key(const MasterKey& msk, const SystemParams& params,
                                      std::string_view id, Rng& rng);

/// d*P == R + H1(id, R)*P_pub.
bool validate_partial_key(const SystemParams& params, const PartialPrivateKey& ppk);

}  // namespace clsc

#endif  // CLSC_KGC_HPP_
