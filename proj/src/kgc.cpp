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

#include "clsc/kgc.hpp"

#include "clsc/op_counter.hpp"

namespace clsc {

SystemParams::SystemParams(GroupPtr group, Element p_pub)
    : group_(std::move(group)), p_pub_(p_pub), suite_(group_) {
  if (p_pub_.is_identity()) throw KeyValidationError("P_pub is the identity");
}

SystemParams SystemParams::with_stubs(std::shared_ptr<const StubTable> stubs) const {
  SystemParams copy = *this;
  copy.suite_ = suite_.with_stubs(std::move(stubs));
  return copy;
}

SystemParams SystemParams::instrumented(OpCounter& counter) const {
  SystemParams copy = *this;
  copy.group_ = make_counting_group(group_, counter);
  copy.suite_ = suite_.with_group(copy.group_).with_counter(&counter);
  return copy;
}

GroupPtr group_for_bits(unsigned bits) {
  switch (bits) {
    case 256:
      return make_ristretto255();
    case 4:
      return make_toy_group(13);
    case 61:
      return make_toy_group((std::uint64_t{1} << 61) - 1);
    default:
      throw UnsupportedParameter("no backend for security parameter " + std::to_string(bits));
  }
}

SetupResult setup(unsigned bits, Rng& rng) { return setup(group_for_bits(bits), rng); }

SetupResult setup(GroupPtr group, Rng& rng) {
  MasterKey msk{random_nonzero_scalar(*group, rng)};
  Element p_pub = group->base_mul(msk.x_msk);
  return {SystemParams(std::move(group), p_pub), msk};
}

Scalar identity_hash(const SystemParams& params, std::string_view id, const Element& r) {
  Transcript t = params.suite().transcript();
  t.identity(id).element(r);
  return params.suite().h1(t);
}

PartialPrivateKey extract_partial_key(const MasterKey& msk, const SystemParams& params,
                                      std::string_view id, Rng& rng) {
  if (id.empty()) throw std::invalid_argument("identity must be nonempty");
  const Group& g = params.group();
  for (;;) {
    Scalar r = random_nonzero_scalar(g, rng);
    Element big_r = g.base_mul(r);
    Scalar h = identity_hash(params, id, big_r);
    Scalar d = g.scalar_add(r, g.scalar_mul(msk.x_msk, h));
    // d is used as (part of) a denominator later on.
    if (!d.is_zero()) return {std::string(id), big_r, d};
  }
}

bool validate_partial_key(const SystemParams& params, const PartialPrivateKey& ppk) {
  const Group& g = params.group();
  if (ppk.id.empty() || ppk.d.is_zero() || ppk.r.is_identity()) return false;
  Scalar h = identity_hash(params, ppk.id, ppk.r);
  Element lhs = g.base_mul(ppk.d);
  Element rhs = g.point_add(ppk.r, g.point_mul(h, params.p_pub()));
  return lhs == rhs;
}

}  // namespace clsc
