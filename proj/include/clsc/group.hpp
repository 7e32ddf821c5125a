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

#ifndef CLSC_GROUP_HPP_
#define CLSC_GROUP_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "clsc/common.hpp"

namespace clsc {

class OpCounter;

enum class BackendId : std::uint8_t {
  kRistretto255 = 1,
  kToy = 2,
};

std::string_view backend_name(BackendId id);

/// An element of Z_q, always reduced. Stored as 32 little-endian bytes
/// regardless of backend; the toy backend only uses the low 8.
struct Scalar {
  std::array<std::uint8_t, 32> le{};

  bool is_zero() const;
  // Low 64 bits of the value. Exact on the toy backend.
  std::uint64_t low_u64() const;
  bool operator==(const Scalar&) const = default;
};

/// An element of the prime-order group G. The representation is the
/// backend's internal form; use Group::encode_element for wire bytes.
/// The all-zero representation is the identity on every backend.
struct Element {
  std::array<std::uint8_t, 32> repr{};

  bool is_identity() const;
  bool operator==(const Element&) const = default;
};

/// Cyclic group of prime order q, written additively, together with the
/// scalar field Z_q. Implementations are immutable and safe to share
/// across threads.
///
/// Encodings:
///   ristretto255  element: 32-byte canonical ristretto encoding
///                 scalar:  32-byte little-endian, < l
///   toy           element: 8-byte big-endian integer, < q
///                 scalar:  8-byte big-endian integer, < q
class Group {
 public:
  virtual ~Group() = default;

  virtual BackendId backend() const = 0;
  virtual std::string description() const = 0;
  /// q as big-endian bytes without leading zeros.
  virtual Bytes order() const = 0;
  virtual std::size_t scalar_size() const = 0;
  virtual std::size_t element_size() const = 0;

  virtual Scalar scalar_add(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar scalar_mul(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar scalar_neg(const Scalar& a) const = 0;
  /// Throws ZeroInversion when a is zero.
  virtual Scalar scalar_invert(const Scalar& a) const = 0;
  /// Reduces a 512-bit little-endian integer mod q.
  virtual Scalar scalar_from_wide(std::span<const std::uint8_t, 64> wide) const = 0;
  virtual Scalar scalar_from_u64(std::uint64_t v) const = 0;

  virtual Element generator() const = 0;
  Element identity() const { return Element{}; }
  virtual Element point_mul(const Scalar& k, const Element& pt) const = 0;
  /// k * P for the fixed generator P.
  virtual Element base_mul(const Scalar& k) const = 0;
  virtual Element point_add(const Element& a, const Element& b) const = 0;
  virtual Element point_neg(const Element& a) const = 0;

  virtual Bytes encode_scalar(const Scalar& s) const = 0;
  virtual std::optional<Scalar> decode_scalar(ByteView bytes) const = 0;
  virtual Bytes encode_element(const Element& e) const = 0;
  virtual std::optional<Element> decode_element(ByteView bytes) const = 0;

  Scalar scalar_sub(const Scalar& a, const Scalar& b) const {
    return scalar_add(a, scalar_neg(b));
  }
};

using GroupPtr = std::shared_ptr<const Group>;

/// ristretto255 backed by libsodium. Constant-time on secret scalars.
GroupPtr make_ristretto255();

/// (Z_q, +) with generator 1. Variable-time; for tests and vectors only.
/// Throws UnsupportedParameter unless q is a prime in [3, 2^63).
GroupPtr make_toy_group(std::uint64_t q = 13);

/// Decorates a group so that scalar multiplications, scalar products and
/// inversions are tallied into `counter`. The counter must outlive the
/// returned group.
GroupPtr make_counting_group(GroupPtr inner, OpCounter& counter);

/// Toy-backend helpers for hand-computed vectors.
Element toy_element(std::uint64_t v);
std::uint64_t toy_value(const Element& e);

bool is_probable_prime(std::uint64_t n);

}  // namespace clsc

#endif  // CLSC_GROUP_HPP_
