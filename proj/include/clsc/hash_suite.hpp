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

#ifndef CLSC_HASH_SUITE_HPP_
#define CLSC_HASH_SUITE_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clsc/common.hpp"
#include "clsc/group.hpp"

namespace clsc {

class OpCounter;

inline constexpr std::size_t kSymmetricKeyBytes = 16;  // l_k = 128
inline constexpr std::size_t kMacKeyBytes = 32;
inline constexpr std::size_t kAeadTagBytes = 16;

struct SymmetricKey {
  std::array<std::uint8_t, kSymmetricKeyBytes> bytes{};
  bool operator==(const SymmetricKey&) const = default;
};

struct MacKey {
  std::array<std::uint8_t, kMacKeyBytes> bytes{};
  bool operator==(const MacKey&) const = default;
};

/// Item type tags of the transcript encoding.
enum class ItemType : std::uint8_t {
  kIdentity = 0x01,
  kElement = 0x02,
  kScalar = 0x03,
  kTag = 0x04,
  kTimestamp = 0x05,
  kKey = 0x06,
};

struct TranscriptItem {
  ItemType type;
  Bytes value;
  bool operator==(const TranscriptItem&) const = default;
};

/// Injective encoding of a typed item sequence. Each item is
///   type (1 byte) || length (4 bytes, big-endian) || value
/// with group elements and scalars in the backend's canonical encoding and
/// timestamps as 8-byte big-endian two's complement.
class Transcript {
 public:
  explicit Transcript(const Group& group) : group_(&group) {}

  Transcript& identity(std::string_view id);
  Transcript& element(const Element& e);
  Transcript& scalar(const Scalar& s);
  Transcript& tag(ByteView tag);
  Transcript& timestamp(std::int64_t ts);
  Transcript& key(const SymmetricKey& k);
  Transcript& raw(ItemType type, ByteView value);

  const Bytes& encoding() const { return encoding_; }

 private:
  const Group* group_;
  Bytes encoding_;
};

/// Inverse of Transcript::encoding(). nullopt on any framing error.
std::optional<std::vector<TranscriptItem>> parse_transcript(ByteView encoding);

/// The logical hash functions, each under its own domain label.
enum class HashFn : std::uint8_t {
  kH1 = 1,        // (ID, R) -> Z_q^*
  kH2 = 2,        // LSW signature hash -> Z_q^*
  kKdf = 3,       // LSW session key (X, U, ID_A, ID_B) -> l_k bits
  kKdfSplit = 4,  // DKTUTS (X + U) -> (k1, k2)
  kMac = 5,       // DKTUTS keyed hash F_k2 -> Z_q^*
  kDem = 6,       // hybrid DEM key from K
};

std::string_view hash_label(HashFn fn);

/// Lookup table that replaces hash outputs with fixed values so toy-group
/// vectors stay hand-computable. Keys are the exact bytes the real function
/// would hash (for kMac: k2 || transcript encoding). Values are canonical
/// scalar encodings for scalar-valued functions, 16 bytes for kKdf/kDem,
/// and 48 bytes (k1 || k2) for kKdfSplit.
class StubTable {
 public:
  void add(HashFn fn, Bytes input, Bytes output);
  const Bytes* find(HashFn fn, ByteView input) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<HashFn, Bytes>, Bytes> entries_;
};

/// H1, H2, KDF, KDF-split, F and the symmetric cipher over a given group.
///
/// Real mode (bit-exact):
///   prefix(fn)   = len(label) (1 byte) || label
///   h1, h2       = reduce(SHA-512(prefix || t)), 0 remapped to 1
///   kdf_key      = SHA-512(prefix || t)[0..16)
///   kdf_split    = k1 = SHA-512(prefix || 0x01 || t)[0..16),
///                  k2 = SHA-512(prefix || 0x02 || t)[0..32)
///   mac          = reduce(HMAC-SHA-512(k2, prefix || t)), 0 remapped to 1
///   dem_key      = SHA-512(prefix || 0x06 || 00000010 || K)[0..16)
///   sym_encrypt  = AES-128-GCM, 96-bit zero nonce, no AAD; ct || tag.
/// reduce() interprets the 64-byte digest as a little-endian integer mod q.
/// Every key passed to sym_encrypt is single-use, which is what makes the
/// fixed nonce safe.
class HashSuite {
 public:
  static constexpr std::uint8_t kSuiteId = 1;

  explicit HashSuite(GroupPtr group);

  HashSuite with_stubs(std::shared_ptr<const StubTable> stubs) const;
  HashSuite with_counter(OpCounter* counter) const;
  HashSuite with_group(GroupPtr group) const;

  const Group& group() const { return *group_; }
  bool stubbed() const { return stubs_ != nullptr; }
  Transcript transcript() const { return Transcript(*group_); }

  Scalar h1(const Transcript& t) const;
  Scalar h2(const Transcript& t) const;
  /// Throws UnsupportedParameter unless out_bits == 128.
  SymmetricKey kdf_key(const Transcript& t, std::size_t out_bits = 8 * kSymmetricKeyBytes) const;
  std::pair<SymmetricKey, MacKey> kdf_split(const Transcript& t) const;
  Scalar mac(const MacKey& k2, const Transcript& t) const;
  SymmetricKey dem_key(const SymmetricKey& k) const;

  Bytes sym_encrypt(const SymmetricKey& k1, ByteView plaintext) const;
  /// Throws DecryptFailure on a short or unauthentic ciphertext.
  Bytes sym_decrypt(const SymmetricKey& k1, ByteView ciphertext) const;

 private:
  Scalar hash_to_scalar(HashFn fn, const Transcript& t) const;
  Scalar scalar_from_stub(HashFn fn, ByteView input) const;
  const Bytes& stub_value(HashFn fn, ByteView input) const;

  GroupPtr group_;
  std::shared_ptr<const StubTable> stubs_;
  OpCounter* counter_ = nullptr;
};

}  // namespace clsc

#endif  // CLSC_HASH_SUITE_HPP_
