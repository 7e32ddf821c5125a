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

#include "clsc/group.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>

#include "clsc/op_counter.hpp"

namespace clsc {

namespace {

using u128 = unsigned __int128;

void ensure_sodium() {
  static const bool ready = [] {
    if (sodium_init() < 0) throw Error("libsodium initialization failed");
    return true;
  }();
  (void)ready;
}

std::uint64_t load_le64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

void store_le64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

Bytes be64(std::uint64_t v) {
  Bytes out(8);
  for (int i = 7; i >= 0; --i, v >>= 8) out[i] = static_cast<std::uint8_t>(v);
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Toy backend: (Z_q, +), generator 1. Scalar multiplication is integer
// multiplication mod q, so every protocol value can be checked by hand.

class ToyGroup final : public Group {
 public:
  explicit ToyGroup(std::uint64_t q) : q_(q) {}

  BackendId backend() const override { return BackendId::kToy; }
  std::string description() const override { return "toy Z_" + std::to_string(q_); }
  Bytes order() const override {
    Bytes b = be64(q_);
    auto first = std::find_if(b.begin(), b.end(), [](std::uint8_t c) { return c != 0; });
    return Bytes(first, b.end());
  }
  std::size_t scalar_size() const override { return 8; }
  std::size_t element_size() const override { return 8; }

  Scalar scalar_add(const Scalar& a, const Scalar& b) const override {
    return make_scalar((static_cast<u128>(get(a)) + get(b)) % q_);
  }
  Scalar scalar_mul(const Scalar& a, const Scalar& b) const override {
    return make_scalar(mulmod(get(a), get(b), q_));
  }
  Scalar scalar_neg(const Scalar& a) const override {
    std::uint64_t v = get(a);
    return make_scalar(v == 0 ? 0 : q_ - v);
  }
  Scalar scalar_invert(const Scalar& a) const override {
    std::uint64_t v = get(a);
    if (v == 0) throw ZeroInversion();
    return make_scalar(powmod(v, q_ - 2, q_));
  }
  Scalar scalar_from_wide(std::span<const std::uint8_t, 64> wide) const override {
    u128 acc = 0;
    for (int i = 63; i >= 0; --i) acc = ((acc << 8) | wide[i]) % q_;
    return make_scalar(static_cast<std::uint64_t>(acc));
  }
  Scalar scalar_from_u64(std::uint64_t v) const override { return make_scalar(v % q_); }

  Element generator() const override { return make_element(1 % q_); }
  Element point_mul(const Scalar& k, const Element& pt) const override {
    return make_element(mulmod(get(k), get(pt), q_));
  }
  Element base_mul(const Scalar& k) const override { return make_element(get(k)); }
  Element point_add(const Element& a, const Element& b) const override {
    return make_element((static_cast<u128>(get(a)) + get(b)) % q_);
  }
  Element point_neg(const Element& a) const override {
    std::uint64_t v = get(a);
    return make_element(v == 0 ? 0 : q_ - v);
  }

  Bytes encode_scalar(const Scalar& s) const override { return be64(get(s)); }
  std::optional<Scalar> decode_scalar(ByteView bytes) const override {
    auto v = decode_be(bytes);
    if (!v) return std::nullopt;
    return make_scalar(*v);
  }
  Bytes encode_element(const Element& e) const override { return be64(get(e)); }
  std::optional<Element> decode_element(ByteView bytes) const override {
    auto v = decode_be(bytes);
    if (!v) return std::nullopt;
    return make_element(*v);
  }

 private:
  static std::uint64_t get(const Scalar& s) { return load_le64(s.le.data()); }
  static std::uint64_t get(const Element& e) { return load_le64(e.repr.data()); }
  static Scalar make_scalar(std::uint64_t v) {
    Scalar s;
    store_le64(s.le.data(), v);
    return s;
  }
  static Element make_element(std::uint64_t v) {
    Element e;
    store_le64(e.repr.data(), v);
    return e;
  }
  std::optional<std::uint64_t> decode_be(ByteView bytes) const {
    if (bytes.size() != 8) return std::nullopt;
    std::uint64_t v = 0;
    for (std::uint8_t b : bytes) v = (v << 8) | b;
    if (v >= q_) return std::nullopt;
    return v;
  }

  std::uint64_t q_;
};

// ---------------------------------------------------------------------------
// ristretto255 via libsodium.

// l = 2^252 + 27742317777372353535851937790883648493, little-endian.
constexpr std::array<std::uint8_t, 32> kRistrettoOrder = {
    0xed, 0xd3, 0xf5, 0x5c, 0x1a, 0x63, 0x12, 0x58, 0xd6, 0x9c, 0xf7,
    0xa2, 0xde, 0xf9, 0xde, 0x14, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x10};

bool below_order(ByteView le) {
  for (int i = 31; i >= 0; --i) {
    if (le[i] < kRistrettoOrder[i]) return true;
    if (le[i] > kRistrettoOrder[i]) return false;
  }
  return false;
}

class Ristretto255Group final : public Group {
 public:
  Ristretto255Group() {
    ensure_sodium();
    Scalar one = scalar_from_u64(1);
    if (crypto_scalarmult_ristretto255_base(generator_.repr.data(), one.le.data()) != 0) {
      throw Error("ristretto255 generator");
    }
  }

  BackendId backend() const override { return BackendId::kRistretto255; }
  std::string description() const override { return "ristretto255"; }
  Bytes order() const override { return Bytes(kRistrettoOrder.rbegin(), kRistrettoOrder.rend()); }
  std::size_t scalar_size() const override { return 32; }
  std::size_t element_size() const override { return 32; }

  Scalar scalar_add(const Scalar& a, const Scalar& b) const override {
    Scalar r;
    crypto_core_ristretto255_scalar_add(r.le.data(), a.le.data(), b.le.data());
    return r;
  }
  Scalar scalar_mul(const Scalar& a, const Scalar& b) const override {
    Scalar r;
    crypto_core_ristretto255_scalar_mul(r.le.data(), a.le.data(), b.le.data());
    return r;
  }
  Scalar scalar_neg(const Scalar& a) const override {
    Scalar r;
    crypto_core_ristretto255_scalar_negate(r.le.data(), a.le.data());
    return r;
  }
  Scalar scalar_invert(const Scalar& a) const override {
    Scalar r;
    if (crypto_core_ristretto255_scalar_invert(r.le.data(), a.le.data()) != 0) {
      throw ZeroInversion();
    }
    return r;
  }
  Scalar scalar_from_wide(std::span<const std::uint8_t, 64> wide) const override {
    Scalar r;
    crypto_core_ristretto255_scalar_reduce(r.le.data(), wide.data());
    return r;
  }
  Scalar scalar_from_u64(std::uint64_t v) const override {
    Scalar r;
    store_le64(r.le.data(), v);
    return r;
  }

  Element generator() const override { return generator_; }

  // libsodium reports an identity result as failure; inputs are validated
  // at decode time, so -1 here means exactly that.
  Element point_mul(const Scalar& k, const Element& pt) const override {
    Element r;
    if (crypto_scalarmult_ristretto255(r.repr.data(), k.le.data(), pt.repr.data()) != 0) {
      return identity();
    }
    return r;
  }
  Element base_mul(const Scalar& k) const override {
    Element r;
    if (crypto_scalarmult_ristretto255_base(r.repr.data(), k.le.data()) != 0) {
      return identity();
    }
    return r;
  }
  Element point_add(const Element& a, const Element& b) const override {
    Element r;
    if (crypto_core_ristretto255_add(r.repr.data(), a.repr.data(), b.repr.data()) != 0) {
      throw Error("ristretto255 add on invalid element");
    }
    return r;
  }
  Element point_neg(const Element& a) const override {
    Element r;
    Element zero = identity();
    if (crypto_core_ristretto255_sub(r.repr.data(), zero.repr.data(), a.repr.data()) != 0) {
      throw Error("ristretto255 negate on invalid element");
    }
    return r;
  }

  Bytes encode_scalar(const Scalar& s) const override { return Bytes(s.le.begin(), s.le.end()); }
  std::optional<Scalar> decode_scalar(ByteView bytes) const override {
    if (bytes.size() != 32 || !below_order(bytes)) return std::nullopt;
    Scalar s;
    std::copy(bytes.begin(), bytes.end(), s.le.begin());
    return s;
  }
  Bytes encode_element(const Element& e) const override {
    return Bytes(e.repr.begin(), e.repr.end());
  }
  std::optional<Element> decode_element(ByteView bytes) const override {
    if (bytes.size() != 32) return std::nullopt;
    if (crypto_core_ristretto255_is_valid_point(bytes.data()) != 1) return std::nullopt;
    Element e;
    std::copy(bytes.begin(), bytes.end(), e.repr.begin());
    return e;
  }

 private:
  Element generator_;
};

// ---------------------------------------------------------------------------

class CountingGroup final : public Group {
 public:
  CountingGroup(GroupPtr inner, OpCounter& counter)
      : inner_(std::move(inner)), counter_(&counter) {}

  BackendId backend() const override { return inner_->backend(); }
  std::string description() const override { return inner_->description(); }
  Bytes order() const override { return inner_->order(); }
  std::size_t scalar_size() const override { return inner_->scalar_size(); }
  std::size_t element_size() const override { return inner_->element_size(); }

  Scalar scalar_add(const Scalar& a, const Scalar& b) const override {
    return inner_->scalar_add(a, b);
  }
  Scalar scalar_mul(const Scalar& a, const Scalar& b) const override {
    counter_->count_field_mult();
    return inner_->scalar_mul(a, b);
  }
  Scalar scalar_neg(const Scalar& a) const override { return inner_->scalar_neg(a); }
  Scalar scalar_invert(const Scalar& a) const override {
    counter_->count_field_inversion();
    return inner_->scalar_invert(a);
  }
  Scalar scalar_from_wide(std::span<const std::uint8_t, 64> wide) const override {
    return inner_->scalar_from_wide(wide);
  }
  Scalar scalar_from_u64(std::uint64_t v) const override { return inner_->scalar_from_u64(v); }

  Element generator() const override { return inner_->generator(); }
  Element point_mul(const Scalar& k, const Element& pt) const override {
    counter_->count_scalar_mult();
    return inner_->point_mul(k, pt);
  }
  Element base_mul(const Scalar& k) const override {
    counter_->count_scalar_mult();
    return inner_->base_mul(k);
  }
  Element point_add(const Element& a, const Element& b) const override {
    return inner_->point_add(a, b);
  }
  Element point_neg(const Element& a) const override { return inner_->point_neg(a); }

  Bytes encode_scalar(const Scalar& s) const override { return inner_->encode_scalar(s); }
  std::optional<Scalar> decode_scalar(ByteView bytes) const override {
    return inner_->decode_scalar(bytes);
  }
  Bytes encode_element(const Element& e) const override { return inner_->encode_element(e); }
  std::optional<Element> decode_element(ByteView bytes) const override {
    return inner_->decode_element(bytes);
  }

 private:
  GroupPtr inner_;
  OpCounter* counter_;
};

}  // namespace

std::string_view backend_name(BackendId id) {
  switch (id) {
    case BackendId::kRistretto255:
      return "ristretto255";
    case BackendId::kToy:
      return "toy";
  }
  return "unknown";
}

bool Scalar::is_zero() const {
  std::uint8_t acc = 0;
  for (std::uint8_t b : le) acc |= b;
  return acc == 0;
}

std::uint64_t Scalar::low_u64() const { return load_le64(le.data()); }

bool Element::is_identity() const {
  return std::all_of(repr.begin(), repr.end(), [](std::uint8_t b) { return b == 0; });
}

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

GroupPtr make_ristretto255() {
  static const GroupPtr instance = std::make_shared<Ristretto255Group>();
  return instance;
}

GroupPtr make_toy_group(std::uint64_t q) {
  if (q < 3 || q >= (std::uint64_t{1} << 63) || !is_probable_prime(q)) {
    throw UnsupportedParameter("toy group order must be a prime in [3, 2^63): " +
                               std::to_string(q));
  }
  return std::make_shared<ToyGroup>(q);
}

GroupPtr make_counting_group(GroupPtr inner, OpCounter& counter) {
  return std::make_shared<CountingGroup>(std::move(inner), counter);
}

Element toy_element(std::uint64_t v) {
  Element e;
  store_le64(e.repr.data(), v);
  return e;
}

std::uint64_t toy_value(const Element& e) { return load_le64(e.repr.data()); }

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace clsc
