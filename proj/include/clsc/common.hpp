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

#ifndef CLSC_COMMON_HPP_
#define CLSC_COMMON_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clsc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::string to_hex(ByteView bytes);
// Throws std::invalid_argument on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inversion of the zero scalar.
class ZeroInversion : public Error {
 public:
  ZeroInversion() : Error("inversion of zero scalar") {}
};

class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

// A session state was passed to encapsulation a second time.
class StateConsumed : public Error {
 public:
  StateConsumed() : Error("session state already consumed") {}
};

// Key material does not match the identity or session it is used with.
class KeyMismatch : public Error {
 public:
  using Error::Error;
};

// A partial private key failed d*P == R + H1(ID,R)*P_pub, or a public key
// is degenerate.
class KeyValidationError : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class DecryptFailure : public Error {
 public:
  DecryptFailure() : Error("symmetric decryption failed") {}
};

// Stub-hash mode was asked for an input missing from its table.
class StubMiss : public Error {
 public:
  using Error::Error;
};

}  // namespace clsc

#endif  // CLSC_COMMON_HPP_
