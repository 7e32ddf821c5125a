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

// Binary file formats. Every file starts with
//
//   magic "CLSC" (4) || version (1) = 0x01 || backend id (1) || role (1)
//
// followed by a role-specific body. Strings are u16 big-endian length +
// UTF-8 bytes; byte strings are u32 big-endian length + bytes; elements
// and scalars use the backend's fixed-length canonical encodings. Readers
// reject unknown versions, the wrong role, a backend different from the
// parameters', and trailing bytes.

#ifndef CLSC_CODEC_HPP_
#define CLSC_CODEC_HPP_

#include <filesystem>

#include "clsc/hybrid.hpp"

namespace clsc {

inline constexpr std::uint8_t kFormatVersion = 1;

enum class FileRole : std::uint8_t {
  kParams = 0x01,
  kMasterKey = 0x02,
  kPartialKey = 0x03,
  kPrivateKey = 0x04,
  kPublicKey = 0x05,
  kLswEncapsulation = 0x06,
  kDktutsEncapsulation = 0x07,
  kSymmetricKey = 0x08,
  kSigncrypted = 0x09,
};

std::string_view role_name(FileRole role);

/// Peeks at a header without checking the backend. Throws DecodeError.
FileRole peek_role(ByteView file);

// Params body: group description (toy: q as u64 big-endian; ristretto255:
// empty) || P_pub || suite id (1).
Bytes write_params(const SystemParams& params);
SystemParams read_params(ByteView file);

// Body: x_msk.
Bytes write_master_key(const SystemParams& params, const MasterKey& msk);
MasterKey read_master_key(const SystemParams& params, ByteView file);

// Body: id || R || d.
Bytes write_partial_key(const SystemParams& params, const PartialPrivateKey& ppk);
PartialPrivateKey read_partial_key(const SystemParams& params, ByteView file);

// Body: id || x || d || P_E || R. The private file carries its public half.
Bytes write_private_key(const SystemParams& params, const UserKeyPair& keys);
UserKeyPair read_private_key(const SystemParams& params, ByteView file);

// Body: id || P_E || R. Identity elements are rejected.
Bytes write_public_key(const SystemParams& params, const FullPublicKey& pk);
FullPublicKey read_public_key(const SystemParams& params, ByteView file);

// Body: encode_lsw_body / encode_dktuts_body.
Bytes write_encapsulation(const SystemParams& params, const LswEncapsulation& phi);
Bytes write_encapsulation(const SystemParams& params, const DktutsEncapsulation& phi);
LswEncapsulation read_lsw_encapsulation(const SystemParams& params, ByteView file);
DktutsEncapsulation read_dktuts_encapsulation(const SystemParams& params, ByteView file);

// Body: 16 key bytes.
Bytes write_symmetric_key(const SystemParams& params, const SymmetricKey& key);
SymmetricKey read_symmetric_key(const SystemParams& params, ByteView file);

// Body: protocol id (1) || u32 len || phi body || u32 len || DEM ciphertext.
Bytes write_signcrypted(const SystemParams& params, const SigncryptedMessage& sc);
SigncryptedMessage read_signcrypted(const SystemParams& params, ByteView file);

Bytes read_file(const std::filesystem::path& path);
/// `secret` files are created with mode 0600.
void write_file(const std::filesystem::path& path, ByteView data, bool secret = false);

}  // namespace clsc

#endif  // CLSC_CODEC_HPP_
