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

#include "clsc/codec.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <fstream>
#include <iterator>

namespace clsc {

namespace {

constexpr std::uint8_t kMagic[4] = {'C', 'L', 'S', 'C'};
constexpr std::size_t kHeaderSize = 7;

class Writer {
 public:
  Writer(const SystemParams& params, FileRole role) : Writer(params.group().backend(), role) {
    group_ = &params.group();
  }
  Writer(BackendId backend, FileRole role) {
    out_.assign(std::begin(kMagic), std::end(kMagic));
    out_.push_back(kFormatVersion);
    out_.push_back(static_cast<std::uint8_t>(backend));
    out_.push_back(static_cast<std::uint8_t>(role));
  }

  Writer& u8(std::uint8_t v) {
    out_.push_back(v);
    return *this;
  }
  Writer& u16(std::uint16_t v) {
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v));
    return *this;
  }
  Writer& u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
    return *this;
  }
  Writer& u64(std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
    return *this;
  }
  Writer& raw(ByteView b) {
    out_.insert(out_.end(), b.begin(), b.end());
    return *this;
  }
  Writer& str(std::string_view s) {
    if (s.size() > 0xffff) throw std::invalid_argument("identity longer than 65535 bytes");
    u16(static_cast<std::uint16_t>(s.size()));
    return raw(as_bytes(s));
  }
  Writer& blob(ByteView b) {
    u32(static_cast<std::uint32_t>(b.size()));
    return raw(b);
  }
  Writer& element(const Element& e) { return raw(group_->encode_element(e)); }
  Writer& scalar(const Scalar& s) { return raw(group_->encode_scalar(s)); }

  Bytes take() { return std::move(out_); }

 private:
  const Group* group_ = nullptr;
  Bytes out_;
};

struct Header {
  BackendId backend;
  FileRole role;
};

Header parse_header(ByteView file) {
  if (file.size() < kHeaderSize || !std::equal(std::begin(kMagic), std::end(kMagic), file.begin())) {
    throw DecodeError("not a CLSC file");
  }
  if (file[4] != kFormatVersion) {
    throw DecodeError("unsupported format version " + std::to_string(file[4]));
  }
  if (file[5] != static_cast<std::uint8_t>(BackendId::kRistretto255) &&
      file[5] != static_cast<std::uint8_t>(BackendId::kToy)) {
    throw DecodeError("unknown backend id " + std::to_string(file[5]));
  }
  if (file[6] < 0x01 || file[6] > 0x09) throw DecodeError("unknown file role");
  return {static_cast<BackendId>(file[5]), static_cast<FileRole>(file[6])};
}

class Reader {
 public:
  // Checks the header against the expected role and backend.
  Reader(const Group* group, BackendId backend, FileRole role, ByteView file)
      : group_(group), data_(file) {
    Header h = parse_header(file);
    if (h.role != role) {
      throw DecodeError(std::string("expected a ") + std::string(role_name(role)) + " file, got " +
                        std::string(role_name(h.role)));
    }
    if (h.backend != backend) throw DecodeError("file backend does not match parameters");
    pos_ = kHeaderSize;
  }
  Reader(const SystemParams& params, FileRole role, ByteView file)
      : Reader(&params.group(), params.group().backend(), role, file) {}

  ByteView take(std::size_t n) {
    if (data_.size() - pos_ < n) throw DecodeError("truncated file");
    ByteView v = data_.subspan(pos_, n);
    pos_ += n;
    return v;
  }
  std::uint8_t u8() { return take(1)[0]; }
  std::uint16_t u16() {
    ByteView b = take(2);
    return static_cast<std::uint16_t>(b[0] << 8 | b[1]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (std::uint8_t b : take(4)) v = (v << 8) | b;
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (std::uint8_t b : take(8)) v = (v << 8) | b;
    return v;
  }
  std::string str() {
    ByteView b = take(u16());
    return std::string(b.begin(), b.end());
  }
  Bytes blob() {
    ByteView b = take(u32());
    return Bytes(b.begin(), b.end());
  }
  Element element() {
    auto e = group_->decode_element(take(group_->element_size()));
    if (!e) throw DecodeError("invalid group element");
    return *e;
  }
  Element nonidentity_element() {
    Element e = element();
    if (e.is_identity()) throw DecodeError("unexpected identity element");
    return e;
  }
  Scalar scalar() {
    auto s = group_->decode_scalar(take(group_->scalar_size()));
    if (!s) throw DecodeError("invalid scalar");
    return *s;
  }
  Scalar nonzero_scalar() {
    Scalar s = scalar();
    if (s.is_zero()) throw DecodeError("unexpected zero scalar");
    return s;
  }
  ByteView rest() { return take(data_.size() - pos_); }
  void finish() const {
    if (pos_ != data_.size()) throw DecodeError("trailing bytes");
  }

 private:
  const Group* group_;
  ByteView data_;
  std::size_t pos_ = 0;
};

std::string identity_field(Reader& r) {
  std::string id = r.str();
  if (id.empty()) throw DecodeError("empty identity");
  return id;
}

}  // namespace

std::string_view role_name(FileRole role) {
  switch (role) {
    case FileRole::kParams:
      return "system-params";
    case FileRole::kMasterKey:
      return "master-key";
    case FileRole::kPartialKey:
      return "partial-private-key";
    case FileRole::kPrivateKey:
      return "private-key";
    case FileRole::kPublicKey:
      return "public-key";
    case FileRole::kLswEncapsulation:
      return "lsw-encapsulation";
    case FileRole::kDktutsEncapsulation:
      return "dktuts-encapsulation";
    case FileRole::kSymmetricKey:
      return "symmetric-key";
    case FileRole::kSigncrypted:
      return "signcrypted-message";
  }
  return "unknown";
}

FileRole peek_role(ByteView file) { return parse_header(file).role; }

Bytes write_params(const SystemParams& params) {
  const Group& g = params.group();
  Writer w(params, FileRole::kParams);
  if (g.backend() == BackendId::kToy) {
    Bytes q = g.order();
    std::uint64_t v = 0;
    for (std::uint8_t b : q) v = (v << 8) | b;
    w.u64(v);
  }
  w.element(params.p_pub()).u8(HashSuite::kSuiteId);
  return w.take();
}

SystemParams read_params(ByteView file) {
  Header h = parse_header(file);
  if (h.role != FileRole::kParams) throw DecodeError("expected a system-params file");
  GroupPtr group;
  ByteView body = file.subspan(kHeaderSize);
  if (h.backend == BackendId::kToy) {
    if (body.size() < 8) throw DecodeError("truncated file");
    std::uint64_t q = 0;
    for (std::size_t i = 0; i < 8; ++i) q = (q << 8) | body[i];
    try {
      group = make_toy_group(q);
    } catch (const UnsupportedParameter& e) {
      throw DecodeError(e.what());
    }
  } else {
    group = make_ristretto255();
  }
  Reader r(group.get(), h.backend, FileRole::kParams, file);
  if (h.backend == BackendId::kToy) r.u64();
  Element p_pub = r.nonidentity_element();
  if (r.u8() != HashSuite::kSuiteId) throw DecodeError("unknown hash suite");
  r.finish();
  return SystemParams(std::move(group), p_pub);
}

Bytes write_master_key(const SystemParams& params, const MasterKey& msk) {
  return Writer(params, FileRole::kMasterKey).scalar(msk.x_msk).take();
}

MasterKey read_master_key(const SystemParams& params, ByteView file) {
  Reader r(params, FileRole::kMasterKey, file);
  MasterKey msk{r.nonzero_scalar()};
  r.finish();
  return msk;
}

Bytes write_partial_key(const SystemParams& params, const PartialPrivateKey& ppk) {
  return Writer(params, FileRole::kPartialKey).str(ppk.id).element(ppk.r).scalar(ppk.d).take();
}

PartialPrivateKey read_partial_key(const SystemParams& params, ByteView file) {
  Reader r(params, FileRole::kPartialKey, file);
  PartialPrivateKey ppk;
  ppk.id = identity_field(r);
  ppk.r = r.nonidentity_element();
  ppk.d = r.nonzero_scalar();
  r.finish();
  return ppk;
}

Bytes write_private_key(const SystemParams& params, const UserKeyPair& keys) {
  return Writer(params, FileRole::kPrivateKey)
      .str(keys.sk.id)
      .scalar(keys.sk.x)
      .scalar(keys.sk.d)
      .element(keys.pk.p)
      .element(keys.pk.r)
      .take();
}

UserKeyPair read_private_key(const SystemParams& params, ByteView file) {
  Reader r(params, FileRole::kPrivateKey, file);
  UserKeyPair keys;
  keys.sk.id = identity_field(r);
  keys.sk.x = r.nonzero_scalar();
  keys.sk.d = r.nonzero_scalar();
  keys.pk.id = keys.sk.id;
  keys.pk.p = r.nonidentity_element();
  keys.pk.r = r.nonidentity_element();
  r.finish();
  return keys;
}

Bytes write_public_key(const SystemParams& params, const FullPublicKey& pk) {
  return Writer(params, FileRole::kPublicKey).str(pk.id).element(pk.p).element(pk.r).take();
}

FullPublicKey read_public_key(const SystemParams& params, ByteView file) {
  Reader r(params, FileRole::kPublicKey, file);
  FullPublicKey pk;
  pk.id = identity_field(r);
  pk.p = r.nonidentity_element();
  pk.r = r.nonidentity_element();
  r.finish();
  return pk;
}

Bytes write_encapsulation(const SystemParams& params, const LswEncapsulation& phi) {
  return Writer(params, FileRole::kLswEncapsulation)
      .raw(encode_lsw_body(params.group(), phi))
      .take();
}

Bytes write_encapsulation(const SystemParams& params, const DktutsEncapsulation& phi) {
  return Writer(params, FileRole::kDktutsEncapsulation)
      .raw(encode_dktuts_body(params.group(), phi))
      .take();
}

LswEncapsulation read_lsw_encapsulation(const SystemParams& params, ByteView file) {
  Reader r(params, FileRole::kLswEncapsulation, file);
  auto phi = decode_lsw_body(params.group(), r.rest());
  if (!phi) throw DecodeError("malformed LSW encapsulation");
  return *phi;
}

DktutsEncapsulation read_dktuts_encapsulation(const SystemParams& params, ByteView file) {
  Reader r(params, FileRole::kDktutsEncapsulation, file);
  auto phi = decode_dktuts_body(params.group(), r.rest());
  if (!phi) throw DecodeError("malformed DKTUTS encapsulation");
  return *phi;
}

Bytes write_symmetric_key(const SystemParams& params, const SymmetricKey& key) {
  return Writer(params, FileRole::kSymmetricKey).raw(key.bytes).take();
}

SymmetricKey read_symmetric_key(const SystemParams& params, ByteView file) {
  Reader r(params, FileRole::kSymmetricKey, file);
  SymmetricKey k;
  ByteView b = r.take(k.bytes.size());
  std::copy(b.begin(), b.end(), k.bytes.begin());
  r.finish();
  return k;
}

Bytes write_signcrypted(const SystemParams& params, const SigncryptedMessage& sc) {
  Bytes body = sc.protocol == Protocol::kLsw
                   ? encode_lsw_body(params.group(), std::get<LswEncapsulation>(sc.encapsulation))
                   : encode_dktuts_body(params.group(),
                                        std::get<DktutsEncapsulation>(sc.encapsulation));
  return Writer(params, FileRole::kSigncrypted)
      .u8(static_cast<std::uint8_t>(sc.protocol))
      .blob(body)
      .blob(sc.dem_ciphertext)
      .take();
}

SigncryptedMessage read_signcrypted(const SystemParams& params, ByteView file) {
  Reader r(params, FileRole::kSigncrypted, file);
  SigncryptedMessage sc;
  std::uint8_t proto = r.u8();
  Bytes body = r.blob();
  sc.dem_ciphertext = r.blob();
  r.finish();
  if (proto == static_cast<std::uint8_t>(Protocol::kLsw)) {
    auto phi = decode_lsw_body(params.group(), body);
    if (!phi) throw DecodeError("malformed LSW encapsulation");
    sc.protocol = Protocol::kLsw;
    sc.encapsulation = *phi;
  } else if (proto == static_cast<std::uint8_t>(Protocol::kDktuts)) {
    auto phi = decode_dktuts_body(params.group(), body);
    if (!phi) throw DecodeError("malformed DKTUTS encapsulation");
    sc.protocol = Protocol::kDktuts;
    sc.encapsulation = *phi;
  } else {
    throw DecodeError("unknown protocol id");
  }
  return sc;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, ByteView data, bool secret) {
  const mode_t mode = secret ? 0600 : 0644;
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, mode);
  if (fd < 0) throw Error("cannot create " + path.string());
  // O_CREAT leaves an existing file's mode alone.
  if (secret) ::fchmod(fd, 0600);
  std::size_t off = 0;
  while (off < data.size()) {
    ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n <= 0) {
      ::close(fd);
      throw Error("write failed: " + path.string());
    }
    off += static_cast<std::size_t>(n);
  }
  if (::close(fd) != 0) throw Error("close failed: " + path.string());
}

}  // namespace clsc
