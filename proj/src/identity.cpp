#include "pnr/identity.hpp"

#include <algorithm>

#include "pnr/hash.hpp"

namespace pnr {

KeyPair keygen(const Digest& seed) {
  KeyPair kp;
  kp.secret_key = Sha256().update(tag::kSecretKey).update(seed).finish();
  kp.public_key = derive_public_key(kp.secret_key);
  return kp;
}

PublicKey derive_public_key(const SecretKey& secret_key) {
  return Sha256().update(tag::kPublicKey).update(secret_key).finish();
}

Outcome<Digest> commit_identity(std::string_view identity,
                                const Digest& nonce) {
  if (identity.empty()) return Err::EmptyIdentity;
  return Sha256()
      .update(tag::kCommit)
      .update_sized(identity)
      .update(nonce)
      .finish();
}

bool open_commitment(const Digest& commitment, std::string_view identity,
                     const Digest& nonce) {
  auto recomputed = commit_identity(identity, nonce);
  return recomputed.ok() && recomputed.value() == commitment;
}

bool dkyc_verify(std::string_view identity, const DkycPolicy& policy) {
  auto it = policy.table.find(std::string(identity));
  return it != policy.table.end() ? it->second : policy.default_result;
}

namespace {

Digest box_key(const PublicKey& recipient, const Digest& ephemeral) {
  return Sha256()
      .update(tag::kBoxKey)
      .update(recipient)
      .update(ephemeral)
      .finish();
}

void apply_keystream(const Digest& key, std::span<const std::uint8_t> in,
                     Bytes& out) {
  for (std::size_t block = 0; block * 32 < in.size(); ++block) {
    Digest pad = Sha256()
                     .update(tag::kBoxStream)
                     .update(key)
                     .update_u64le(block)
                     .finish();
    std::size_t base = block * 32;
    std::size_t n = std::min<std::size_t>(32, in.size() - base);
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back(in[base + j] ^ pad[j]);
    }
  }
}

Digest box_mac(const Digest& key, std::span<const std::uint8_t> body) {
  return Sha256().update(tag::kBoxMac).update(key).update_sized(body).finish();
}

}  // namespace

Bytes seal_to(const PublicKey& recipient, std::span<const std::uint8_t> message,
              const Digest& ephemeral) {
  Digest key = box_key(recipient, ephemeral);
  Bytes body;
  body.reserve(message.size());
  apply_keystream(key, message, body);
  Digest mac = box_mac(key, as_span(body));

  Bytes out;
  out.reserve(64 + body.size());
  append(out, ephemeral);
  append(out, mac);
  append(out, as_span(body));
  return out;
}

Outcome<Bytes> unseal(const SecretKey& recipient_secret,
                      std::span<const std::uint8_t> ciphertext) {
  if (ciphertext.size() < 64) return Err::AuthFailed;
  Digest ephemeral{};
  Digest mac{};
  std::copy_n(ciphertext.begin(), 32, ephemeral.begin());
  std::copy_n(ciphertext.begin() + 32, 32, mac.begin());
  auto body = ciphertext.subspan(64);

  Digest key = box_key(derive_public_key(recipient_secret), ephemeral);
  if (box_mac(key, body) != mac) return Err::AuthFailed;

  Bytes plain;
  plain.reserve(body.size());
  apply_keystream(key, body, plain);
  return plain;
}

void IdentityEscrow::store(const PublicKey& member, IdentityRecord record) {
  records_[member] = std::move(record);
}

const IdentityRecord* IdentityEscrow::find(const PublicKey& member) const {
  auto it = records_.find(member);
  return it == records_.end() ? nullptr : &it->second;
}

}  // namespace pnr
