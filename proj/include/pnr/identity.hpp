#pragma once

#include <map>
#include <string>

#include "pnr/bytes.hpp"
#include "pnr/errors.hpp"

namespace pnr {

struct KeyPair {
  PublicKey public_key{};
  SecretKey secret_key{};
};

// Deterministic: the same seed always yields the same pair. The public key
// is a one-way function of the secret key, so distinct secrets collide only
// if the hash does.
KeyPair keygen(const Digest& seed);
PublicKey derive_public_key(const SecretKey& secret_key);

// Hash commitment with domain tag and length prefix: binding and hiding
// under standard hash assumptions, openable on demand.
Outcome<Digest> commit_identity(std::string_view identity, const Digest& nonce);
bool open_commitment(const Digest& commitment, std::string_view identity,
                     const Digest& nonce);

// The (identity, nonce) opening escrowed at onboarding so a passed punitive
// proposal can force disclosure later.
struct IdentityRecord {
  std::string identity;
  Digest nonce{};
  Digest commitment{};
};

// Table-driven verification stand-in: the rest of the protocol consumes only
// the boolean.
struct DkycPolicy {
  std::map<std::string, bool> table;
  bool default_result = false;
};

bool dkyc_verify(std::string_view identity, const DkycPolicy& policy);

// Sealed-box style envelope keyed to the recipient. Layout:
//   ephemeral(32) || mac(32) || body. Integrity is enforced via the mac;
// confidentiality is simulation-grade (the keypair has no trapdoor), which
// is sufficient for ledger metadata at this scale.
Bytes seal_to(const PublicKey& recipient, std::span<const std::uint8_t> message,
              const Digest& ephemeral);
Outcome<Bytes> unseal(const SecretKey& recipient_secret,
                      std::span<const std::uint8_t> ciphertext);

class IdentityEscrow {
 public:
  void store(const PublicKey& member, IdentityRecord record);
  const IdentityRecord* find(const PublicKey& member) const;

 private:
  std::map<PublicKey, IdentityRecord> records_;
};

}  // namespace pnr
