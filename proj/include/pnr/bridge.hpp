#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pnr/asset_book.hpp"
#include "pnr/bytes.hpp"
#include "pnr/errors.hpp"
#include "pnr/identity.hpp"

namespace pnr {

enum class ChainId { Settlement, Execution };

std::string_view to_string(ChainId id);

struct LockEntry {
  std::string asset;
  std::uint64_t amount = 0;
  PublicKey sender{};
};

struct MintEntry {
  PublicKey recipient{};
  std::string asset;
  std::uint64_t amount = 0;
};

// Simulated chain: asset ledger plus the outbound lock registry and the
// inbound mint log (which doubles as the redeemed set).
struct ChainState {
  ChainId chain_id = ChainId::Settlement;
  AssetBook assets;
  std::map<Digest, LockEntry> locked;
  std::map<Digest, MintEntry> minted;
};

struct TransferProof {
  Digest transfer_id{};
  PublicKey recipient{};
  std::string asset;
  std::uint64_t amount = 0;
  Digest attestation{};
};

// Lock-and-mint transfers between two chains, attested by the bridge
// authority key. The return direction uses the same mechanics (burn on the
// execution side, release on the settlement side).
class Bridge {
 public:
  explicit Bridge(KeyPair authority);

  Outcome<TransferProof> initiate_transfer(ChainState& source,
                                           const PublicKey& sender,
                                           const std::string& asset,
                                           std::uint64_t amount,
                                           const PublicKey& recipient,
                                           Time now);
  Outcome<void> complete_transfer(ChainState& target,
                                  const Digest& transfer_id,
                                  const TransferProof& proof);

  Digest attest(const Digest& transfer_id, const PublicKey& recipient,
                const std::string& asset, std::uint64_t amount) const;
  bool verify(const TransferProof& proof) const;

  const PublicKey& authority_key() const { return authority_.public_key; }

 private:
  KeyPair authority_;
};

// Units in flight: locked on one side and not yet minted on the other.
std::uint64_t pending_between(const ChainState& source,
                              const ChainState& target,
                              const std::string& asset);

}  // namespace pnr
