#include "pnr/bridge.hpp"

#include "pnr/hash.hpp"

namespace pnr {

std::string_view to_string(ChainId id) {
  switch (id) {
    case ChainId::Settlement: return "settlement";
    case ChainId::Execution: return "execution";
  }
  return "?";
}

Bridge::Bridge(KeyPair authority) : authority_(std::move(authority)) {}

Digest Bridge::attest(const Digest& transfer_id, const PublicKey& recipient,
                      const std::string& asset, std::uint64_t amount) const {
  return Sha256()
      .update(tag::kAttest)
      .update(authority_.secret_key)
      .update(transfer_id)
      .update(recipient)
      .update_sized(asset)
      .update_u64le(amount)
      .finish();
}

bool Bridge::verify(const TransferProof& proof) const {
  return attest(proof.transfer_id, proof.recipient, proof.asset,
                proof.amount) == proof.attestation;
}

Outcome<TransferProof> Bridge::initiate_transfer(ChainState& source,
                                                 const PublicKey& sender,
                                                 const std::string& asset,
                                                 std::uint64_t amount,
                                                 const PublicKey& recipient,
                                                 Time now) {
  if (amount == 0) return Err::ZeroAmount;
  if (auto debit = source.assets.debit(sender, asset, amount); !debit.ok()) {
    return debit.failure();
  }

  TransferProof proof;
  // Sender is part of the preimage so concurrent identical transfers get
  // distinct ids.
  proof.transfer_id = Sha256()
                          .update(tag::kTransfer)
                          .update_sized(asset)
                          .update_u64le(amount)
                          .update_u64le(now)
                          .update(sender)
                          .finish();
  proof.recipient = recipient;
  proof.asset = asset;
  proof.amount = amount;
  proof.attestation = attest(proof.transfer_id, recipient, asset, amount);

  source.locked[proof.transfer_id] = {asset, amount, sender};
  return proof;
}

Outcome<void> Bridge::complete_transfer(ChainState& target,
                                        const Digest& transfer_id,
                                        const TransferProof& proof) {
  if (transfer_id != proof.transfer_id || !verify(proof)) {
    return Err::InvalidProof;
  }
  if (target.minted.contains(transfer_id)) return Err::AlreadyRedeemed;

  target.minted[transfer_id] = {proof.recipient, proof.asset, proof.amount};
  target.assets.credit(proof.recipient, proof.asset, proof.amount);
  return ok();
}

std::uint64_t pending_between(const ChainState& source,
                              const ChainState& target,
                              const std::string& asset) {
  std::uint64_t pending = 0;
  for (const auto& [id, entry] : source.locked) {
    if (entry.asset == asset && !target.minted.contains(id)) {
      pending += entry.amount;
    }
  }
  return pending;
}

}  // namespace pnr
