#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pnr/asset_book.hpp"
#include "pnr/bytes.hpp"
#include "pnr/errors.hpp"
#include "pnr/governance.hpp"
#include "pnr/reputation.hpp"
#include "pnr/token_ledger.hpp"

namespace pnr {

enum class DealStatus {
  Created,
  Funded,
  ProviderCompleted,
  Confirmed,
  Disputed,
  Resolved
};

enum class DisputeStage { Initiated, Mediation, Voting, Enforced };

enum class OutcomeKind { RefundBuyer, PayProvider, SplitEscrow, RevokeAccess };

std::string_view to_string(DealStatus status);
std::string_view to_string(DisputeStage stage);
std::string_view to_string(OutcomeKind kind);

struct DisputeOutcome {
  OutcomeKind kind = OutcomeKind::RefundBuyer;
  PublicKey revoke_target{};  // RevokeAccess only
};

struct Deal {
  std::uint64_t deal_id = 0;
  PublicKey buyer{};
  PublicKey provider{};
  TokenType token_type = TokenType::T1;
  std::uint64_t amount = 0;      // service amount S in asset minor units
  std::uint64_t collateral = 0;  // buyer-deposited, zero for T1
  std::uint64_t escrow_balance = 0;
  Time deadline = 0;
  std::string payment_type;
  DealStatus status = DealStatus::Created;
  bool has_open_dispute = false;
};

struct Dispute {
  std::uint64_t dispute_id = 0;
  std::uint64_t deal_id = 0;
  PublicKey complainant{};
  std::string evidence;
  DisputeStage stage = DisputeStage::Initiated;
  Time mediation_deadline = 0;
  Digest proposal_id{};  // stage Voting onward
  bool has_settlement = false;
  DisputeOutcome settlement;
  DisputeOutcome outcome;  // stage Enforced
  // Penalty actually deducted at initiation, for the prevailing party's
  // refund at enforcement.
  std::uint64_t penalty_buyer = 0;
  std::uint64_t penalty_provider = 0;
};

// 0 for standard deals, floor(amount / 10) for high-risk ones.
Outcome<std::uint64_t> required_collateral(TokenType type,
                                           std::uint64_t amount);

struct DealPolicy {
  Time mediation_window = 10;
  Rat dispute_quorum;       // quorum for auto-created dispute votes
  Time dispute_vote_period = 100;
};

struct EnforceResult {
  DisputeOutcome applied;
  bool removal_proposed = false;
  Digest removal_proposal_id{};
};

// The private-deal contract: escrowed funding, completion and confirmation
// with reputation rewards, and the staged dispute process.
class DealEngine {
 public:
  DealEngine(TokenLedger& tokens, ReputationLedger& reputation,
             AssetBook& assets, Governance& governance, DealPolicy policy);

  Outcome<std::uint64_t> create_private_deal(
      const PublicKey& buyer, const PublicKey& provider, TokenType type,
      std::uint64_t amount, Time deadline, const std::string& payment_type,
      Time now, const Digest& grant_ephemeral);
  Outcome<void> fund(std::uint64_t deal_id, const PublicKey& caller, Time now);
  Outcome<void> mark_complete(std::uint64_t deal_id, const PublicKey& caller,
                              Time now);
  Outcome<void> confirm(std::uint64_t deal_id, const PublicKey& caller,
                        Time now, const Digest& grant_ephemeral);

  Outcome<std::uint64_t> initiate_dispute(std::uint64_t deal_id,
                                          const PublicKey& complainant,
                                          const std::string& evidence,
                                          Time now,
                                          const Digest& grant_ephemeral);
  Outcome<void> advance_to_mediation(std::uint64_t dispute_id, Time now);
  Outcome<void> record_settlement(std::uint64_t dispute_id,
                                  const DisputeOutcome& outcome, Time now);
  // Opens the vote stage: auto-creates a dispute-resolution proposal in the
  // name of the complainant against the current member set.
  Outcome<Digest> mediation_timeout(std::uint64_t dispute_id, Time now);
  Outcome<EnforceResult> enforce(std::uint64_t dispute_id,
                                 const DisputeOutcome& passed_outcome,
                                 Time now);

  const Deal* find_deal(std::uint64_t deal_id) const;
  const Dispute* find_dispute(std::uint64_t dispute_id) const;
  const std::map<std::uint64_t, Deal>& deals() const { return deals_; }
  const std::map<std::uint64_t, Dispute>& disputes() const {
    return disputes_;
  }
  std::uint64_t total_escrow(const std::string& asset) const;

 private:
  Bytes deal_record(const Deal& deal, std::string_view role) const;

  TokenLedger& tokens_;
  ReputationLedger& reputation_;
  AssetBook& assets_;
  Governance& governance_;
  DealPolicy policy_;
  std::map<std::uint64_t, Deal> deals_;
  std::map<std::uint64_t, Dispute> disputes_;
  std::uint64_t next_deal_id_ = 1;
  std::uint64_t next_dispute_id_ = 1;
};

}  // namespace pnr
