#include "pnr/deals.hpp"

#include <nlohmann/json.hpp>

namespace pnr {

std::string_view to_string(DealStatus status) {
  switch (status) {
    case DealStatus::Created: return "Created";
    case DealStatus::Funded: return "Funded";
    case DealStatus::ProviderCompleted: return "ProviderCompleted";
    case DealStatus::Confirmed: return "Confirmed";
    case DealStatus::Disputed: return "Disputed";
    case DealStatus::Resolved: return "Resolved";
  }
  return "?";
}

std::string_view to_string(DisputeStage stage) {
  switch (stage) {
    case DisputeStage::Initiated: return "Initiated";
    case DisputeStage::Mediation: return "Mediation";
    case DisputeStage::Voting: return "Voting";
    case DisputeStage::Enforced: return "Enforced";
  }
  return "?";
}

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::RefundBuyer: return "RefundBuyer";
    case OutcomeKind::PayProvider: return "PayProvider";
    case OutcomeKind::SplitEscrow: return "SplitEscrow";
    case OutcomeKind::RevokeAccess: return "RevokeAccess";
  }
  return "?";
}

Outcome<std::uint64_t> required_collateral(TokenType type,
                                           std::uint64_t amount) {
  switch (type) {
    case TokenType::T1: return std::uint64_t{0};
    case TokenType::T2: return amount / 10;
    default: return Err::WrongType;
  }
}

DealEngine::DealEngine(TokenLedger& tokens, ReputationLedger& reputation,
                       AssetBook& assets, Governance& governance,
                       DealPolicy policy)
    : tokens_(tokens),
      reputation_(reputation),
      assets_(assets),
      governance_(governance),
      policy_(std::move(policy)) {}

Bytes DealEngine::deal_record(const Deal& deal, std::string_view role) const {
  nlohmann::json doc = {{"deal_id", deal.deal_id},
                        {"role", std::string(role)},
                        {"buyer", to_hex(deal.buyer)},
                        {"provider", to_hex(deal.provider)},
                        {"amount", deal.amount},
                        {"deadline", deal.deadline}};
  return to_bytes(doc.dump());
}

Outcome<std::uint64_t> DealEngine::create_private_deal(
    const PublicKey& buyer, const PublicKey& provider, TokenType type,
    std::uint64_t amount, Time deadline, const std::string& payment_type,
    Time now, const Digest& grant_ephemeral) {
  auto collateral = required_collateral(type, amount);
  if (!collateral.ok()) return collateral.failure();
  if (!tokens_.is_member(buyer) || !tokens_.is_member(provider)) {
    return Err::NotMember;
  }
  if (tokens_.is_restricted(buyer, type) ||
      tokens_.is_restricted(provider, type)) {
    return Err::TypeRestricted;
  }
  if (deadline <= now) return Err::PastDeadline;
  if (amount == 0) return Err::ZeroAmount;
  if (buyer == provider) return Err::SelfDeal;

  Deal deal;
  deal.deal_id = next_deal_id_++;
  deal.buyer = buyer;
  deal.provider = provider;
  deal.token_type = type;
  deal.amount = amount;
  deal.collateral = collateral.value();
  deal.deadline = deadline;
  deal.payment_type = payment_type;

  tokens_.record_grant(buyer, type, 1, as_span(deal_record(deal, "buyer")),
                       grant_ephemeral);
  tokens_.record_grant(provider, type, 1,
                       as_span(deal_record(deal, "provider")), grant_ephemeral);

  std::uint64_t id = deal.deal_id;
  deals_[id] = std::move(deal);
  return id;
}

Outcome<void> DealEngine::fund(std::uint64_t deal_id, const PublicKey& caller,
                               Time now) {
  auto it = deals_.find(deal_id);
  if (it == deals_.end()) return Err::UnknownDeal;
  Deal& deal = it->second;
  if (deal.status != DealStatus::Created) return Err::WrongState;
  if (caller != deal.buyer) return Err::WrongCaller;
  if (now >= deal.deadline) return Err::DeadlinePassed;
  std::uint64_t due = deal.amount + deal.collateral;
  if (auto debit = assets_.debit(deal.buyer, deal.payment_type, due);
      !debit.ok()) {
    return debit.failure();
  }
  deal.escrow_balance = due;
  deal.status = DealStatus::Funded;
  return ok();
}

Outcome<void> DealEngine::mark_complete(std::uint64_t deal_id,
                                        const PublicKey& caller, Time now) {
  auto it = deals_.find(deal_id);
  if (it == deals_.end()) return Err::UnknownDeal;
  Deal& deal = it->second;
  if (deal.status != DealStatus::Funded) return Err::WrongState;
  if (caller != deal.provider) return Err::WrongCaller;
  if (now > deal.deadline) return Err::DeadlinePassed;  // inclusive boundary
  deal.status = DealStatus::ProviderCompleted;
  return ok();
}

Outcome<void> DealEngine::confirm(std::uint64_t deal_id,
                                  const PublicKey& caller, Time now,
                                  const Digest& grant_ephemeral) {
  auto it = deals_.find(deal_id);
  if (it == deals_.end()) return Err::UnknownDeal;
  Deal& deal = it->second;
  if (deal.status != DealStatus::ProviderCompleted) return Err::WrongState;
  if (caller != deal.buyer) return Err::WrongCaller;

  assets_.credit(deal.provider, deal.payment_type, deal.amount);
  assets_.credit(deal.buyer, deal.payment_type, deal.collateral);
  deal.escrow_balance = 0;
  deal.status = DealStatus::Confirmed;

  reputation_.batch_update({deal.provider, deal.buyer}, {+5, +1},
                           "deal_completed", now);
  tokens_.record_grant(deal.provider, TokenType::T4, 1,
                       as_span(deal_record(deal, "provider")),
                       grant_ephemeral);
  tokens_.record_grant(deal.buyer, TokenType::T4, 1,
                       as_span(deal_record(deal, "buyer")), grant_ephemeral);
  return ok();
}

Outcome<std::uint64_t> DealEngine::initiate_dispute(
    std::uint64_t deal_id, const PublicKey& complainant,
    const std::string& evidence, Time now, const Digest& grant_ephemeral) {
  auto it = deals_.find(deal_id);
  if (it == deals_.end()) return Err::UnknownDeal;
  Deal& deal = it->second;
  if (complainant != deal.buyer && complainant != deal.provider) {
    return Err::NotParty;
  }
  if (deal.has_open_dispute) return Err::DuplicateDispute;
  if (deal.status != DealStatus::Funded &&
      deal.status != DealStatus::ProviderCompleted) {
    return Err::WrongState;
  }

  Dispute dispute;
  dispute.dispute_id = next_dispute_id_++;
  dispute.deal_id = deal_id;
  dispute.complainant = complainant;
  dispute.evidence = evidence;

  // Temporary penalty on both parties, floored at zero; the deducted amount
  // is remembered so the prevailing side can be made whole at enforcement.
  for (const PublicKey* party : {&deal.buyer, &deal.provider}) {
    std::uint64_t before = reputation_.score(*party);
    reputation_.add(*party, -2, "dispute_penalty", now);
    std::uint64_t applied = before - reputation_.score(*party);
    (party == &deal.buyer ? dispute.penalty_buyer
                          : dispute.penalty_provider) = applied;
  }

  tokens_.record_grant(deal.buyer, TokenType::T3, 1,
                       as_span(deal_record(deal, "buyer")), grant_ephemeral);
  tokens_.record_grant(deal.provider, TokenType::T3, 1,
                       as_span(deal_record(deal, "provider")),
                       grant_ephemeral);

  deal.status = DealStatus::Disputed;
  deal.has_open_dispute = true;
  std::uint64_t id = dispute.dispute_id;
  disputes_[id] = std::move(dispute);
  return id;
}

Outcome<void> DealEngine::advance_to_mediation(std::uint64_t dispute_id,
                                               Time now) {
  auto it = disputes_.find(dispute_id);
  if (it == disputes_.end()) return Err::UnknownDispute;
  Dispute& dispute = it->second;
  if (dispute.stage != DisputeStage::Initiated) return Err::WrongStage;
  dispute.stage = DisputeStage::Mediation;
  dispute.mediation_deadline = now + policy_.mediation_window;
  return ok();
}

Outcome<void> DealEngine::record_settlement(std::uint64_t dispute_id,
                                            const DisputeOutcome& outcome,
                                            Time now) {
  auto it = disputes_.find(dispute_id);
  if (it == disputes_.end()) return Err::UnknownDispute;
  Dispute& dispute = it->second;
  if (dispute.stage != DisputeStage::Mediation) return Err::WrongStage;
  (void)now;
  dispute.has_settlement = true;
  dispute.settlement = outcome;
  return ok();
}

Outcome<Digest> DealEngine::mediation_timeout(std::uint64_t dispute_id,
                                              Time now) {
  auto it = disputes_.find(dispute_id);
  if (it == disputes_.end()) return Err::UnknownDispute;
  Dispute& dispute = it->second;
  if (dispute.stage != DisputeStage::Mediation || dispute.has_settlement) {
    return Err::WrongStage;
  }
  if (now < dispute.mediation_deadline) return Err::NotYetExpired;

  auto tree = build_member_tree(tokens_.members());
  if (!tree.ok()) return tree.failure();

  ProposalSpec spec;
  spec.kind = ProposalKind::DisputeResolution;
  spec.dispute_id = dispute_id;
  spec.payload = to_bytes("dispute-resolution");
  append_u64le(spec.payload, dispute_id);
  spec.quorum = policy_.dispute_quorum;
  spec.period = policy_.dispute_vote_period;
  auto proposal = governance_.initiate_proposal(dispute.complainant, spec, now,
                                                tree.value());
  if (!proposal.ok()) return proposal.failure();

  dispute.stage = DisputeStage::Voting;
  dispute.proposal_id = proposal.value();
  return proposal.value();
}

Outcome<EnforceResult> DealEngine::enforce(std::uint64_t dispute_id,
                                           const DisputeOutcome& passed_outcome,
                                           Time now) {
  auto it = disputes_.find(dispute_id);
  if (it == disputes_.end()) return Err::UnknownDispute;
  Dispute& dispute = it->second;

  DisputeOutcome applied;
  if (dispute.stage == DisputeStage::Mediation && dispute.has_settlement) {
    applied = dispute.settlement;
  } else if (dispute.stage == DisputeStage::Voting) {
    const Proposal* proposal = governance_.find(dispute.proposal_id);
    if (proposal == nullptr || proposal->status == ProposalStatus::Open) {
      return Err::VoteNotFinal;
    }
    applied = passed_outcome;
  } else {
    return Err::WrongStage;
  }

  Deal& deal = deals_.at(dispute.deal_id);
  std::uint64_t amount = deal.amount;
  std::uint64_t collateral = deal.collateral;
  const std::string& asset = deal.payment_type;

  EnforceResult result;
  result.applied = applied;
  const PublicKey* prevailing = nullptr;
  switch (applied.kind) {
    case OutcomeKind::RefundBuyer:
      assets_.credit(deal.buyer, asset, amount + collateral);
      prevailing = &deal.buyer;
      break;
    case OutcomeKind::PayProvider:
      assets_.credit(deal.provider, asset, amount);
      assets_.credit(deal.buyer, asset, collateral);
      prevailing = &deal.provider;
      break;
    case OutcomeKind::SplitEscrow: {
      // Buyer takes the floor half plus collateral, provider the ceil half.
      std::uint64_t buyer_half = amount / 2;
      assets_.credit(deal.buyer, asset, buyer_half + collateral);
      assets_.credit(deal.provider, asset, amount - buyer_half);
      break;
    }
    case OutcomeKind::RevokeAccess: {
      bool against_buyer = applied.revoke_target == deal.buyer;
      if (against_buyer) {
        // Collateral is forfeited to the provider when the buyer is the
        // offending party; otherwise it has no deterrent force.
        assets_.credit(deal.buyer, asset, amount);
        assets_.credit(deal.provider, asset, collateral);
        prevailing = &deal.provider;
      } else {
        assets_.credit(deal.buyer, asset, amount + collateral);
        prevailing = &deal.buyer;
      }
      ProposalSpec spec;
      spec.kind = ProposalKind::Removal;
      spec.removal_target = applied.revoke_target;
      spec.payload = to_bytes("dispute-removal");
      append_u64le(spec.payload, dispute_id);
      spec.quorum = policy_.dispute_quorum;
      spec.period = policy_.dispute_vote_period;
      if (auto tree = build_member_tree(tokens_.members()); tree.ok()) {
        auto proposal =
            governance_.initiate_proposal(*prevailing, spec, now, tree.value());
        if (proposal.ok()) {
          result.removal_proposed = true;
          result.removal_proposal_id = proposal.value();
        }
      }
      break;
    }
  }

  if (prevailing != nullptr) {
    std::uint64_t refund = *prevailing == deal.buyer
                               ? dispute.penalty_buyer
                               : dispute.penalty_provider;
    if (refund > 0) {
      reputation_.add(*prevailing, static_cast<std::int64_t>(refund),
                      "dispute_penalty_refund", now);
    }
  }

  deal.escrow_balance = 0;
  deal.status = DealStatus::Resolved;
  deal.has_open_dispute = false;
  dispute.stage = DisputeStage::Enforced;
  dispute.outcome = applied;
  return result;
}

const Deal* DealEngine::find_deal(std::uint64_t deal_id) const {
  auto it = deals_.find(deal_id);
  return it == deals_.end() ? nullptr : &it->second;
}

const Dispute* DealEngine::find_dispute(std::uint64_t dispute_id) const {
  auto it = disputes_.find(dispute_id);
  return it == disputes_.end() ? nullptr : &it->second;
}

std::uint64_t DealEngine::total_escrow(const std::string& asset) const {
  std::uint64_t sum = 0;
  for (const auto& [id, deal] : deals_) {
    if (deal.payment_type == asset) sum += deal.escrow_balance;
  }
  return sum;
}

}  // namespace pnr
