#include "pnr/governance.hpp"

#include <algorithm>

#include "pnr/hash.hpp"

namespace pnr {

Digest member_leaf(const PublicKey& member) {
  return Sha256().update(tag::kLeaf).update(member).finish();
}

namespace {

Digest node_hash(const Digest& left, const Digest& right) {
  return Sha256().update(tag::kNode).update(left).update(right).finish();
}

}  // namespace

Outcome<MemberTree> build_member_tree(std::vector<PublicKey> members) {
  if (members.empty()) return Err::EmptyMemberSet;
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    return Err::DuplicateMember;
  }

  MemberTree tree;
  tree.members = std::move(members);
  tree.leaves.reserve(tree.members.size());
  for (const PublicKey& m : tree.members) {
    tree.leaves.push_back(member_leaf(m));
  }

  std::vector<Digest> level = tree.leaves;
  while (level.size() > 1) {
    if (level.size() % 2 != 0) level.push_back(level.back());
    std::vector<Digest> next;
    next.reserve(level.size() / 2);
    for (std::size_t i = 0; i < level.size(); i += 2) {
      next.push_back(node_hash(level[i], level[i + 1]));
    }
    level = std::move(next);
    ++tree.depth;
  }
  tree.root = level.front();
  return tree;
}

Outcome<MembershipProof> prove_membership(const MemberTree& tree,
                                          const PublicKey& member) {
  Digest leaf = member_leaf(member);
  auto it = std::find(tree.leaves.begin(), tree.leaves.end(), leaf);
  if (it == tree.leaves.end()) return Err::NotInTree;

  MembershipProof proof;
  proof.leaf = leaf;
  std::size_t index = static_cast<std::size_t>(it - tree.leaves.begin());
  std::vector<Digest> level = tree.leaves;
  while (level.size() > 1) {
    if (level.size() % 2 != 0) level.push_back(level.back());
    bool is_right = (index % 2) != 0;
    proof.path_bits.push_back(is_right);
    proof.siblings.push_back(level[is_right ? index - 1 : index + 1]);
    std::vector<Digest> next;
    next.reserve(level.size() / 2);
    for (std::size_t i = 0; i < level.size(); i += 2) {
      next.push_back(node_hash(level[i], level[i + 1]));
    }
    level = std::move(next);
    index /= 2;
  }
  return proof;
}

bool verify_membership(const Digest& root, const MembershipProof& proof) {
  if (proof.siblings.size() != proof.path_bits.size()) return false;
  Digest node = proof.leaf;
  for (std::size_t i = 0; i < proof.siblings.size(); ++i) {
    node = proof.path_bits[i] ? node_hash(proof.siblings[i], node)
                              : node_hash(node, proof.siblings[i]);
  }
  return node == root;
}

Digest derive_nullifier(const SecretKey& secret_key,
                        const Digest& proposal_id) {
  return Sha256()
      .update(tag::kNullifier)
      .update(secret_key)
      .update(proposal_id)
      .finish();
}

Digest vote_commitment(int vote, const Digest& randomness) {
  return Sha256()
      .update(tag::kVote)
      .update_u64le(static_cast<std::uint64_t>(vote))
      .update(randomness)
      .finish();
}

std::string_view to_string(ProposalStatus status) {
  switch (status) {
    case ProposalStatus::Open: return "Open";
    case ProposalStatus::Passed: return "Passed";
    case ProposalStatus::Failed: return "Failed";
    case ProposalStatus::Executed: return "Executed";
  }
  return "?";
}

std::string_view to_string(ProposalKind kind) {
  switch (kind) {
    case ProposalKind::Removal: return "Removal";
    case ProposalKind::DisputeResolution: return "DisputeResolution";
    case ProposalKind::Generic: return "Generic";
  }
  return "?";
}

bool verify_vote_proof(const VoteProofRecord& record) {
  if (record.nullifier == Digest{}) return false;
  return verify_membership(record.member_root, record.membership);
}

Outcome<bool> threshold_decision(const std::vector<int>& votes,
                                 const Rat& quorum, std::uint64_t n) {
  if (votes.size() > n) return Err::TooManyVotes;
  std::uint64_t favorable = 0;
  for (int v : votes) {
    if (v != 0 && v != 1) return Err::MalformedVote;
    favorable += static_cast<std::uint64_t>(v);
  }
  // favorable >= quorum * n, cross-multiplied to stay exact.
  return BigInt(favorable) * quorum.denominator() >=
         quorum.numerator() * BigInt(n);
}

Governance::Governance(std::vector<Rat> allowed_quorums)
    : allowed_quorums_(std::move(allowed_quorums)) {}

Outcome<Digest> Governance::initiate_proposal(const PublicKey& initiator,
                                              const ProposalSpec& spec,
                                              Time now,
                                              const MemberTree& tree) {
  if (!std::binary_search(tree.members.begin(), tree.members.end(),
                          initiator)) {
    return Err::NotMember;
  }
  bool quorum_allowed =
      std::find(allowed_quorums_.begin(), allowed_quorums_.end(),
                spec.quorum) != allowed_quorums_.end();
  if (spec.quorum <= make_rat(0) || spec.quorum > make_rat(1) ||
      !quorum_allowed) {
    return Err::BadQuorum;
  }
  if (spec.period == 0) return Err::ZeroPeriod;

  Proposal p;
  p.id = Sha256()
             .update(tag::kProposal)
             .update_sized(as_span(spec.payload))
             .update_u64le(now)
             .finish();
  if (proposals_.contains(p.id)) return Err::DuplicateProposal;
  p.kind = spec.kind;
  p.removal_target = spec.removal_target;
  p.dispute_id = spec.dispute_id;
  p.payload_digest = sha256(as_span(spec.payload));
  p.member_root = tree.root;
  p.quorum = spec.quorum;
  p.created_at = now;
  p.voting_deadline = now + spec.period;
  p.member_count_at_creation = tree.members.size();
  p.tree = tree;

  Digest id = p.id;
  proposals_.emplace(id, std::move(p));
  order_.push_back(id);
  return id;
}

Outcome<void> Governance::cast_vote(const Digest& proposal_id, int vote,
                                    const MembershipProof& proof,
                                    const Digest& nullifier,
                                    const Digest& randomness, Time now) {
  Proposal* p = find_mutable(proposal_id);
  if (p == nullptr) return Err::UnknownProposal;
  if (p->status != ProposalStatus::Open || now >= p->voting_deadline) {
    return Err::VotingClosed;
  }
  if (!verify_membership(p->member_root, proof)) {
    return Err::InvalidMembershipProof;
  }
  if (p->nullifiers.contains(nullifier)) return Err::DoubleVote;
  if (vote != 0 && vote != 1) return Err::MalformedVote;

  VoteProofRecord record;
  record.commitment = vote_commitment(vote, randomness);
  record.nullifier = nullifier;
  record.member_root = p->member_root;
  record.membership = proof;
  if (!verify_vote_proof(record)) return Err::InvalidMembershipProof;

  p->commitments.push_back(record.commitment);
  p->nullifiers.insert(nullifier);
  p->proofs.push_back(std::move(record));
  return ok();
}

Outcome<Tally> Governance::finalize(const Digest& proposal_id,
                                    const std::vector<VoteOpening>& openings,
                                    Time now) {
  Proposal* p = find_mutable(proposal_id);
  if (p == nullptr) return Err::UnknownProposal;
  if (p->status != ProposalStatus::Open) return Err::WrongState;
  if (now < p->voting_deadline) return Err::VotingStillOpen;

  // Order-independent multiset match between openings and commitments.
  std::multiset<Digest> pending(p->commitments.begin(), p->commitments.end());
  std::uint64_t yes = 0;
  for (const VoteOpening& opening : openings) {
    if (opening.vote != 0 && opening.vote != 1) return Err::OpeningMismatch;
    Digest c = vote_commitment(opening.vote, opening.randomness);
    auto it = pending.find(c);
    if (it == pending.end()) return Err::OpeningMismatch;
    pending.erase(it);
    yes += static_cast<std::uint64_t>(opening.vote);
  }
  if (!pending.empty()) return Err::OpeningMismatch;

  Tally tally;
  tally.total = openings.size();
  tally.yes = yes;
  // Quorum against members at creation, compared as exact rationals, then
  // strict majority of votes actually cast.
  bool quorum_met = BigInt(tally.total) * p->quorum.denominator() >=
                    p->quorum.numerator() *
                        BigInt(p->member_count_at_creation);
  tally.passed = quorum_met && tally.yes * 2 > tally.total;

  p->status = tally.passed ? ProposalStatus::Passed : ProposalStatus::Failed;
  p->tally_total = tally.total;
  p->tally_yes = tally.yes;
  return tally;
}

Outcome<void> Governance::execute_removal(const Digest& proposal_id,
                                          TokenLedger& tokens, Time now) {
  Proposal* p = find_mutable(proposal_id);
  if (p == nullptr) return Err::UnknownProposal;
  if (p->status == ProposalStatus::Executed) return Err::AlreadyExecuted;
  if (p->status != ProposalStatus::Passed) return Err::NotPassed;
  if (p->kind != ProposalKind::Removal) return Err::WrongKind;

  const AuthToken* token = tokens.auth_of(p->removal_target);
  if (token == nullptr) return Err::UnknownToken;
  if (auto burned = tokens.burn_auth(token->token_id, now); !burned.ok()) {
    return burned.failure();
  }
  p->status = ProposalStatus::Executed;
  return ok();
}

Outcome<std::string> Governance::force_disclose(
    const PublicKey& target, const IdentityEscrow& escrow,
    const TokenLedger& tokens) const {
  bool authorized = false;
  for (const auto& [id, p] : proposals_) {
    if (p.kind == ProposalKind::Removal &&
        p.status == ProposalStatus::Executed && p.removal_target == target) {
      authorized = true;
      break;
    }
  }
  if (!authorized) return Err::NoAuthorizingProposal;

  const AuthToken* token = tokens.auth_of_any(target);
  const IdentityRecord* record = escrow.find(target);
  if (token == nullptr || record == nullptr) return Err::CommitmentMismatch;
  if (!open_commitment(token->identity_commitment, record->identity,
                       record->nonce)) {
    return Err::CommitmentMismatch;
  }
  return record->identity;
}

const Proposal* Governance::find(const Digest& proposal_id) const {
  auto it = proposals_.find(proposal_id);
  return it == proposals_.end() ? nullptr : &it->second;
}

Proposal* Governance::find_mutable(const Digest& proposal_id) {
  auto it = proposals_.find(proposal_id);
  return it == proposals_.end() ? nullptr : &it->second;
}

}  // namespace pnr
