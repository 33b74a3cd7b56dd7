#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pnr/bytes.hpp"
#include "pnr/errors.hpp"
#include "pnr/identity.hpp"
#include "pnr/rational.hpp"
#include "pnr/token_ledger.hpp"

namespace pnr {

// Binary Merkle tree over member public keys. Leaves are domain-tagged leaf
// digests in ascending public-key byte order; odd layers are padded by
// duplicating the last node.
struct MemberTree {
  std::vector<PublicKey> members;  // sorted ascending
  std::vector<Digest> leaves;
  Digest root{};
  std::size_t depth = 0;
};

Digest member_leaf(const PublicKey& member);
Outcome<MemberTree> build_member_tree(std::vector<PublicKey> members);

struct MembershipProof {
  Digest leaf{};
  std::vector<Digest> siblings;
  std::vector<bool> path_bits;  // bit i set = node is the right child at level i
};

Outcome<MembershipProof> prove_membership(const MemberTree& tree,
                                          const PublicKey& member);
bool verify_membership(const Digest& root, const MembershipProof& proof);

// Per-(member, proposal) digest; recording it blocks a second vote without
// linking the voter across proposals.
Digest derive_nullifier(const SecretKey& secret_key, const Digest& proposal_id);
Digest vote_commitment(int vote, const Digest& randomness);

enum class ProposalStatus { Open, Passed, Failed, Executed };
enum class ProposalKind { Removal, DisputeResolution, Generic };

std::string_view to_string(ProposalStatus status);
std::string_view to_string(ProposalKind kind);

// Stand-in for the zero-knowledge vote proof: binds (commitment, nullifier,
// root) and re-checks the Merkle path on verification. Soundness is real;
// anonymity is modeled only, since the record carries the leaf.
struct VoteProofRecord {
  Digest commitment{};
  Digest nullifier{};
  Digest member_root{};
  MembershipProof membership;
};

bool verify_vote_proof(const VoteProofRecord& record);

struct VoteOpening {
  int vote = 0;
  Digest randomness{};
};

struct Proposal {
  Digest id{};
  ProposalKind kind = ProposalKind::Generic;
  PublicKey removal_target{};   // kind == Removal
  std::uint64_t dispute_id = 0;  // kind == DisputeResolution
  Digest payload_digest{};
  Digest member_root{};
  Rat quorum;
  Time created_at = 0;
  Time voting_deadline = 0;
  std::uint64_t member_count_at_creation = 0;
  ProposalStatus status = ProposalStatus::Open;

  std::vector<Digest> commitments;
  std::set<Digest> nullifiers;
  std::vector<VoteProofRecord> proofs;
  std::uint64_t tally_total = 0;  // valid once finalized
  std::uint64_t tally_yes = 0;

  MemberTree tree;  // snapshot for proof generation
};

struct Tally {
  std::uint64_t total = 0;
  std::uint64_t yes = 0;
  bool passed = false;
};

// Plain threshold rule: favorable votes >= quorum * n, exact rational
// comparison.
Outcome<bool> threshold_decision(const std::vector<int>& votes,
                                 const Rat& quorum, std::uint64_t n);

struct ProposalSpec {
  ProposalKind kind = ProposalKind::Generic;
  PublicKey removal_target{};
  std::uint64_t dispute_id = 0;
  Bytes payload;
  Rat quorum;
  Time period = 0;
};

class Governance {
 public:
  explicit Governance(std::vector<Rat> allowed_quorums);

  Outcome<Digest> initiate_proposal(const PublicKey& initiator,
                                    const ProposalSpec& spec, Time now,
                                    const MemberTree& tree);
  Outcome<void> cast_vote(const Digest& proposal_id, int vote,
                          const MembershipProof& proof,
                          const Digest& nullifier, const Digest& randomness,
                          Time now);
  Outcome<Tally> finalize(const Digest& proposal_id,
                          const std::vector<VoteOpening>& openings, Time now);
  // Burns the target's credential and blacklists its commitment.
  Outcome<void> execute_removal(const Digest& proposal_id, TokenLedger& tokens,
                                Time now);
  // Opens the escrowed identity of a target with an executed removal on
  // record; verifies the opening against the minted commitment.
  Outcome<std::string> force_disclose(const PublicKey& target,
                                      const IdentityEscrow& escrow,
                                      const TokenLedger& tokens) const;

  const Proposal* find(const Digest& proposal_id) const;
  Proposal* find_mutable(const Digest& proposal_id);
  const std::vector<Digest>& proposal_order() const { return order_; }
  const std::vector<Rat>& allowed_quorums() const { return allowed_quorums_; }

 private:
  std::vector<Rat> allowed_quorums_;
  std::map<Digest, Proposal> proposals_;
  std::vector<Digest> order_;  // creation order
};

}  // namespace pnr
