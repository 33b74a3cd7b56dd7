#include "pnr/errors.hpp"

namespace pnr {

std::string_view to_string(Err code) {
  switch (code) {
    case Err::None: return "None";
    case Err::EmptyIdentity: return "EmptyIdentity";
    case Err::AuthFailed: return "AuthFailed";
    case Err::DkycFailed: return "DkycFailed";
    case Err::DuplicateIdentity: return "DuplicateIdentity";
    case Err::DuplicateOwner: return "DuplicateOwner";
    case Err::BannedIdentity: return "BannedIdentity";
    case Err::SoulboundViolation: return "SoulboundViolation";
    case Err::UnknownToken: return "UnknownToken";
    case Err::AlreadyBurned: return "AlreadyBurned";
    case Err::NotMember: return "NotMember";
    case Err::TypeRestricted: return "TypeRestricted";
    case Err::ZeroQuantity: return "ZeroQuantity";
    case Err::WouldGoNegative: return "WouldGoNegative";
    case Err::InsufficientBalance: return "InsufficientBalance";
    case Err::EmptyMemberSet: return "EmptyMemberSet";
    case Err::DuplicateMember: return "DuplicateMember";
    case Err::NotInTree: return "NotInTree";
    case Err::BadQuorum: return "BadQuorum";
    case Err::ZeroPeriod: return "ZeroPeriod";
    case Err::DuplicateProposal: return "DuplicateProposal";
    case Err::UnknownProposal: return "UnknownProposal";
    case Err::VotingClosed: return "VotingClosed";
    case Err::InvalidMembershipProof: return "InvalidMembershipProof";
    case Err::DoubleVote: return "DoubleVote";
    case Err::MalformedVote: return "MalformedVote";
    case Err::VotingStillOpen: return "VotingStillOpen";
    case Err::OpeningMismatch: return "OpeningMismatch";
    case Err::TooManyVotes: return "TooManyVotes";
    case Err::NotPassed: return "NotPassed";
    case Err::AlreadyExecuted: return "AlreadyExecuted";
    case Err::WrongKind: return "WrongKind";
    case Err::NoAuthorizingProposal: return "NoAuthorizingProposal";
    case Err::CommitmentMismatch: return "CommitmentMismatch";
    case Err::WrongType: return "WrongType";
    case Err::PastDeadline: return "PastDeadline";
    case Err::ZeroAmount: return "ZeroAmount";
    case Err::SelfDeal: return "SelfDeal";
    case Err::WrongCaller: return "WrongCaller";
    case Err::InsufficientFunds: return "InsufficientFunds";
    case Err::DeadlinePassed: return "DeadlinePassed";
    case Err::WrongState: return "WrongState";
    case Err::NotParty: return "NotParty";
    case Err::DuplicateDispute: return "DuplicateDispute";
    case Err::UnknownDeal: return "UnknownDeal";
    case Err::UnknownDispute: return "UnknownDispute";
    case Err::WrongStage: return "WrongStage";
    case Err::NotYetExpired: return "NotYetExpired";
    case Err::NoSettlement: return "NoSettlement";
    case Err::VoteNotFinal: return "VoteNotFinal";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::UnknownMember: return "UnknownMember";
    case Err::InvalidProof: return "InvalidProof";
    case Err::AlreadyRedeemed: return "AlreadyRedeemed";
    case Err::ZeroN: return "ZeroN";
    case Err::UnknownOp: return "UnknownOp";
    case Err::ParseError: return "ParseError";
    case Err::SchemaViolation: return "SchemaViolation";
    case Err::UnknownAgentReference: return "UnknownAgentReference";
    case Err::UnknownFormat: return "UnknownFormat";
  }
  return "Unknown";
}

std::string Failure::message() const {
  std::string out(to_string(code));
  if (index >= 0) {
    out += "(" + std::to_string(index) + ")";
  }
  if (!detail.empty()) {
    out += ": " + detail;
  }
  return out;
}

}  // namespace pnr
