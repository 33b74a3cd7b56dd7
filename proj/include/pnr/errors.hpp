#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pnr {

enum class Err {
  None = 0,
  // identity
  EmptyIdentity,
  AuthFailed,
  // token ledger
  DkycFailed,
  DuplicateIdentity,
  DuplicateOwner,
  BannedIdentity,
  SoulboundViolation,
  UnknownToken,
  AlreadyBurned,
  NotMember,
  TypeRestricted,
  ZeroQuantity,
  WouldGoNegative,
  InsufficientBalance,
  // governance
  EmptyMemberSet,
  DuplicateMember,
  NotInTree,
  BadQuorum,
  ZeroPeriod,
  DuplicateProposal,
  UnknownProposal,
  VotingClosed,
  InvalidMembershipProof,
  DoubleVote,
  MalformedVote,
  VotingStillOpen,
  OpeningMismatch,
  TooManyVotes,
  NotPassed,
  AlreadyExecuted,
  WrongKind,
  NoAuthorizingProposal,
  CommitmentMismatch,
  // deals
  WrongType,
  PastDeadline,
  ZeroAmount,
  SelfDeal,
  WrongCaller,
  InsufficientFunds,
  DeadlinePassed,
  WrongState,
  NotParty,
  DuplicateDispute,
  UnknownDeal,
  UnknownDispute,
  WrongStage,
  NotYetExpired,
  NoSettlement,
  VoteNotFinal,
  // reputation
  LengthMismatch,
  UnknownMember,
  // bridge
  InvalidProof,
  AlreadyRedeemed,
  // gas model
  ZeroN,
  UnknownOp,
  // scenario / reporting
  ParseError,
  SchemaViolation,
  UnknownAgentReference,
  UnknownFormat,
};

std::string_view to_string(Err code);

struct Failure {
  Err code = Err::None;
  std::int64_t index = -1;  // batch element index where applicable
  std::string detail;       // field path or context for schema errors

  std::string message() const;
};

// Value-or-failure result. Failures are values so scenario runs can record
// rejected actions instead of aborting.
template <typename T>
class Outcome {
 public:
  Outcome(T value) : value_(std::move(value)) {}
  Outcome(Err code) : fail_{code} {}
  Outcome(Failure f) : fail_(std::move(f)) {}

  bool ok() const { return fail_.code == Err::None; }
  explicit operator bool() const { return ok(); }

  Err error() const { return fail_.code; }
  const Failure& failure() const { return fail_; }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Outcome::value on " + fail_.message());
    return *value_;
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Outcome::value on " + fail_.message());
    return std::move(*value_);
  }

 private:
  Failure fail_{};
  std::optional<T> value_;
};

template <>
class Outcome<void> {
 public:
  Outcome() = default;
  Outcome(Err code) : fail_{code} {}
  Outcome(Failure f) : fail_(std::move(f)) {}

  bool ok() const { return fail_.code == Err::None; }
  explicit operator bool() const { return ok(); }

  Err error() const { return fail_.code; }
  const Failure& failure() const { return fail_; }

 private:
  Failure fail_{};
};

inline Outcome<void> ok() {
  return Outcome<void>();
}

}  // namespace pnr
