#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnr/bytes.hpp"
#include "pnr/errors.hpp"

namespace pnr {

// Five interaction categories. T1 service deals, T2 high-risk deals with
// collateral, T3 dispute records, T4 completion records, T5 reputation
// standing. T3/T4/T5 are soulbound.
enum class TokenType : std::uint8_t { T1 = 1, T2 = 2, T3 = 3, T4 = 4, T5 = 5 };

constexpr TokenType kAllTokenTypes[] = {TokenType::T1, TokenType::T2,
                                        TokenType::T3, TokenType::T4,
                                        TokenType::T5};

constexpr bool is_soulbound(TokenType type) {
  return type == TokenType::T3 || type == TokenType::T4 ||
         type == TokenType::T5;
}

std::string_view to_string(TokenType type);
Outcome<TokenType> parse_token_type(std::string_view text);

// Unique non-transferable membership credential. One unburned token per
// owner and per identity commitment; a burned commitment can never mint
// again.
struct AuthToken {
  std::uint64_t token_id = 0;
  PublicKey owner{};
  Digest identity_commitment{};
  Time minted_at = 0;
  bool burned = false;
};

struct PrivGrant {
  std::uint64_t grant_id = 0;
  PublicKey owner{};
  TokenType type = TokenType::T1;
  std::uint64_t quantity = 0;
  Bytes sealed_metadata;  // encrypted to the owner key; no plaintext stored
};

struct BatchEntry {
  PublicKey owner{};
  TokenType type = TokenType::T1;
  std::int64_t delta = 0;
};

class TokenLedger {
 public:
  // Membership credential lifecycle.
  Outcome<std::uint64_t> mint_auth(const PublicKey& owner,
                                   const Digest& identity_commitment,
                                   bool dkyc_ok, Time now);
  Outcome<void> transfer_auth(std::uint64_t token_id, const PublicKey& from,
                              const PublicKey& to) const;
  Outcome<void> burn_auth(std::uint64_t token_id, Time now);

  bool is_member(const PublicKey& owner) const;
  std::size_t member_count() const;
  std::vector<PublicKey> members() const;  // ascending key order
  const AuthToken* find_auth(std::uint64_t token_id) const;
  // Unburned token of `owner`, if any.
  const AuthToken* auth_of(const PublicKey& owner) const;
  // Most recent token of `owner` including burned ones (forensics).
  const AuthToken* auth_of_any(const PublicKey& owner) const;
  bool is_blacklisted(const Digest& identity_commitment) const;

  // Interaction token ledger.
  Outcome<std::uint64_t> mint_priv(const PublicKey& owner, TokenType type,
                                   std::uint64_t quantity,
                                   std::span<const std::uint8_t> metadata,
                                   const Digest& ephemeral);
  // Sender-initiated T1/T2 movement between members; soulbound types refuse.
  Outcome<void> transfer_priv(const PublicKey& from, const PublicKey& to,
                              TokenType type, std::uint64_t quantity);
  // Applies all deltas or none. Sequential semantics: duplicates within one
  // batch accumulate in order.
  Outcome<void> batch_update_priv(const std::vector<BatchEntry>& entries);
  Outcome<void> restrict_type(const PublicKey& owner, TokenType type);
  Outcome<void> lift_restriction(const PublicKey& owner, TokenType type);

  // Protocol bookkeeping mint: dispute/completion records are written even
  // for restricted or removed parties, so sanctions cannot erase history.
  std::uint64_t record_grant(const PublicKey& owner, TokenType type,
                             std::uint64_t quantity,
                             std::span<const std::uint8_t> metadata,
                             const Digest& ephemeral);

  std::uint64_t balance(const PublicKey& owner, TokenType type) const;
  bool is_restricted(const PublicKey& owner, TokenType type) const;
  const std::vector<AuthToken>& auth_tokens() const { return auth_tokens_; }
  const std::map<std::uint64_t, PrivGrant>& grants() const { return grants_; }
  const std::map<std::pair<PublicKey, TokenType>, std::uint64_t>& balances()
      const {
    return balances_;
  }

  // Canonical snapshot with stable key order; from_json(to_json()) is
  // state-identical.
  nlohmann::json to_json() const;
  static Outcome<TokenLedger> from_json(const nlohmann::json& doc);

 private:
  std::uint64_t append_grant(const PublicKey& owner, TokenType type,
                             std::uint64_t quantity,
                             std::span<const std::uint8_t> metadata,
                             const Digest& ephemeral);

  std::vector<AuthToken> auth_tokens_;  // token_id = index + 1
  std::map<PublicKey, std::uint64_t> active_by_owner_;
  std::map<Digest, std::uint64_t> active_by_commitment_;
  std::set<Digest> burned_commitments_;

  std::map<std::pair<PublicKey, TokenType>, std::uint64_t> balances_;
  std::set<std::pair<PublicKey, TokenType>> restrictions_;
  std::map<std::uint64_t, PrivGrant> grants_;
  std::uint64_t next_grant_id_ = 1;
};

}  // namespace pnr
