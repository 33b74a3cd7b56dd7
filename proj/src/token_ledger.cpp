#include "pnr/token_ledger.hpp"

#include "pnr/identity.hpp"

namespace pnr {

std::string_view to_string(TokenType type) {
  switch (type) {
    case TokenType::T1: return "T1";
    case TokenType::T2: return "T2";
    case TokenType::T3: return "T3";
    case TokenType::T4: return "T4";
    case TokenType::T5: return "T5";
  }
  return "T?";
}

Outcome<TokenType> parse_token_type(std::string_view text) {
  for (TokenType t : kAllTokenTypes) {
    if (text == to_string(t)) return t;
  }
  return Err::SchemaViolation;
}

Outcome<std::uint64_t> TokenLedger::mint_auth(const PublicKey& owner,
                                              const Digest& identity_commitment,
                                              bool dkyc_ok, Time now) {
  if (!dkyc_ok) return Err::DkycFailed;
  if (active_by_commitment_.contains(identity_commitment)) {
    return Err::DuplicateIdentity;
  }
  if (active_by_owner_.contains(owner)) return Err::DuplicateOwner;
  if (burned_commitments_.contains(identity_commitment)) {
    return Err::BannedIdentity;
  }

  AuthToken token;
  token.token_id = auth_tokens_.size() + 1;
  token.owner = owner;
  token.identity_commitment = identity_commitment;
  token.minted_at = now;
  auth_tokens_.push_back(token);
  active_by_owner_[owner] = token.token_id;
  active_by_commitment_[identity_commitment] = token.token_id;
  return token.token_id;
}

Outcome<void> TokenLedger::transfer_auth(std::uint64_t, const PublicKey&,
                                         const PublicKey&) const {
  // Unconditional: soulbound check precedes even existence.
  return Err::SoulboundViolation;
}

Outcome<void> TokenLedger::burn_auth(std::uint64_t token_id, Time now) {
  if (token_id == 0 || token_id > auth_tokens_.size()) {
    return Err::UnknownToken;
  }
  AuthToken& token = auth_tokens_[token_id - 1];
  if (token.burned) return Err::AlreadyBurned;

  token.burned = true;
  (void)now;
  active_by_owner_.erase(token.owner);
  active_by_commitment_.erase(token.identity_commitment);
  burned_commitments_.insert(token.identity_commitment);
  // Removed members keep their balances frozen: every type restricted, so
  // dispute and completion history stays readable but unusable.
  for (TokenType t : kAllTokenTypes) {
    restrictions_.insert({token.owner, t});
  }
  return ok();
}

bool TokenLedger::is_member(const PublicKey& owner) const {
  return active_by_owner_.contains(owner);
}

std::size_t TokenLedger::member_count() const {
  return active_by_owner_.size();
}

std::vector<PublicKey> TokenLedger::members() const {
  std::vector<PublicKey> out;
  out.reserve(active_by_owner_.size());
  for (const auto& [owner, _] : active_by_owner_) {
    out.push_back(owner);
  }
  return out;
}

const AuthToken* TokenLedger::find_auth(std::uint64_t token_id) const {
  if (token_id == 0 || token_id > auth_tokens_.size()) return nullptr;
  return &auth_tokens_[token_id - 1];
}

const AuthToken* TokenLedger::auth_of(const PublicKey& owner) const {
  auto it = active_by_owner_.find(owner);
  return it == active_by_owner_.end() ? nullptr : find_auth(it->second);
}

const AuthToken* TokenLedger::auth_of_any(const PublicKey& owner) const {
  for (auto it = auth_tokens_.rbegin(); it != auth_tokens_.rend(); ++it) {
    if (it->owner == owner) return &*it;
  }
  return nullptr;
}

bool TokenLedger::is_blacklisted(const Digest& identity_commitment) const {
  return burned_commitments_.contains(identity_commitment);
}

Outcome<std::uint64_t> TokenLedger::mint_priv(
    const PublicKey& owner, TokenType type, std::uint64_t quantity,
    std::span<const std::uint8_t> metadata, const Digest& ephemeral) {
  if (!is_member(owner)) return Err::NotMember;
  if (is_restricted(owner, type)) return Err::TypeRestricted;
  if (quantity == 0) return Err::ZeroQuantity;
  return append_grant(owner, type, quantity, metadata, ephemeral);
}

Outcome<void> TokenLedger::transfer_priv(const PublicKey& from,
                                         const PublicKey& to, TokenType type,
                                         std::uint64_t quantity) {
  if (is_soulbound(type)) return Err::SoulboundViolation;
  if (!is_member(from) || !is_member(to)) return Err::NotMember;
  if (is_restricted(from, type) || is_restricted(to, type)) {
    return Err::TypeRestricted;
  }
  if (quantity == 0) return Err::ZeroQuantity;
  auto it = balances_.find({from, type});
  if (it == balances_.end() || it->second < quantity) {
    return Err::InsufficientBalance;
  }
  it->second -= quantity;
  if (it->second == 0) balances_.erase(it);
  balances_[{to, type}] += quantity;
  return ok();
}

Outcome<void> TokenLedger::batch_update_priv(
    const std::vector<BatchEntry>& entries) {
  // Dry-run against a scratch view so a failing element leaves the ledger
  // untouched.
  std::map<std::pair<PublicKey, TokenType>, std::int64_t> scratch;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const BatchEntry& e = entries[i];
    if (is_restricted(e.owner, e.type)) {
      return Failure{Err::TypeRestricted, static_cast<std::int64_t>(i)};
    }
    auto key = std::make_pair(e.owner, e.type);
    auto [it, inserted] = scratch.try_emplace(
        key, static_cast<std::int64_t>(balance(e.owner, e.type)));
    std::int64_t next = it->second + e.delta;
    if (next < 0) {
      return Failure{Err::WouldGoNegative, static_cast<std::int64_t>(i)};
    }
    it->second = next;
  }
  for (const auto& [key, value] : scratch) {
    if (value == 0) {
      balances_.erase(key);
    } else {
      balances_[key] = static_cast<std::uint64_t>(value);
    }
  }
  return ok();
}

Outcome<void> TokenLedger::restrict_type(const PublicKey& owner,
                                         TokenType type) {
  if (!is_member(owner)) return Err::NotMember;
  restrictions_.insert({owner, type});
  return ok();
}

Outcome<void> TokenLedger::lift_restriction(const PublicKey& owner,
                                            TokenType type) {
  if (!is_member(owner)) return Err::NotMember;
  restrictions_.erase({owner, type});
  return ok();
}

std::uint64_t TokenLedger::record_grant(const PublicKey& owner, TokenType type,
                                        std::uint64_t quantity,
                                        std::span<const std::uint8_t> metadata,
                                        const Digest& ephemeral) {
  return append_grant(owner, type, quantity, metadata, ephemeral);
}

std::uint64_t TokenLedger::balance(const PublicKey& owner,
                                   TokenType type) const {
  auto it = balances_.find({owner, type});
  return it == balances_.end() ? 0 : it->second;
}

bool TokenLedger::is_restricted(const PublicKey& owner, TokenType type) const {
  return restrictions_.contains({owner, type});
}

std::uint64_t TokenLedger::append_grant(const PublicKey& owner, TokenType type,
                                        std::uint64_t quantity,
                                        std::span<const std::uint8_t> metadata,
                                        const Digest& ephemeral) {
  PrivGrant grant;
  grant.grant_id = next_grant_id_++;
  grant.owner = owner;
  grant.type = type;
  grant.quantity = quantity;
  grant.sealed_metadata = seal_to(owner, metadata, ephemeral);
  balances_[{owner, type}] += quantity;
  std::uint64_t id = grant.grant_id;
  grants_[id] = std::move(grant);
  return id;
}

nlohmann::json TokenLedger::to_json() const {
  nlohmann::json doc;
  auto& tokens = doc["auth_tokens"] = nlohmann::json::array();
  for (const AuthToken& t : auth_tokens_) {
    tokens.push_back({{"token_id", t.token_id},
                      {"owner", to_hex(t.owner)},
                      {"identity_commitment", to_hex(t.identity_commitment)},
                      {"minted_at", t.minted_at},
                      {"burned", t.burned}});
  }
  auto& blacklist = doc["burned_commitments"] = nlohmann::json::array();
  for (const Digest& c : burned_commitments_) {
    blacklist.push_back(to_hex(c));
  }
  auto& balances = doc["balances"] = nlohmann::json::array();
  for (const auto& [key, value] : balances_) {
    balances.push_back({{"owner", to_hex(key.first)},
                        {"type", std::string(to_string(key.second))},
                        {"quantity", value}});
  }
  auto& restrictions = doc["restrictions"] = nlohmann::json::array();
  for (const auto& [owner, type] : restrictions_) {
    restrictions.push_back(
        {{"owner", to_hex(owner)}, {"type", std::string(to_string(type))}});
  }
  auto& grants = doc["grants"] = nlohmann::json::array();
  for (const auto& [id, g] : grants_) {
    grants.push_back({{"grant_id", id},
                      {"owner", to_hex(g.owner)},
                      {"type", std::string(to_string(g.type))},
                      {"quantity", g.quantity},
                      {"sealed_metadata", to_hex(as_span(g.sealed_metadata))}});
  }
  doc["next_grant_id"] = next_grant_id_;
  return doc;
}

Outcome<TokenLedger> TokenLedger::from_json(const nlohmann::json& doc) {
  TokenLedger ledger;
  try {
    for (const auto& t : doc.at("auth_tokens")) {
      AuthToken token;
      token.token_id = t.at("token_id").get<std::uint64_t>();
      if (!digest_from_hex(t.at("owner").get<std::string>(), token.owner) ||
          !digest_from_hex(t.at("identity_commitment").get<std::string>(),
                           token.identity_commitment)) {
        return Failure{Err::ParseError, -1, "bad hex in auth_tokens"};
      }
      token.minted_at = t.at("minted_at").get<Time>();
      token.burned = t.at("burned").get<bool>();
      if (token.token_id != ledger.auth_tokens_.size() + 1) {
        return Failure{Err::ParseError, -1, "non-dense token ids"};
      }
      ledger.auth_tokens_.push_back(token);
      if (!token.burned) {
        ledger.active_by_owner_[token.owner] = token.token_id;
        ledger.active_by_commitment_[token.identity_commitment] =
            token.token_id;
      }
    }
    for (const auto& c : doc.at("burned_commitments")) {
      Digest d{};
      if (!digest_from_hex(c.get<std::string>(), d)) {
        return Failure{Err::ParseError, -1, "bad hex in burned_commitments"};
      }
      ledger.burned_commitments_.insert(d);
    }
    for (const auto& b : doc.at("balances")) {
      PublicKey owner{};
      if (!digest_from_hex(b.at("owner").get<std::string>(), owner)) {
        return Failure{Err::ParseError, -1, "bad hex in balances"};
      }
      auto type = parse_token_type(b.at("type").get<std::string>());
      if (!type.ok()) return Failure{Err::ParseError, -1, "bad token type"};
      ledger.balances_[{owner, type.value()}] =
          b.at("quantity").get<std::uint64_t>();
    }
    for (const auto& r : doc.at("restrictions")) {
      PublicKey owner{};
      if (!digest_from_hex(r.at("owner").get<std::string>(), owner)) {
        return Failure{Err::ParseError, -1, "bad hex in restrictions"};
      }
      auto type = parse_token_type(r.at("type").get<std::string>());
      if (!type.ok()) return Failure{Err::ParseError, -1, "bad token type"};
      ledger.restrictions_.insert({owner, type.value()});
    }
    for (const auto& g : doc.at("grants")) {
      PrivGrant grant;
      grant.grant_id = g.at("grant_id").get<std::uint64_t>();
      if (!digest_from_hex(g.at("owner").get<std::string>(), grant.owner)) {
        return Failure{Err::ParseError, -1, "bad hex in grants"};
      }
      auto type = parse_token_type(g.at("type").get<std::string>());
      if (!type.ok()) return Failure{Err::ParseError, -1, "bad token type"};
      grant.type = type.value();
      grant.quantity = g.at("quantity").get<std::uint64_t>();
      if (!from_hex(g.at("sealed_metadata").get<std::string>(),
                    grant.sealed_metadata)) {
        return Failure{Err::ParseError, -1, "bad hex in grants"};
      }
      ledger.grants_[grant.grant_id] = std::move(grant);
    }
    ledger.next_grant_id_ = doc.at("next_grant_id").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    return Failure{Err::ParseError, -1, e.what()};
  }
  return ledger;
}

}  // namespace pnr
