#include "pnr/reputation.hpp"

#include <stdexcept>

namespace pnr {

void ReputationLedger::register_member(const PublicKey& member, Time now) {
  if (scores_.try_emplace(member, 0).second) {
    last_updated_[member] = now;
  }
}

bool ReputationLedger::has(const PublicKey& member) const {
  return scores_.contains(member);
}

std::uint64_t ReputationLedger::score(const PublicKey& member) const {
  auto it = scores_.find(member);
  return it == scores_.end() ? 0 : it->second;
}

Outcome<void> ReputationLedger::batch_update(
    const std::vector<PublicKey>& members,
    const std::vector<std::int64_t>& deltas, const std::string& reason,
    Time now) {
  if (members.size() != deltas.size()) return Err::LengthMismatch;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!scores_.contains(members[i])) {
      return Failure{Err::UnknownMember, static_cast<std::int64_t>(i)};
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::uint64_t& score = scores_[members[i]];
    std::int64_t next = static_cast<std::int64_t>(score) + deltas[i];
    score = next < 0 ? 0 : static_cast<std::uint64_t>(next);
    last_updated_[members[i]] = now;
    history_.push_back({members[i], deltas[i], reason, now});
  }
  return ok();
}

Outcome<void> ReputationLedger::add(const PublicKey& member,
                                    std::int64_t delta,
                                    const std::string& reason, Time now) {
  return batch_update({member}, {delta}, reason, now);
}

Outcome<DeterrenceReport> ReputationLedger::deterrence_margin(
    const PublicKey& member, std::uint64_t value_per_point,
    std::uint64_t cheating_gain, const Rat& factor) const {
  if (factor <= make_rat(0)) {
    throw std::invalid_argument("deterrence factor must be positive");
  }
  auto it = scores_.find(member);
  if (it == scores_.end()) return Err::UnknownMember;

  Rat loss(BigInt(it->second) * BigInt(value_per_point));
  Rat scaled_gain = factor * Rat(BigInt(cheating_gain));
  DeterrenceReport report;
  report.satisfied = loss >= scaled_gain;
  report.margin = rat_trunc(loss - scaled_gain);
  return report;
}

std::string ReputationLedger::to_csv() const {
  std::string out = "member,score,last_updated\n";
  for (const auto& [member, score] : scores_) {
    auto updated = last_updated_.find(member);
    out += to_hex(member) + "," + std::to_string(score) + "," +
           std::to_string(updated == last_updated_.end() ? 0
                                                         : updated->second) +
           "\n";
  }
  return out;
}

}  // namespace pnr
