#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pnr/bytes.hpp"
#include "pnr/errors.hpp"
#include "pnr/rational.hpp"

namespace pnr {

struct RepEntry {
  PublicKey member{};
  std::int64_t delta = 0;
  std::string reason;
  Time at = 0;
};

struct DeterrenceReport {
  BigInt margin;  // stake value minus factor-scaled cheating gain, truncated
  bool satisfied = false;
};

// Additive score ledger with a zero floor applied at every step. History is
// append-only; replaying it from empty state reproduces the scores.
class ReputationLedger {
 public:
  void register_member(const PublicKey& member, Time now);
  bool has(const PublicKey& member) const;
  std::uint64_t score(const PublicKey& member) const;

  // Sequential load-add-store semantics: duplicates within one batch
  // accumulate in order, clamped at zero each step.
  Outcome<void> batch_update(const std::vector<PublicKey>& members,
                             const std::vector<std::int64_t>& deltas,
                             const std::string& reason, Time now);
  Outcome<void> add(const PublicKey& member, std::int64_t delta,
                    const std::string& reason, Time now);

  // Deterrence check: value at stake if fully excluded vs the scaled gain
  // from cheating.
  Outcome<DeterrenceReport> deterrence_margin(const PublicKey& member,
                                              std::uint64_t value_per_point,
                                              std::uint64_t cheating_gain,
                                              const Rat& factor) const;

  const std::vector<RepEntry>& history() const { return history_; }
  const std::map<PublicKey, std::uint64_t>& scores() const { return scores_; }
  std::string to_csv() const;  // member,score,last_updated

 private:
  std::map<PublicKey, std::uint64_t> scores_;
  std::map<PublicKey, Time> last_updated_;
  std::vector<RepEntry> history_;
};

}  // namespace pnr
