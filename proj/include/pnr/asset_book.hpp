#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pnr/bytes.hpp"
#include "pnr/errors.hpp"

namespace pnr {

// Per-owner, per-asset balances in minor units. Balances never go negative;
// debit fails atomically instead.
class AssetBook {
 public:
  std::uint64_t balance(const PublicKey& owner, const std::string& asset) const;
  void credit(const PublicKey& owner, const std::string& asset,
              std::uint64_t amount);
  Outcome<void> debit(const PublicKey& owner, const std::string& asset,
                      std::uint64_t amount);

  std::uint64_t total(const std::string& asset) const;

  const std::map<std::pair<PublicKey, std::string>, std::uint64_t>& entries()
      const {
    return balances_;
  }

 private:
  std::map<std::pair<PublicKey, std::string>, std::uint64_t> balances_;
};

}  // namespace pnr
