#include "pnr/asset_book.hpp"

namespace pnr {

std::uint64_t AssetBook::balance(const PublicKey& owner,
                                 const std::string& asset) const {
  auto it = balances_.find({owner, asset});
  return it == balances_.end() ? 0 : it->second;
}

void AssetBook::credit(const PublicKey& owner, const std::string& asset,
                       std::uint64_t amount) {
  if (amount == 0) return;
  balances_[{owner, asset}] += amount;
}

Outcome<void> AssetBook::debit(const PublicKey& owner, const std::string& asset,
                               std::uint64_t amount) {
  if (amount == 0) return ok();
  auto it = balances_.find({owner, asset});
  if (it == balances_.end() || it->second < amount) {
    return Err::InsufficientFunds;
  }
  it->second -= amount;
  if (it->second == 0) balances_.erase(it);
  return ok();
}

std::uint64_t AssetBook::total(const std::string& asset) const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : balances_) {
    if (key.second == asset) sum += value;
  }
  return sum;
}

}  // namespace pnr
