#pragma once

#include <string_view>

#include "pnr/bytes.hpp"

namespace pnr {

// Project-wide 256-bit hash (SHA-256). Every use site goes through a
// domain-separation tag so digests from different roles can never collide
// structurally.
Digest sha256(std::span<const std::uint8_t> data);

class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  Sha256& update(std::span<const std::uint8_t> data);
  Sha256& update(std::string_view tag);
  Sha256& update(const Digest& d);
  Sha256& update_u64le(std::uint64_t v);
  // Length-prefixed variable-size field (u64le length, then bytes).
  Sha256& update_sized(std::span<const std::uint8_t> data);
  Sha256& update_sized(std::string_view data);

  Digest finish();

 private:
  void* ctx_;
};

namespace tag {
inline constexpr std::string_view kSecretKey = "pnr/v1/sk";
inline constexpr std::string_view kPublicKey = "pnr/v1/pk";
inline constexpr std::string_view kCommit = "pnr/v1/commit";
inline constexpr std::string_view kLeaf = "pnr/v1/leaf";
inline constexpr std::string_view kNode = "pnr/v1/node";
inline constexpr std::string_view kNullifier = "pnr/v1/null";
inline constexpr std::string_view kVote = "pnr/v1/vote";
inline constexpr std::string_view kProposal = "pnr/v1/prop";
inline constexpr std::string_view kTransfer = "pnr/v1/xfer";
inline constexpr std::string_view kAttest = "pnr/v1/attest";
inline constexpr std::string_view kBoxKey = "pnr/v1/box";
inline constexpr std::string_view kBoxStream = "pnr/v1/box/stream";
inline constexpr std::string_view kBoxMac = "pnr/v1/box/mac";
inline constexpr std::string_view kRngSplit = "pnr/v1/rng";
}  // namespace tag

}  // namespace pnr
