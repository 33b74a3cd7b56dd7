#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pnr {

using Digest = std::array<std::uint8_t, 32>;
using PublicKey = Digest;
using SecretKey = Digest;
using Bytes = std::vector<std::uint8_t>;

// Logical simulation time. Advanced only by explicit clock actions.
using Time = std::uint64_t;

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::span<const std::uint8_t> as_span(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline std::span<const std::uint8_t> as_span(const Bytes& b) {
  return {b.data(), b.size()};
}

// Fixed 8-byte little-endian encoding; all integers entering hash preimages
// or wire formats go through this so digests are platform independent.
inline void append_u64le(Bytes& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

inline void append(Bytes& out, std::span<const std::uint8_t> data) {
  out.insert(out.end(), data.begin(), data.end());
}

inline void append(Bytes& out, const Digest& d) {
  out.insert(out.end(), d.begin(), d.end());
}

std::string to_hex(std::span<const std::uint8_t> data);
std::string to_hex(const Digest& d);

// Strict lowercase/uppercase hex; returns false on odd length or bad chars.
bool from_hex(std::string_view hex, Bytes& out);
bool digest_from_hex(std::string_view hex, Digest& out);

}  // namespace pnr
