#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pnr {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic for quorum thresholds and money math. No
// floating point anywhere in decision rules or cost accounting.
using Rat = boost::rational<BigInt>;

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
  return Rat(BigInt(num), BigInt(den));
}

// Accepts "3", "-3", "0.65", "13/20". Exact; no float round trip.
std::optional<Rat> parse_rational(std::string_view text);

// Fixed-point decimal rendering, round half away from zero.
std::string rat_to_decimal(const Rat& value, unsigned places);

// Truncation toward zero.
BigInt rat_trunc(const Rat& value);

}  // namespace pnr
