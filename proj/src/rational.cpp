#include "pnr/rational.hpp"

namespace pnr {

namespace {

std::optional<BigInt> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return std::nullopt;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return neg ? -value : value;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rat(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return std::nullopt;
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    auto whole_val = parse_integer(whole);
    auto frac_val = parse_integer(frac);
    if (!whole_val || !frac_val || *frac_val < 0) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = boost::multiprecision::abs(*whole_val) * scale + *frac_val;
    if (neg || *whole_val < 0) num = -num;
    return Rat(num, scale);
  }
  auto value = parse_integer(text);
  if (!value) return std::nullopt;
  return Rat(*value, BigInt(1));
}

std::string rat_to_decimal(const Rat& value, unsigned places) {
  BigInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  BigInt num = value.numerator() * scale;
  BigInt den = value.denominator();
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt q = num / den;
  BigInt r = num % den;
  if (r * 2 >= den) q += 1;  // half away from zero
  std::string digits = q.str();
  if (digits.size() <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out.append(digits.substr(digits.size() - places));
  }
  return neg && q != 0 ? "-" + out : out;
}

BigInt rat_trunc(const Rat& value) {
  return value.numerator() / value.denominator();
}

}  // namespace pnr
