#include "itemq/rational.hpp"

#include <cctype>

#include "itemq/errors.hpp"

namespace itemq {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw MalformedInput("malformed rational '" + std::string(text) + "'");
    const BigInt d{std::string(den)};
    if (d == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw MalformedInput("malformed decimal '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt digits{std::string(whole.empty() ? "0" : whole) + std::string(frac)};
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body))
      throw MalformedInput("malformed number '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational dyadic(unsigned exponent) {
  BigInt den = 1;
  den <<= exponent;
  return Rational(BigInt(1), den);
}

}  // namespace itemq
