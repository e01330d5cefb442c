#include "hamnodal/rational.hpp"

#include <cctype>

#include "hamnodal/errors.hpp"

namespace hamnodal {

std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num)) {
    throw Error("invalid rational literal: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return Rational(BigInt(std::string(num)));
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den) || den.front() == '-') {
    throw Error("invalid rational literal: '" + std::string(text) + "'");
  }
  BigInt d{std::string(den)};
  if (d == 0) {
    throw Error("zero denominator in rational literal: '" + std::string(text) + "'");
  }
  return Rational(BigInt(std::string(num)), d);
}

}  // namespace hamnodal
