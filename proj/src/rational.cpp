#include "mtree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mtree {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text, true)) {
      throw std::invalid_argument("bad rational: '" + text + "'");
    }
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
    throw std::invalid_argument("bad rational: '" + text + "'");
  }
  Integer q(den);
  if (q == 0) {
    throw std::invalid_argument("bad rational (zero denominator): '" + text + "'");
  }
  return Rational(Integer(num), q);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace mtree
