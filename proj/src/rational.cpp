#include "dks/rational.hpp"

#include <cctype>

namespace dks {

std::string to_fraction_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

static bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

static Int to_int(const std::string& s) {
  // cpp_int does not accept a leading '+'.
  return Int(s[0] == '+' ? s.substr(1) : s);
}

std::optional<Rat> parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(s)) return std::nullopt;
    return Rat(to_int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  Int d = to_int(den);
  if (d == 0) return std::nullopt;
  return Rat(to_int(num), d);
}

} // namespace dks
