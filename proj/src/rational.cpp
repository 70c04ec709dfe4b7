#include "dira/rational.hpp"

#include <cctype>

namespace dira {

Rational rat_from_string(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!valid_int(num) || !valid_int(den))
    throw Error("malformed rational literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw Error("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace dira
