#include "field.hpp"

#include <cctype>

namespace syzdepth {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  auto valid_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class p(num), q(den);
  if (q == 0) throw InputError("zero denominator in '" + text + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace syzdepth
