#include "grt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace grt {

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (!digits_before || (seen_slash && !digits_after))
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (seen_slash) {
    auto slash = s.find('/');
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q = Rational(mpz_class(s.substr(0, slash), 10), den);
    q.canonicalize();
  } else {
    q = Rational(mpz_class(s, 10));
  }
  return q;
}

}  // namespace grt
