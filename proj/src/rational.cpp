#include "greenbiset/rational.hpp"

#include "greenbiset/error.hpp"

namespace gb {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty rational literal");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace gb
