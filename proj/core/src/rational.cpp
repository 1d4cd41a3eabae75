#include "latkern/rational.hpp"

#include <stdexcept>
#include <string>

namespace latkern {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!valid_integer(num_part))
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(num_part));
  } else {
    const auto den_part = text.substr(slash + 1);
    if (!valid_integer(den_part))
      throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    mpz_class den = parse_integer(den_part);
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    q = Rational(parse_integer(num_part), den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace latkern
