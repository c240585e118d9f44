#include "pathhom/rational.hpp"

#include <cctype>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_integer_literal(den, false))
      throw InputError("bad rational literal: '" + std::string(text) + "'");
  }
  if (!is_integer_literal(num, true))
    throw InputError("bad rational literal: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class a(n, 10);
  mpz_class b(1);
  if (!den.empty()) b = mpz_class(std::string(den), 10);
  if (b == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace pathhom
