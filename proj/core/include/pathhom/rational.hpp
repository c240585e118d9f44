#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pathhom {

// Arbitrary precision rationals, always kept in lowest terms.
using Rational = mpq_class;

// Accepts "a", "-a", "a/b". Throws InputError on anything else or b == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace pathhom
