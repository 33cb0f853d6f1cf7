#pragma once

#include <gmpxx.h>

#include <string>

namespace relaysched {

using Int = mpz_class;
using Rat = mpq_class;

/// Renders q as "p/q" with canonical sign and an explicit denominator,
/// e.g. "143/35", "0/1", "-18/19".
std::string fraction_string(const Rat& q);

/// Parses "p/q" or a bare integer "p". Throws input_error on garbage.
Rat parse_fraction(const std::string& text);

/// Sign of an exact integer: -1, 0 or +1.
inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign_of(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

} // namespace relaysched
