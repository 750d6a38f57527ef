#pragma once

#include <gmpxx.h>

#include <string>

namespace bsato {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize on construction from a fraction; every
// construction from numerator/denominator must go through these.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// Accepts "p", "-p", "p/q" with decimal digits; canonicalizes sign and gcd.
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& value);
std::string to_string(const Int& value);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }
inline int sign(const Rat& value) { return sgn(value); }

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, long exp);  // exp < 0 requires base != 0

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

}  // namespace bsato
