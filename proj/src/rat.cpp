#include "bsato/rat.hpp"

#include <cctype>

#include "bsato/errors.hpp"

namespace bsato {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(const std::string& text) {
  // strict shape: -?digits(/digits)?
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  auto read_digits = [&](Int& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw parse_error("malformed rational: '" + text + "'");
    out = Int(text.substr(start, i - start));
  };
  Int num, den(1);
  read_digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    read_digits(den);
  }
  if (i != text.size()) throw parse_error("malformed rational: '" + text + "'");
  if (neg) num = -num;
  return make_rat(num, den);
}

std::string to_string(const Rat& value) { return value.get_str(); }

std::string to_string(const Int& value) { return value.get_str(); }

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0) {
    if (exp < 0) throw domain_error("negative power of zero");
    return Rat(0);
  }
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rat out(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
  out.canonicalize();  // sign lives in the numerator already, gcd is 1
  if (exp < 0) out = 1 / out;
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace bsato
