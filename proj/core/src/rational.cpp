#include "ward/rational.hpp"

#include <cctype>
#include <ostream>

namespace ward {

Rat Rat::parse(const std::string& text) {
  // Accepted grammar: '-'? digits ('/' digits)? with a nonzero denominator.
  auto bad = [&]() -> ParseError {
    return ParseError("malformed rational \"" + text + "\" (want p or p/q)");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad();
  mpz_class num(text.substr(0, i));
  mpz_class den(1);
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw bad();
    den = mpz_class(text.substr(den_begin));
    if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
  }
  return Rat(num, den);
}

Rat Rat::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw InvalidParameter("negative power of zero");
    return (Rat(1) / *this).pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);  // powers of a canonical fraction stay canonical
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long n) {
  if (n < 0) throw InvalidParameter("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rat two_pow_neg(long e) {
  if (e < 0) throw InvalidParameter("two_pow_neg wants e >= 0");
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rat(mpz_class(1), d);
}

}  // namespace ward
