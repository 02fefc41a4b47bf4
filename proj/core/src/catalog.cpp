#include "ward/catalog.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ward {

CatalogTag CatalogTag::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto int_arg = [&](const char* what) {
    Rat r = Rat::parse(arg);
    if (!r.is_integer() || !r.num().fits_sint_p())
      throw ParseError(std::string(what) + " parameter must be a small integer");
    return static_cast<int>(r.num().get_si());
  };
  if (head == "pascal") return pascal(int_arg("pascal"));
  if (head == "polylog") return polylog(int_arg("polylog"));
  if (head == "fibonomial") {
    if (!arg.empty()) throw ParseError("fibonomial takes no parameter");
    return fibonomial();
  }
  if (head == "q") return qcalc(Rat::parse(arg));
  throw ParseError("unknown catalog tag \"" + text + "\"");
}

std::string CatalogTag::str() const {
  switch (family) {
    case Family::Pascal: return "pascal:" + std::to_string(param);
    case Family::Polylog: return "polylog:" + std::to_string(param);
    case Family::Fibonomial: return "fibonomial";
    case Family::QCalc: return "q:" + q.str();
    case Family::Custom: return "custom";
  }
  return "custom";
}

HSeries make_h(const CatalogTag& tag, int trunc) {
  if (trunc < 0) throw InvalidParameter("make_h wants trunc >= 0");
  std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
  switch (tag.family) {
    case CatalogTag::Family::Pascal: {
      int s = tag.param;
      if (s < 1) throw InvalidParameter("pascal column wants s >= 1");
      // h = x / (1-x)^s, expanded through the series ring.
      Series one_minus_x = Series::constant(Rat(1), trunc) -
                           (trunc >= 1 ? Series::monomial(1, trunc)
                                       : Series::zero(trunc));
      Series inv = mul_inverse(pow(one_minus_x, s));
      for (int n = 1; n <= trunc; ++n) v[static_cast<std::size_t>(n)] = inv.coeff(n - 1);
      break;
    }
    case CatalogTag::Family::Polylog: {
      if (tag.param < 0) throw InvalidParameter("polylog wants alpha >= 0");
      for (int n = 1; n <= trunc; ++n) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(tag.param));
        v[static_cast<std::size_t>(n)] = Rat(p);
      }
      break;
    }
    case CatalogTag::Family::Fibonomial: {
      for (int n = 1; n <= trunc; ++n) v[static_cast<std::size_t>(n)] = Rat(fibonacci(n));
      break;
    }
    case CatalogTag::Family::QCalc: {
      if (tag.q == Rat(1))
        throw InvalidParameter("q-calculus wants q != 1");
      Rat qpow(1);
      Rat sum(0);
      for (int n = 1; n <= trunc; ++n) {
        sum += qpow;  // [n]_q = 1 + q + ... + q^{n-1}
        qpow *= tag.q;
        if (sum.is_zero())
          throw InvalidParameter("[" + std::to_string(n) + "]_q = 0 for q = " +
                                 tag.q.str());
        v[static_cast<std::size_t>(n)] = sum;
      }
      break;
    }
    case CatalogTag::Family::Custom:
      throw InvalidParameter("custom tag has no closed form; build the HSeries directly");
  }
  return HSeries(Series(std::move(v)));
}

Rat q_integer(const Rat& q, int n) {
  if (n < 0) throw InvalidParameter("q_integer wants n >= 0");
  Rat sum(0), qpow(1);
  for (int i = 0; i < n; ++i) {
    sum += qpow;
    qpow *= q;
  }
  return sum;
}

mpz_class fibonacci(int n) {
  if (n < 0) throw InvalidParameter("fibonacci wants n >= 0");
  mpz_class a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < n; ++i) {
    mpz_class next = a + b;
    a = b;
    b = next;
  }
  return a;
}

mpz_class stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0 && k == 0) return 1;
  if (k == 0 || k > n) return 0;
  // S(n,k) = k S(n-1,k) + S(n-1,k-1), rolled row by row.
  std::vector<mpz_class> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          mpz_class(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    row[0] = 0;  // S(i,0) = 0 for i >= 1
  }
  return row[static_cast<std::size_t>(k)];
}

mpz_class stirling2_alternating(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0 && k == 0) return 1;
  if (k == 0) return 0;
  // (1/k!) sum_j C(k,j) (-1)^{k+j} j^n
  mpz_class sum = 0;
  for (int j = 0; j <= k; ++j) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j),
                  static_cast<unsigned long>(n));
    mpz_class term = binomial(k, j) * p;
    if ((k + j) % 2 != 0) term = -term;
    sum += term;
  }
  mpz_class quotient, remainder;
  mpz_class kfac = factorial(k);
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), sum.get_mpz_t(),
              kfac.get_mpz_t());
  if (remainder != 0)
    throw InvalidParameter("alternating Stirling sum not divisible by k!");
  return quotient;
}

mpz_class eulerian(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  // E(n,k) = (k+1) E(n-1,k) + (n-k) E(n-1,k-1)
  std::vector<mpz_class> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) {
      mpz_class acc = 0;
      if (j < i) acc += mpz_class(j + 1) * row[static_cast<std::size_t>(j)];
      if (j >= 1 && j - 1 < i) acc += mpz_class(i - j) * row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = acc;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

bool polylog_closed_form_check(int alpha, int trunc) {
  if (alpha < 0 || trunc < 1)
    throw InvalidParameter("closed form check wants alpha >= 0, trunc >= 1");
  Series numer = Series::zero(trunc);
  for (int i = 0; i <= alpha; ++i) {
    int e = alpha - i;
    if (e > trunc) continue;  // exponent beyond the window contributes nothing
    numer = numer + Series::monomial(e, trunc, Rat(eulerian(alpha, i)));
  }
  Series one_minus_x =
      Series::constant(Rat(1), trunc) - Series::monomial(1, trunc);
  Series rational = numer * mul_inverse(pow(one_minus_x, alpha + 1));
  for (int k = 1; k <= std::min(trunc, rational.trunc()); ++k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(alpha));
    if (rational.coeff(k) != Rat(p)) return false;
  }
  return true;
}

Series generalized_exp(const HSeries& h, int trunc) {
  if (trunc > h.trunc())
    throw PrecisionExhausted("generalized exp needs h through the requested trunc");
  std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
  v[0] = Rat(1);
  for (int k = 1; k <= trunc; ++k)
    v[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k - 1)] / h.at(k);
  return Series(std::move(v));
}

Series hypergeom_pFq(const std::vector<Rat>& upper,
                     const std::vector<Rat>& lower, const Rat& scale,
                     int trunc) {
  if (trunc < 0) throw InvalidParameter("hypergeom wants trunc >= 0");
  std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
  v[0] = Rat(1);
  Rat c(1);
  for (int k = 0; k < trunc; ++k) {
    for (const Rat& a : upper) c *= a + Rat(k);
    for (std::size_t j = 0; j < lower.size(); ++j) {
      Rat factor = lower[j] + Rat(k);
      if (factor.is_zero())
        throw PochhammerPole(static_cast<int>(j), k,
                             "lower parameter " + lower[j].str() +
                                 " hits a zero Pochhammer factor at k = " +
                                 std::to_string(k));
      c /= factor;
    }
    c *= scale;
    c /= Rat(k + 1);
    v[static_cast<std::size_t>(k + 1)] = c;
  }
  return Series(std::move(v));
}

bool exp_equals_hypergeom_check(int s, int trunc) {
  if (s < 1) throw InvalidParameter("pascal column wants s >= 1");
  Series e = generalized_exp(make_h(CatalogTag::pascal(s), trunc), trunc);
  std::vector<Rat> lower;
  for (int i = 1; i <= s - 1; ++i) lower.emplace_back(i);
  Series hyp = hypergeom_pFq({Rat(1)}, lower, Rat(factorial(s - 1)), trunc);
  return e == hyp;
}

}  // namespace ward
