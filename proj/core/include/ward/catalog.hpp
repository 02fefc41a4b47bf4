#pragma once

#include <string>
#include <vector>

#include "ward/operators.hpp"

namespace ward {

// Named h-families with exact closed forms. Custom marks an h supplied as
// raw coefficients (e.g. loaded from a file): no finiteness certification
// is possible for it.
struct CatalogTag {
  enum class Family { Pascal, Polylog, Fibonomial, QCalc, Custom };

  Family family = Family::Custom;
  int param = 0;  // Pascal column s >= 1, or polylog exponent alpha >= 0
  Rat q;          // QCalc base, q != 1

  static CatalogTag pascal(int s) { return {Family::Pascal, s, Rat(0)}; }
  static CatalogTag polylog(int alpha) { return {Family::Polylog, alpha, Rat(0)}; }
  static CatalogTag fibonomial() { return {Family::Fibonomial, 0, Rat(0)}; }
  static CatalogTag qcalc(const Rat& q) { return {Family::QCalc, 0, q}; }
  static CatalogTag custom() { return {Family::Custom, 0, Rat(0)}; }

  // "pascal:4", "polylog:2", "fibonomial", "q:3/2". Throws ParseError.
  static CatalogTag parse(const std::string& text);
  std::string str() const;
};

// Exact h coefficients for a family at the given truncation.
//   Pascal s:    h_n = [x^n] x/(1-x)^s  (= C(n+s-2, s-1))
//   Polylog a:   h_n = n^a
//   Fibonomial:  h_n = F_n
//   QCalc q:     h_n = 1 + q + ... + q^{n-1}
HSeries make_h(const CatalogTag& tag, int trunc);

// q-integer [n]_q as a rational (geometric sum, so q = 1 is just n).
Rat q_integer(const Rat& q, int n);
mpz_class fibonacci(int n);
// Stirling subset numbers, recurrence route and the alternating binomial
// sum route; the two must agree and tests pin that.
mpz_class stirling2(int n, int k);
mpz_class stirling2_alternating(int n, int k);
mpz_class eulerian(int n, int k);

// Checks that the Eulerian rational form
//   (1/(1-x)^{a+1}) sum_i E(a,i) x^{a-i}
// expands to sum_{k>=1} k^a x^k. Coefficients are compared from index 1:
// the h-family has no constant term, while the a = 0 rational form carries
// a constant 1 (the k = 0 term of the full geometric identity).
bool polylog_closed_form_check(int alpha, int trunc);

// Generalized exponential: coefficient 1/(h_k ... h_1). Needs trunc <=
// h.trunc(); the fixed-point solver reproduces it from D_h y = y, y(0)=1.
Series generalized_exp(const HSeries& h, int trunc);

// pFq(upper; lower; scale * x) with exact Pochhammer ratios. A lower
// parameter hitting a zero factor within the window raises PochhammerPole.
Series hypergeom_pFq(const std::vector<Rat>& upper,
                     const std::vector<Rat>& lower, const Rat& scale,
                     int trunc);

// e_h for the Pascal column family equals
//   1F(s-1)(1; 1, 2, ..., s-1; (s-1)! x).
bool exp_equals_hypergeom_check(int s, int trunc);

}  // namespace ward
