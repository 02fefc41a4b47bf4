#include "ward/sheffer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ward/riordan.hpp"

namespace ward {

namespace {

// Classical derivative, kept local so the reconstruction does not route
// through d_h (the two sides of the identity must stay independent).
Series classical_derivative(const Series& y) {
  int t = y.trunc() - 1;
  if (t < 0)
    throw PrecisionExhausted("derivative needs a known positive-degree coefficient");
  std::vector<Rat> v;
  v.reserve(static_cast<std::size_t>(t) + 1);
  for (int k = 0; k <= t; ++k) v.push_back(Rat(k + 1) * y.coeff(k + 1));
  return Series(std::move(v));
}

// Shift-down: the 0-Jackson derivative of y.
Series shift_derivative(const Series& y) {
  int t = y.trunc() - 1;
  if (t < 0)
    throw PrecisionExhausted("derivative needs a known positive-degree coefficient");
  return Series(std::vector<Rat>(y.coeffs().begin() + 1, y.coeffs().end()));
}

}  // namespace

ShefferExpansion sheffer_coeffs(const HSeries& h) {
  int t = h.trunc();
  ShefferExpansion e;
  e.c.assign(static_cast<std::size_t>(t) + 1, Rat(0));
  for (int k = 1; k <= t; ++k) {
    Rat sum(0);
    for (int j = 1; j <= k; ++j) {  // the j = 0 term carries h_0 = 0
      Rat term = Rat(binomial(k, j)) * h.at(j);
      sum += ((k + j) % 2 == 0) ? term : -term;
    }
    e.c[static_cast<std::size_t>(k)] = sum / Rat(factorial(k));
  }
  if (t >= 1) {
    // Independent route: a = inverse-Pascal action on h, a_k = k! c_k.
    Series a = riordan_apply(riordan_inverse(pascal_pair(t + 1)), h.series());
    for (int k = 1; k <= std::min(t, a.trunc()); ++k)
      if (a.coeff(k) != Rat(factorial(k)) * e.c[static_cast<std::size_t>(k)])
        throw std::logic_error("sheffer coefficient routes disagree at k = " +
                               std::to_string(k));
  }
  return e;
}

Series reconstruct_apply(const ShefferExpansion& e, const Series& y) {
  int kmax = std::min(e.max_k(), y.trunc());
  int t = std::min(y.trunc(), e.max_k()) - 1;
  if (t < 0 || kmax < 1)
    throw PrecisionExhausted("reconstruction needs trunc >= 1 on both sides");
  Series acc = Series::zero(y.trunc() - 1);
  Series deriv = y;
  for (int k = 1; k <= kmax; ++k) {
    deriv = classical_derivative(deriv);  // y^{(k)}, trunc y.trunc() - k
    if (!e.c[static_cast<std::size_t>(k)].is_zero()) {
      Series term = Series::monomial(k - 1, y.trunc(),
                                     e.c[static_cast<std::size_t>(k)]) *
                    deriv;
      acc = add_term_with_min_order(acc, term, k - 1);
    }
  }
  return acc.trunc() > t ? acc.truncated(t) : acc;
}

Classification classify_calculus(const HSeries& h,
                                 const std::optional<CatalogTag>& tag) {
  ShefferExpansion e = sheffer_coeffs(h);
  int t = e.max_k();
  int last_nonzero = 0;
  for (int k = 1; k <= t; ++k)
    if (!e.c[static_cast<std::size_t>(k)].is_zero()) last_nonzero = k;

  auto observable_degree_at_most = [&](int m) {
    for (int k = m + 1; k <= t; ++k)
      if (!e.c[static_cast<std::size_t>(k)].is_zero()) return false;
    return true;
  };
  auto certified_infinite = [&]() -> Classification {
    // The closed forms give c_k != 0 for every k; insist the window agrees
    // so a mislabeled h cannot borrow the certificate.
    for (int k = 1; k <= t; ++k)
      if (e.c[static_cast<std::size_t>(k)].is_zero())
        throw InvalidParameter("tag does not match the supplied h");
    return {CalculusVerdict::InfiniteCertified, std::nullopt};
  };

  if (tag && tag->family != CatalogTag::Family::Custom) {
    switch (tag->family) {
      case CatalogTag::Family::Pascal: {
        int s = tag->param;
        if (s == 1) return certified_infinite();
        if (!observable_degree_at_most(s - 1))
          throw InvalidParameter("tag does not match the supplied h");
        return {CalculusVerdict::FiniteDegree, s - 1};
      }
      case CatalogTag::Family::Polylog: {
        int alpha = tag->param;
        if (alpha == 0) return certified_infinite();
        if (!observable_degree_at_most(alpha))
          throw InvalidParameter("tag does not match the supplied h");
        return {CalculusVerdict::FiniteDegree, alpha};
      }
      case CatalogTag::Family::Fibonomial:
      case CatalogTag::Family::QCalc:
        // c_k = (-1)^{k+1} F_k / k! resp. (q-1)^{k-1}/k!: never zero.
        return certified_infinite();
      case CatalogTag::Family::Custom:
        break;
    }
  }
  if (last_nonzero < t)
    return {CalculusVerdict::FiniteUpToTrunc, last_nonzero};
  return {CalculusVerdict::UnknownBeyondTrunc, std::nullopt};
}

HSeries h_from_a(const Series& a, int out_trunc) {
  if (out_trunc < 1) throw InvalidParameter("h_from_a wants out_trunc >= 1");
  if (!a.coeff(0).is_zero())
    throw InvalidParameter("sheffer polynomial wants a_0 = 0");
  int deg = 0;
  for (int k = 1; k <= a.trunc(); ++k)
    if (!a.coeff(k).is_zero()) deg = k;
  if (deg == 0)
    throw InvalidParameter("sheffer polynomial must be nonzero");

  // Primary route: Pascal action on the exact polynomial a.
  Series h =
      riordan_apply(pascal_pair(out_trunc), a.padded_as_polynomial(
                                                std::max(a.trunc(), out_trunc)));
  std::vector<Rat> v(static_cast<std::size_t>(out_trunc) + 1);
  for (int n = 1; n <= out_trunc; ++n) {
    // Validation route: h_n = sum_k C(n,k) a_k, which doubles as the
    // nonvanishing test for the candidate h.
    Rat sum(0);
    for (int k = 1; k <= std::min(n, deg); ++k)
      sum += Rat(binomial(n, k)) * a.coeff(k);
    if (n <= h.trunc() && sum != h.coeff(n))
      throw std::logic_error("pascal action and binomial sums disagree at n = " +
                             std::to_string(n));
    if (sum.is_zero())
      throw InvalidH(n, "binomial transform of a vanishes at n = " +
                            std::to_string(n));
    v[static_cast<std::size_t>(n)] = sum;
  }
  return HSeries(Series(std::move(v)));
}

bool pascal_column_expansion_check(int s, const Series& y) {
  if (s < 2) throw InvalidParameter("column expansion check wants s >= 2");
  if (y.trunc() < 1) return true;  // nothing checkable

  // Binomial-weighted classical form.
  Series r1 = Series::zero(y.trunc() - 1);
  {
    Series deriv = y;
    for (int k = 1; k <= std::min(s - 1, y.trunc()); ++k) {
      deriv = classical_derivative(deriv);
      Rat c = Rat(binomial(s - 2, k - 1)) / Rat(factorial(k));
      Series term = Series::monomial(k - 1, y.trunc(), c) * deriv;
      r1 = add_term_with_min_order(r1, term, k - 1);
    }
    if (r1.trunc() > y.trunc() - 1) r1 = r1.truncated(y.trunc() - 1);
  }

  // Shift-based form around the 0-Jackson derivative.
  Series r2 = Series::zero(y.trunc() - 1);
  {
    Series base = shift_derivative(y);  // (D_0 y), trunc y.trunc() - 1
    Series deriv = base;
    for (int k = 0; k <= s - 1; ++k) {
      if (k > 0) {
        if (deriv.trunc() == 0) break;  // higher terms start beyond the window
        deriv = classical_derivative(deriv);
      }
      Rat c = Rat(binomial(s - 1, k)) / Rat(factorial(k));
      Series term = Series::monomial(k, y.trunc(), c) * deriv;
      r2 = add_term_with_min_order(r2, term, k);
    }
    if (r2.trunc() > y.trunc() - 1) r2 = r2.truncated(y.trunc() - 1);
  }

  // The operator itself.
  Series r3 = d_h(make_h(CatalogTag::pascal(s), y.trunc()))(y);

  return agree_to_common_trunc(r1, r2) && agree_to_common_trunc(r2, r3) &&
         agree_to_common_trunc(r1, r3);
}

}  // namespace ward
