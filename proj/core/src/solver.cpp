#include "ward/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ward {

namespace {

// Affine prefix of the integrated map: sum_{j<n} init[j]/(h_j...h_1) x^j.
Series initial_polynomial(const HSeries& h, const std::vector<Rat>& init,
                          int trunc) {
  std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
  for (std::size_t j = 0; j < init.size(); ++j)
    v[j] = init[j] / h.falling_product(static_cast<int>(j));
  return Series(std::move(v));
}

Series eval_rhs(const RhsSpec& rhs, const HSeries& h, const Series& f) {
  if (const auto* poly = std::get_if<PolynomialRhs>(&rhs)) {
    if (poly->q.empty()) return Series::zero(f.trunc());
    Series acc = poly->q[0];
    Series fp = Series::constant(Rat(1), f.trunc());
    for (std::size_t i = 1; i < poly->q.size(); ++i) {
      fp = fp * f;
      acc = acc + poly->q[i] * fp;
    }
    return acc;
  }
  if (const auto* lin = std::get_if<LinearDhRhs>(&rhs)) {
    SeriesOperator D = d_h(h);
    Series acc = lin->q;
    Series deriv = f;
    for (std::size_t i = 0; i < lin->p.size(); ++i) {
      if (i > 0) deriv = D(deriv);
      acc = acc + lin->p[i] * deriv;
    }
    return acc;
  }
  const auto& aff = std::get<AffineIntegralRhs>(rhs);
  return op_series_apply(aff.f, i_h(h), f) + aff.r;
}

// y0 + I_h(r), the affine seed shared by the first-order closed forms.
Series integrated_base(const HSeries& h, const Rat& y0, const Series& r) {
  Series ir = i_h(h)(r);
  return Series::constant(y0, ir.trunc()) + ir;
}

}  // namespace

IVProblem::IVProblem(HSeries h_, int n_, RhsSpec rhs_, std::vector<Rat> init_)
    : h(std::move(h_)), n(n_), rhs(std::move(rhs_)), init(std::move(init_)) {
  if (n < 1) throw InvalidParameter("equation order must be >= 1");
  if (static_cast<int>(init.size()) != n)
    throw InvalidParameter("need exactly n initial values");
  if (const auto* lin = std::get_if<LinearDhRhs>(&rhs)) {
    // G is 2^{max i}-Lipschitz; after n integrations the map contracts only
    // if every derivative order stays below n.
    if (static_cast<int>(lin->p.size()) > n)
      throw InvalidParameter(
          "derivative order on the right-hand side must stay below n");
  }
}

FixedPointResult solve_ivp_fixed_point(const IVProblem& p, int out_trunc,
                                       const std::optional<Series>& start) {
  if (out_trunc < 0) throw InvalidParameter("out_trunc must be >= 0");
  int w = out_trunc + p.n;  // derivatives inside G eat up to n places
  if (p.h.trunc() < w)
    throw PrecisionExhausted("h determines " + std::to_string(p.h.trunc()) +
                             " coefficients, need " + std::to_string(w));
  Series affine = initial_polynomial(p.h, p.init, w);
  SeriesOperator I = i_h(p.h);

  auto F = [&](const Series& f) {
    Series g = eval_rhs(p.rhs, p.h, f);
    for (int i = 0; i < p.n; ++i) g = I(g);
    // g carries a structural order certificate: n integrations zero out
    // coefficients below n no matter what f was.
    return add_term_with_min_order(affine, g, p.n);
  };

  Series y = start ? *start : Series::zero(w);
  if (y.trunc() < w)
    throw InvalidParameter("start guess must carry trunc >= out_trunc + n");
  FixedPointResult res{y, 0, {y}};
  // Each application gains at least one agreeing order, so out_trunc + 3
  // rounds settle from any start; running past that is a bug, not slowness.
  for (int m = 1; m <= out_trunc + 3; ++m) {
    Series next = F(y);
    if (next.trunc() < out_trunc)
      throw PrecisionExhausted(
          "right-hand side series too short for the requested trunc");
    res.iterates.push_back(next);
    res.iterations = m;
    bool settled = agree_to_common_trunc(next.truncated(out_trunc),
                                         y.truncated(out_trunc));
    y = next;
    if (settled) {
      res.y = y.truncated(out_trunc);
      return res;
    }
  }
  throw std::logic_error("fixed-point iteration failed to settle");
}

Series solve_affine(const HSeries& h, const SeriesOperator& t, const Series& q,
                    const Rat& y0, int out_trunc) {
  if (t.order_shift < 0)
    throw NotNonExpansive("affine solve needs a non-expansive operator");
  SeriesOperator I = i_h(h);
  Series base = integrated_base(h, y0, q);
  Series acc = base;
  Series term = base;
  for (int k = 1; k <= out_trunc; ++k) {
    if (k > acc.trunc()) break;  // further terms sit above the known window
    term = I(t(term));
    acc = add_term_with_min_order(acc, term, k);
  }
  if (acc.trunc() < out_trunc)
    throw PrecisionExhausted("inputs too short for the requested trunc");
  return acc.truncated(out_trunc);
}

Series solve_f_of_integral(const HSeries& h, const Series& f, const Series& r,
                           const Rat& y0, int out_trunc) {
  SeriesOperator I = i_h(h);
  Series base = integrated_base(h, y0, r);
  // x f has order >= 1, so 1 - x f is invertible and one coefficient longer
  // than f itself.
  Series xf = Series::monomial(1, f.trunc() + 1) * f;
  Series denom = Series::constant(Rat(1), xf.trunc()) - xf;
  Series y = op_series_apply(mul_inverse(denom), I, base);
  if (y.trunc() < out_trunc)
    throw PrecisionExhausted("inputs too short for the requested trunc");
  return y.truncated(out_trunc);
}

CharProblem::CharProblem(HSeries h_, std::vector<Rat> a_, Series q_,
                         std::vector<Rat> init_)
    : h(std::move(h_)),
      n(static_cast<int>(a_.size())),
      a(std::move(a_)),
      q(std::move(q_)),
      init(std::move(init_)) {
  if (n < 1) throw InvalidParameter("need at least one coefficient a_0");
  if (a[0].is_zero())
    throw InvalidParameter("a_0 must be nonzero so C(0) != 0");
  if (static_cast<int>(init.size()) != n)
    throw InvalidParameter("need exactly n initial values");
}

IVProblem char_as_ivp(const CharProblem& cp, int series_trunc) {
  std::vector<Series> p;
  p.reserve(cp.a.size());
  for (const Rat& ak : cp.a) p.push_back(Series::constant(ak, series_trunc));
  Series q = cp.q.trunc() > series_trunc ? cp.q.truncated(series_trunc) : cp.q;
  return IVProblem(cp.h, cp.n, LinearDhRhs{std::move(q), std::move(p)},
                   cp.init);
}

Series heaviside_reduce(const CharProblem& cp) {
  Series r = cp.q;
  SeriesOperator I = i_h(cp.h);
  for (int j = 1; j <= cp.n - 1; ++j) {
    Rat c = cp.init[static_cast<std::size_t>(cp.n - j)];
    for (int k = j; k <= cp.n - 1; ++k)
      c -= cp.a[static_cast<std::size_t>(k)] *
           cp.init[static_cast<std::size_t>(k - j)];
    Series ir = I(r);
    r = Series::constant(c, ir.trunc()) + ir;
  }
  return r;
}

std::vector<Rat> char_poly(const CharProblem& cp) {
  std::vector<Rat> c(static_cast<std::size_t>(cp.n) + 1);
  c[static_cast<std::size_t>(cp.n)] = Rat(1);
  for (int k = 0; k < cp.n; ++k)
    c[static_cast<std::size_t>(k)] = -cp.a[static_cast<std::size_t>(k)];
  return c;
}

Series cstar_poly(const CharProblem& cp, int trunc) {
  if (trunc < cp.n)
    throw InvalidParameter("cstar needs trunc >= n to hold the polynomial");
  std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
  v[0] = Rat(1);
  // C*(x) = 1 - x P*(x) with P*(x) = sum_k a_{n-1-k} x^k.
  for (int k = 0; k < cp.n; ++k)
    v[static_cast<std::size_t>(k + 1)] =
        -cp.a[static_cast<std::size_t>(cp.n - 1 - k)];
  return Series(std::move(v));
}

Series solve_heaviside(const CharProblem& cp, int out_trunc) {
  if (out_trunc < 0) throw InvalidParameter("out_trunc must be >= 0");
  Series r = heaviside_reduce(cp);
  SeriesOperator I = i_h(cp.h);
  Series base = integrated_base(cp.h, cp.init[0], r);
  Series inv_cstar = mul_inverse(cstar_poly(cp, std::max(out_trunc, cp.n)));
  Series y = op_series_apply(inv_cstar, I, base);
  if (y.trunc() < out_trunc)
    throw PrecisionExhausted("inputs too short for the requested trunc");
  return y.truncated(out_trunc);
}

Series oracle_linear_solve(const CharProblem& cp, int out_trunc) {
  if (out_trunc < 0) throw InvalidParameter("out_trunc must be >= 0");
  if (cp.h.trunc() < out_trunc)
    throw PrecisionExhausted("h too short for the requested trunc");
  if (cp.q.trunc() < out_trunc - cp.n)
    throw PrecisionExhausted("q too short for the requested trunc");
  // Prefix products of h turn any window product h_{m+1}...h_{m+k} into a
  // quotient of two of them.
  std::vector<Rat> pre(static_cast<std::size_t>(cp.h.trunc()) + 1);
  pre[0] = Rat(1);
  for (int i = 1; i <= cp.h.trunc(); ++i)
    pre[static_cast<std::size_t>(i)] =
        pre[static_cast<std::size_t>(i - 1)] * cp.h.at(i);
  auto window = [&](int from_exclusive, int to_inclusive) {
    return pre[static_cast<std::size_t>(to_inclusive)] /
           pre[static_cast<std::size_t>(from_exclusive)];
  };

  std::vector<Rat> c(static_cast<std::size_t>(out_trunc) + 1);
  for (int j = 0; j < std::min(cp.n, out_trunc + 1); ++j)
    c[static_cast<std::size_t>(j)] =
        cp.init[static_cast<std::size_t>(j)] / pre[static_cast<std::size_t>(j)];
  for (int j = cp.n; j <= out_trunc; ++j) {
    int m = j - cp.n;
    // x^m coefficient of D^{(n)} y = sum_k a_k D^{(k)} y + q, using
    // (D^{(k)} y)_m = (h_{m+k}...h_{m+1}) y_{m+k}.
    Rat rhs = cp.q.coeff(m);
    for (int k = 0; k < cp.n; ++k)
      rhs += cp.a[static_cast<std::size_t>(k)] * window(m, m + k) *
             c[static_cast<std::size_t>(m + k)];
    c[static_cast<std::size_t>(j)] = rhs / window(m, m + cp.n);
  }
  return Series(std::move(c));
}

namespace {

// Exact polynomial helpers on raw coefficient vectors (index = exponent).
std::vector<Rat> poly_mul(const std::vector<Rat>& a,
                          const std::vector<Rat>& b) {
  std::vector<Rat> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
  Rat acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Quotient of p by (x - root); callers divide only after checking
// p(root) = 0, which makes the synthetic-division remainder vanish.
std::vector<Rat> poly_deflate(const std::vector<Rat>& p, const Rat& root) {
  std::vector<Rat> q(p.size() - 1);
  Rat carry;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + root * carry;
    q[i - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  mpz_class a = abs(n);
  std::vector<mpz_class> low, high;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      low.push_back(d);
      if (d * d != a) high.push_back(mpz_class(a / d));
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace

PartialFractions partial_fractions(const CharProblem& cp,
                                   const std::vector<Rat>& roots_hint) {
  std::vector<Rat> C = char_poly(cp);
  std::vector<Rat> found;

  if (!roots_hint.empty()) {
    if (static_cast<int>(roots_hint.size()) != cp.n)
      throw RootsDontFactor("hint must list n roots with multiplicity");
    std::vector<Rat> rest = C;
    for (const Rat& root : roots_hint) {
      if (!poly_eval(rest, root).is_zero())
        throw RootsDontFactor("hinted root " + root.str() +
                              " does not divide the characteristic polynomial");
      rest = poly_deflate(rest, root);
      found.push_back(root);
    }
  } else {
    // Rational root search on L*C (integer coefficients): candidates p/q
    // with p dividing the constant term and q the leading one. Roots of any
    // deflated quotient are roots of C, so one candidate sweep with greedy
    // deflation finds every root with multiplicity.
    mpz_class lcm(1);
    for (const Rat& c : C)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    const mpz_class constant_term(C.front().num() * (lcm / C.front().den()));
    const mpz_class leading_term(C.back().num() * (lcm / C.back().den()));
    std::vector<Rat> rest = C;
    for (const mpz_class& p : positive_divisors(constant_term)) {
      for (const mpz_class& q : positive_divisors(leading_term)) {
        for (int sign = 0; sign < 2; ++sign) {
          Rat cand = sign == 0 ? Rat(p, q) : Rat(mpz_class(-p), q);
          while (rest.size() > 1 && poly_eval(rest, cand).is_zero()) {
            rest = poly_deflate(rest, cand);
            found.push_back(cand);
          }
        }
      }
    }
    if (rest.size() > 1)
      throw RootsDontFactor(
          "characteristic polynomial does not split over the rationals");
  }

  PartialFractions pf;
  pf.remainder_ok = false;
  for (const Rat& root : found) {
    auto it = std::find_if(pf.roots.begin(), pf.roots.end(),
                           [&](const auto& r) { return r.lambda == root; });
    if (it == pf.roots.end())
      pf.roots.push_back({root, 1});
    else
      ++it->multiplicity;
  }

  // A_{l,k} from the polynomial identity sum_{l,k} A_{l,k} Q_{l,k} = 1 with
  // Q_{l,k} = prod_{j!=l} (x - mu_j)^{n_j} * (x - mu_l)^{n_l - k} and
  // mu = 1/lambda: n unknowns against n coefficient equations.
  int n = cp.n;
  std::vector<std::vector<Rat>> qpolys;
  for (std::size_t l = 0; l < pf.roots.size(); ++l) {
    for (int k = 1; k <= pf.roots[l].multiplicity; ++k) {
      std::vector<Rat> qp{Rat(1)};
      for (std::size_t j = 0; j < pf.roots.size(); ++j) {
        Rat muj = Rat(1) / pf.roots[j].lambda;
        int e =
            j == l ? pf.roots[j].multiplicity - k : pf.roots[j].multiplicity;
        for (int rep = 0; rep < e; ++rep) qp = poly_mul(qp, {-muj, Rat(1)});
      }
      qpolys.push_back(std::move(qp));
    }
  }

  std::vector<std::vector<Rat>> M(
      static_cast<std::size_t>(n),
      std::vector<Rat>(static_cast<std::size_t>(n) + 1));
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row)
      M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          row < static_cast<int>(qpolys[static_cast<std::size_t>(col)].size())
              ? qpolys[static_cast<std::size_t>(col)]
                      [static_cast<std::size_t>(row)]
              : Rat(0);
  M[0][static_cast<std::size_t>(n)] = Rat(1);

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]
               .is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw std::logic_error("partial fraction system is singular");
    std::swap(M[static_cast<std::size_t>(col)],
              M[static_cast<std::size_t>(pivot)]);
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      if (M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]
              .is_zero())
        continue;
      Rat factor =
          M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
          M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int c2 = col; c2 <= n; ++c2)
        M[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] -=
            factor *
            M[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
    }
  }
  std::vector<Rat> sol(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    sol[static_cast<std::size_t>(i)] =
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] /
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];

  std::size_t idx = 0;
  for (const auto& root : pf.roots) {
    std::vector<Rat> as;
    as.reserve(static_cast<std::size_t>(root.multiplicity));
    for (int k = 1; k <= root.multiplicity; ++k) as.push_back(sol[idx++]);
    pf.A.push_back(std::move(as));
  }

  // Certify the whole table by exact polynomial arithmetic, independent of
  // the elimination: the A's must assemble to the constant 1, and the roots
  // (as mu = 1/lambda, scaled by -a_0) must reconstruct C*.
  std::vector<Rat> assembled(static_cast<std::size_t>(n), Rat(0));
  idx = 0;
  for (std::size_t l = 0; l < pf.roots.size(); ++l)
    for (int k = 1; k <= pf.roots[l].multiplicity; ++k, ++idx)
      for (std::size_t i = 0; i < qpolys[idx].size(); ++i)
        assembled[i] += sol[idx] * qpolys[idx][i];
  bool sums_to_one = assembled[0] == Rat(1) &&
                     std::all_of(assembled.begin() + 1, assembled.end(),
                                 [](const Rat& c) { return c.is_zero(); });

  std::vector<Rat> rebuilt{-cp.a[0]};
  for (const auto& root : pf.roots) {
    Rat mu = Rat(1) / root.lambda;
    for (int rep = 0; rep < root.multiplicity; ++rep)
      rebuilt = poly_mul(rebuilt, {-mu, Rat(1)});
  }
  Series cstar = cstar_poly(cp, n);
  bool rebuilds_cstar = static_cast<int>(rebuilt.size()) == n + 1;
  for (int i = 0; rebuilds_cstar && i <= n; ++i)
    rebuilds_cstar = rebuilt[static_cast<std::size_t>(i)] == cstar.coeff(i);

  pf.remainder_ok = sums_to_one && rebuilds_cstar;
  return pf;
}

Series solve_via_roots(const CharProblem& cp, const PartialFractions& pf,
                       int out_trunc) {
  if (out_trunc < 0) throw InvalidParameter("out_trunc must be >= 0");
  Series r = heaviside_reduce(cp);
  SeriesOperator I = i_h(cp.h);
  Series base = integrated_base(cp.h, cp.init[0], r);

  int kernel_trunc = std::max(out_trunc, 1);
  std::optional<Series> acc;
  for (std::size_t l = 0; l < pf.roots.size(); ++l) {
    const Rat& lambda = pf.roots[l].lambda;
    for (int k = 1; k <= pf.roots[l].multiplicity; ++k) {
      // Geometric kernel 1/(1 - lambda x)^k evaluated at I_h.
      Series lin = Series::constant(Rat(1), kernel_trunc) -
                   Series::monomial(1, kernel_trunc, lambda);
      Series kernel = mul_inverse(pow(lin, k));
      Rat coef =
          pf.A[l][static_cast<std::size_t>(k - 1)] * lambda.pow(k) / cp.a[0];
      if (k % 2 == 0) coef = -coef;  // (-1)^{k+1}
      Series term = coef * op_series_apply(kernel, I, base);
      acc = acc ? *acc + term : term;
    }
  }
  if (!acc) throw InvalidParameter("empty partial fraction table");
  if (acc->trunc() < out_trunc)
    throw PrecisionExhausted("inputs too short for the requested trunc");
  return acc->truncated(out_trunc);
}

}  // namespace ward
