#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <optional>

#include "doctest.h"
#include "test_support.hpp"
#include "ward/catalog.hpp"
#include "ward/solver.hpp"

using namespace ward;
using testsupport::Rng;

namespace {

HSeries classical_h(int trunc) {
  return make_h(CatalogTag::pascal(2), trunc);
}

PolynomialRhs identity_rhs(int trunc) {
  // G(y) = y
  return PolynomialRhs{{Series::zero(trunc), Series::constant(Rat(1), trunc)}};
}

}  // namespace

TEST_CASE("problem construction is validated") {
  HSeries h = classical_h(8);
  CHECK_THROWS_AS(IVProblem(h, 0, identity_rhs(8), {}), InvalidParameter);
  CHECK_THROWS_AS(IVProblem(h, 2, identity_rhs(8), {Rat(1)}), InvalidParameter);
  // LinearDh derivative degree must stay below the equation order
  LinearDhRhs too_deep{Series::zero(8),
                       {Series::constant(Rat(1), 8), Series::constant(Rat(1), 8)}};
  CHECK_THROWS_AS(IVProblem(h, 1, too_deep, {Rat(1)}), InvalidParameter);
  CHECK_THROWS_AS(CharProblem(h, {}, Series::zero(8), {}), InvalidParameter);
  CHECK_THROWS_AS(CharProblem(h, {Rat(0), Rat(1)}, Series::zero(8), {Rat(1), Rat(1)}),
                  InvalidParameter);
}

TEST_CASE("the exponential equation y' = y") {
  IVProblem p(classical_h(12), 1, identity_rhs(12), {Rat(1)});
  FixedPointResult r = solve_ivp_fixed_point(p, 10);
  CHECK(r.y.trunc() == 10);
  for (int k = 0; k <= 10; ++k) CHECK(r.y.coeff(k) == Rat(1) / Rat(factorial(k)));
  CHECK(r.iterates.size() == static_cast<std::size_t>(r.iterations) + 1);
  CHECK(order(r.iterates[0]).above());  // default start is zero
}

TEST_CASE("generalized exponentials come out of the fixed point") {
  for (const char* tag : {"pascal:4", "q:2", "fibonomial", "polylog:2"}) {
    HSeries h = make_h(CatalogTag::parse(tag), 10);
    IVProblem p(h, 1, identity_rhs(10), {Rat(1)});
    Series y = solve_ivp_fixed_point(p, 9).y;
    CHECK(y == generalized_exp(h, 9));
  }
}

TEST_CASE("iterates converge in the ultrametric sense") {
  IVProblem p(classical_h(12), 1, identity_rhs(12), {Rat(1)});
  FixedPointResult r = solve_ivp_fixed_point(p, 8);
  // iterate m already determines coefficients 0..m-1
  for (std::size_t m = 1; m < r.iterates.size(); ++m) {
    int upto = std::min<int>(static_cast<int>(m) - 1, 8);
    CHECK(agree_to_common_trunc(r.iterates[m].truncated(upto),
                                r.y.truncated(upto)));
  }
}

TEST_CASE("the fixed point ignores where the iteration starts") {
  Rng rng(80);
  IVProblem p(classical_h(12), 1, identity_rhs(12), {Rat(1)});
  Series base = solve_ivp_fixed_point(p, 8).y;
  for (int trial = 0; trial < 5; ++trial) {
    Series start = rng.series(12);
    Series alt = solve_ivp_fixed_point(p, 8, start).y;
    CHECK(alt == base);
  }
}

TEST_CASE("nonlinear equation y' = y^2") {
  HSeries h = classical_h(12);
  PolynomialRhs sq{{Series::zero(12), Series::zero(12), Series::constant(Rat(1), 12)}};
  IVProblem p(h, 1, sq, {Rat(1)});
  Series y = solve_ivp_fixed_point(p, 10).y;
  // y = 1/(1-x)
  for (int k = 0; k <= 10; ++k) CHECK(y.coeff(k) == Rat(1));
}

TEST_CASE("second order equation with constant coefficients") {
  // y'' = 3y' - 2y, y(0) = 2, y'(0) = 3: coefficients (1 + 2^k)/k!
  HSeries h = classical_h(16);
  std::vector<Rat> a{Rat(-2), Rat(3)};
  std::vector<Rat> init{Rat(2), Rat(3)};
  CharProblem cp(h, a, Series::zero(16), init);

  Series via_heaviside = solve_heaviside(cp, 8);
  Series via_oracle = oracle_linear_solve(cp, 8);
  Series via_fixed_point = solve_ivp_fixed_point(char_as_ivp(cp, 16), 8).y;
  PartialFractions pf = partial_fractions(cp);
  Series via_roots = solve_via_roots(cp, pf, 8);

  for (int k = 0; k <= 8; ++k) {
    Rat expected = (Rat(1) + Rat(2).pow(k)) / Rat(factorial(k));
    CHECK(via_heaviside.coeff(k) == expected);
  }
  CHECK(via_oracle == via_heaviside);
  CHECK(via_fixed_point == via_heaviside);
  CHECK(via_roots == via_heaviside);
}

TEST_CASE("partial fractions of x^2 - 3x + 2") {
  HSeries h = classical_h(8);
  CharProblem cp(h, {Rat(-2), Rat(3)}, Series::zero(8), {Rat(2), Rat(3)});
  PartialFractions pf = partial_fractions(cp);
  REQUIRE(pf.roots.size() == 2);
  CHECK(pf.remainder_ok);
  // roots 1 and 2, each simple, with A = 2 and -2
  for (std::size_t l = 0; l < 2; ++l) {
    CHECK(pf.roots[l].multiplicity == 1);
    if (pf.roots[l].lambda == Rat(1)) CHECK(pf.A[l][0] == Rat(2));
    if (pf.roots[l].lambda == Rat(2)) CHECK(pf.A[l][0] == Rat(-2));
  }
  // 1/C* = sum (2^{k+1} - 1) x^k
  Series recip = mul_inverse(cstar_poly(cp, 8));
  for (int k = 0; k <= 8; ++k)
    CHECK(recip.coeff(k) == Rat(2).pow(k + 1) - Rat(1));
}

TEST_CASE("repeated root") {
  // y'' = 2y' - y, y(0) = 1, y'(0) = 1: y = e^x, C = (x-1)^2
  HSeries h = classical_h(14);
  CharProblem cp(h, {Rat(-1), Rat(2)}, Series::zero(14), {Rat(1), Rat(1)});
  PartialFractions pf = partial_fractions(cp);
  REQUIRE(pf.roots.size() == 1);
  CHECK(pf.roots[0].lambda == Rat(1));
  CHECK(pf.roots[0].multiplicity == 2);
  CHECK(pf.remainder_ok);
  // 1/(1-x)^2 = 0/(x-1) + 1/(x-1)^2
  CHECK(pf.A[0] == std::vector<Rat>{Rat(0), Rat(1)});
  Series y = solve_via_roots(cp, pf, 9);
  for (int k = 0; k <= 9; ++k) CHECK(y.coeff(k) == Rat(1) / Rat(factorial(k)));
  CHECK(y == solve_heaviside(cp, 9));
  CHECK(y == oracle_linear_solve(cp, 9));
}

TEST_CASE("root hints are validated") {
  HSeries h = classical_h(8);
  CharProblem cp(h, {Rat(-2), Rat(3)}, Series::zero(8), {Rat(2), Rat(3)});
  PartialFractions pf = partial_fractions(cp, {Rat(1), Rat(2)});
  CHECK(pf.remainder_ok);
  CHECK_THROWS_AS(partial_fractions(cp, {Rat(1), Rat(3)}), RootsDontFactor);
  CHECK_THROWS_AS(partial_fractions(cp, {Rat(1)}), RootsDontFactor);
}

TEST_CASE("irrational characteristic roots are refused") {
  HSeries h = classical_h(8);
  // C = x^2 - 2
  CharProblem cp(h, {Rat(2), Rat(0)}, Series::zero(8), {Rat(1), Rat(0)});
  CHECK_THROWS_AS(partial_fractions(cp), RootsDontFactor);
}

TEST_CASE("heaviside reduction satisfies its defining identity") {
  // For the reduced forcing r: D_h y = P*(I_h)(y) + r with
  // P*(x) = a_{n-1} + a_{n-2} x + ... + a_0 x^{n-1}.
  Rng rng(81);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + static_cast<int>(rng.integer(0, 2));
    HSeries h = rng.hseries(12);
    Series y = rng.series(12);
    // build the problem backwards from a chosen solution y
    std::vector<Series> dyk;  // D^k y
    dyk.push_back(y);
    for (int k = 1; k <= n; ++k) dyk.push_back(d_h(h)(dyk.back()));
    std::vector<Rat> a;
    for (int k = 0; k < n; ++k) a.push_back(rng.rat());
    if (a[0].is_zero()) a[0] = Rat(1);
    Series q = dyk[static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k)
      q = q - a[static_cast<std::size_t>(k)] * dyk[static_cast<std::size_t>(k)];
    std::vector<Rat> init;
    for (int k = 0; k < n; ++k)
      init.push_back(dyk[static_cast<std::size_t>(k)].coeff(0));
    CharProblem cp(h, a, q, init);

    Series r = heaviside_reduce(cp);
    std::vector<Rat> pstar_c;
    for (int k = n - 1; k >= 0; --k) pstar_c.push_back(a[static_cast<std::size_t>(k)]);
    Series pstar = Series(pstar_c).padded_as_polynomial(r.trunc());
    Series lhs = d_h(h)(y);
    Series rhs = op_series_apply(pstar, i_h(h), y) + r;
    CHECK(agree_to_common_trunc(lhs, rhs));
  }
}

TEST_CASE("all linear solvers agree on random problems") {
  Rng rng(82);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng.integer(0, 3));
    int out = 6;
    HSeries h = rng.hseries(out + 2 * n + 2);
    std::vector<Rat> a;
    for (int k = 0; k < n; ++k) a.push_back(rng.rat());
    if (a[0].is_zero()) a[0] = Rat(1, 2);
    std::vector<Rat> init;
    for (int k = 0; k < n; ++k) init.push_back(rng.rat());
    Series q = rng.series(out + 2 * n + 2);
    CharProblem cp(h, a, q, init);

    Series hv = solve_heaviside(cp, out);
    Series oracle = oracle_linear_solve(cp, out);
    Series fp = solve_ivp_fixed_point(char_as_ivp(cp, out + 2 * n + 2), out).y;
    CHECK(hv == oracle);
    CHECK(fp == oracle);
  }
}

TEST_CASE("roots method agrees whenever the characteristic factors") {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    // build C from chosen rational roots so it always factors
    int n = 1 + static_cast<int>(rng.integer(0, 2));
    std::vector<Rat> lambdas;
    for (int k = 0; k < n; ++k) lambdas.push_back(rng.nonzero_rat());
    // C(x) = prod (x - lambda_k) expanded: coefficients c_0..c_n, monic
    std::vector<Rat> c{Rat(1)};
    for (const Rat& lam : lambdas) {
      std::vector<Rat> next(c.size() + 1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] = next[i + 1] + c[i];
        next[i] = next[i] - lam * c[i];
      }
      c = std::move(next);
    }
    // a_k = -c_k for k < n
    std::vector<Rat> a;
    for (std::size_t k = 0; k < c.size() - 1; ++k) a.push_back(-c[k]);
    if (a[0].is_zero()) continue;  // a root at zero slipped in: not admissible

    int out = 6;
    HSeries h = rng.hseries(out + 2 * n + 2);
    std::vector<Rat> init;
    for (int k = 0; k < n; ++k) init.push_back(rng.rat());
    Series q = rng.series(out + 2 * n + 2);
    CharProblem cp(h, a, q, init);

    PartialFractions pf = partial_fractions(cp);
    CHECK(pf.remainder_ok);
    int mult_total = 0;
    for (const auto& root : pf.roots) mult_total += root.multiplicity;
    CHECK(mult_total == n);
    CHECK(solve_via_roots(cp, pf, out) == oracle_linear_solve(cp, out));
  }
}

TEST_CASE("affine closed forms") {
  HSeries h = classical_h(12);
  // y' = c y via solve_affine with T = c * identity
  Rat c(3, 2);
  Series y = solve_affine(h, scale_op(c, identity_op()), Series::zero(12),
                          Rat(1), 9);
  for (int k = 0; k <= 9; ++k) CHECK(y.coeff(k) == c.pow(k) / Rat(factorial(k)));

  // matches the fixed point on the same problem
  PolynomialRhs rhs{{Series::zero(12), Series::constant(c, 12)}};
  IVProblem p(h, 1, rhs, {Rat(1)});
  CHECK(y == solve_ivp_fixed_point(p, 9).y);

  // an expansive operator is rejected
  CHECK_THROWS_AS(solve_affine(h, d_h(h), Series::zero(12), Rat(1), 5),
                  NotNonExpansive);
}

TEST_CASE("f-of-integral closed form matches the fixed point") {
  Rng rng(84);
  for (int trial = 0; trial < 10; ++trial) {
    HSeries h = rng.hseries(12);
    Series f = rng.series(12), r = rng.series(12);
    Rat y0 = rng.rat();
    Series closed = solve_f_of_integral(h, f, r, y0, 8);
    AffineIntegralRhs rhs{f, r};
    IVProblem p(h, 1, rhs, {y0});
    Series fp = solve_ivp_fixed_point(p, 8).y;
    CHECK(closed == fp);
  }
}

TEST_CASE("oracle refuses windows it cannot fill") {
  HSeries h = classical_h(4);
  CharProblem cp(h, {Rat(1)}, Series::zero(10), {Rat(1)});
  CHECK_THROWS_AS(oracle_linear_solve(cp, 6), PrecisionExhausted);
  CharProblem cp2(classical_h(10), {Rat(1)}, Series::zero(2), {Rat(1)});
  CHECK_THROWS_AS(oracle_linear_solve(cp2, 6), PrecisionExhausted);
}
