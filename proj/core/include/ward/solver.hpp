#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ward/operators.hpp"

namespace ward {

// Right-hand sides G(y) for D_h^{(n)} y = G(y). Each variant carries a
// structural Lipschitz class; the problem constructor enforces
// compatibility with the equation order so the integrated map stays at
// least 1/2-contractive (no semantic probing).
struct PolynomialRhs {
  std::vector<Series> q;  // G(y) = sum_i q_i y^i; non-expansive
};
struct LinearDhRhs {
  Series q;               // G(y) = q + sum_i p_i D_h^{(i)} y;
  std::vector<Series> p;  // 2^{max i}-Lipschitz, so max i <= n-1
};
struct AffineIntegralRhs {
  Series f;  // G(y) = f(I_h)(y) + r; non-expansive
  Series r;
};
using RhsSpec = std::variant<PolynomialRhs, LinearDhRhs, AffineIntegralRhs>;

struct IVProblem {
  IVProblem(HSeries h, int n, RhsSpec rhs, std::vector<Rat> init);

  HSeries h;
  int n;                  // equation order, >= 1
  RhsSpec rhs;
  std::vector<Rat> init;  // D_h^{(k)} y (0) = init[k], k = 0..n-1
};

struct FixedPointResult {
  Series y;                      // solution through out_trunc
  int iterations;                // applications of the integrated map
  std::vector<Series> iterates;  // iterates[m] after m applications
};

// Iterates the integrated map
//   F(f) = sum_{j<n} init[j]/(h_j...h_1) x^j + I_h^{(n)}(G(f))
// from zero (or `start`, a test hook for probing uniqueness) until two
// consecutive iterates agree through out_trunc. Works internally at
// out_trunc + n, so h must determine that much.
FixedPointResult solve_ivp_fixed_point(const IVProblem& p, int out_trunc,
                                       const std::optional<Series>& start = {});

// Closed form for D_h y = T(y) + q, y(0) = y0, T non-expansive:
// y = sum_k (I_h T)^k (y0 + I_h q).
Series solve_affine(const HSeries& h, const SeriesOperator& t, const Series& q,
                    const Rat& y0, int out_trunc);

// Closed form for D_h y = f(I_h)(y) + r, y(0) = y0:
// y = (1/(1 - x f))(I_h) (y0 + I_h r).
Series solve_f_of_integral(const HSeries& h, const Series& f, const Series& r,
                           const Rat& y0, int out_trunc);

// Constant-coefficient problem D_h^{(n)} y = a_0 y + ... + a_{n-1} D_h^{(n-1)} y + q
// with characteristic polynomial C(x) = x^n - sum a_k x^k. The standing
// assumption a_0 != 0 keeps C(0) nonzero.
struct CharProblem {
  CharProblem(HSeries h, std::vector<Rat> a, Series q, std::vector<Rat> init);

  HSeries h;
  int n;
  std::vector<Rat> a;
  Series q;
  std::vector<Rat> init;
};

// The same problem as a first-order LinearDh system feed (test plumbing).
IVProblem char_as_ivp(const CharProblem& cp, int series_trunc);

// Iterated reduction to first order: r_0 = q,
// r_j = y_{n-j} - sum_{k=j}^{n-1} a_k y_{k-j} + I_h(r_{j-1}); returns r_{n-1}.
Series heaviside_reduce(const CharProblem& cp);

// Reciprocal-operator method: with C*(x) = 1 - x P*(x) the solution is
// y = (1/C*)(I_h)(y_0 + I_h(r)).
Series solve_heaviside(const CharProblem& cp, int out_trunc);

// Independent coefficient-by-coefficient triangular solve; shares no series
// machinery with the other solvers.
Series oracle_linear_solve(const CharProblem& cp, int out_trunc);

// C(x) coefficients, degree n, monic (index = exponent).
std::vector<Rat> char_poly(const CharProblem& cp);
// C*(x) = x^n C(1/x) = 1 - x P*(x) as an exact polynomial at `trunc`.
Series cstar_poly(const CharProblem& cp, int trunc);

struct PartialFractions {
  struct Root {
    Rat lambda;  // root of C (nonzero since a_0 != 0)
    int multiplicity;
  };
  std::vector<Root> roots;
  // A[l][k-1] for k = 1..multiplicity of root l, in the expansion
  // 1/C*(x) = (1/-a_0) sum_l sum_k A_{l,k} / (x - 1/lambda_l)^k.
  std::vector<std::vector<Rat>> A;
  // Exact polynomial identity sum A_{l,k} Q_{l,k} = 1 re-verified after the
  // linear solve.
  bool remainder_ok;
};

// Rational roots are searched automatically (rational root theorem with
// exact deflation); a hint list (with multiplicity) is validated instead
// when supplied. RootsDontFactor if C does not split over the rationals.
PartialFractions partial_fractions(const CharProblem& cp,
                                   const std::vector<Rat>& roots_hint = {});

// Root form of the solution:
// y = (1/a_0) sum_l sum_k (-1)^{k+1} lambda_l^k A_{l,k}
//        [1/(1-lambda_l x)^k](I_h)(y_0 + I_h(r)).
Series solve_via_roots(const CharProblem& cp, const PartialFractions& pf,
                       int out_trunc);

}  // namespace ward
