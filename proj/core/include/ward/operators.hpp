#pragma once

#include <functional>

#include "ward/series.hpp"

namespace ward {

// Coefficient sequence h defining a Ward derivative pair: h_0 = 0 and
// h_n != 0 for every known positive index. The base series' truncation
// bounds how far any derived operator can see.
class HSeries {
public:
  explicit HSeries(Series base);

  int trunc() const { return base_.trunc(); }
  // h_k for 1 <= k <= trunc().
  const Rat& at(int k) const;
  const Series& series() const { return base_; }

  // h_k h_{k-1} ... h_1 (empty product 1 for k = 0); k <= trunc().
  Rat falling_product(int k) const;

private:
  Series base_;
};

// The h-sequence of x/(1-x): h_n = 1, whose derivative is the plain
// coefficient shift (the 0-Jackson derivative).
HSeries jackson_zero_h(int trunc);

// A series map together with a certified structural bound:
// order(action(s)) >= order(s) + order_shift for every s. The bound is part
// of the contract, never probed semantically.
struct SeriesOperator {
  std::function<Series(const Series&)> action;
  int order_shift;

  Series operator()(const Series& s) const { return action(s); }
};

// D_h: (D_h s)_k = h_{k+1} s_{k+1}; consumes one known coefficient.
SeriesOperator d_h(const HSeries& h);
// I_h: (I_h s)_{k+1} = s_k / h_{k+1}, constant term 0; right inverse of D_h.
SeriesOperator i_h(const HSeries& h);

SeriesOperator identity_op();
SeriesOperator zero_op(int order_shift = 0);
SeriesOperator add_ops(const SeriesOperator& a, const SeriesOperator& b);
SeriesOperator compose_ops(const SeriesOperator& outer,
                           const SeriesOperator& inner);
SeriesOperator scale_op(const Rat& c, const SeriesOperator& t);

enum class OperatorClass { Isometry, Contractive };

// f(T) is an isometry iff f(0) != 0, contractive iff f(0) = 0.
OperatorClass classify_f_of_T(const Series& f);

// Evaluates f(T)(s) = sum f_n T^n(s). Requires T.order_shift >= 1 so the
// series of operators converges (each term raises order).
Series op_series_apply(const Series& f, const SeriesOperator& T,
                       const Series& s);

// f(T) packaged as an operator; order_shift is 0 for an isometry and
// ord_floor(f) * T.order_shift for a contractive f.
SeriesOperator op_from_series(const Series& f, const SeriesOperator& T);

// Distance between operators under the probe norm
// sup_k 2^k * d(T1(x^k), T2(x^k)), k = 0..probe_trunc.
// Exact: a probe reaches the structural cap 2^{-min(order_shift)}, which no
//   probe (tested or not) can exceed, so the supremum is certified.
// LowerBound: witnesses exist but none reaches the cap.
// Unresolved: every probed difference vanishes within truncation; value is
//   the ultra_dist-style bound 2^{-(probe_trunc+1)}.
struct OpDist {
  Rat value;
  enum class Kind { Exact, LowerBound, Unresolved } kind;
  int witness;  // probe degree attaining the reported value, -1 if none
};

OpDist op_dist(const SeriesOperator& t1, const SeriesOperator& t2,
               int probe_trunc);

// Barrow's rule: I_h(D_h s) = s - s_0 on the common truncation.
bool barrow_check(const HSeries& h, const Series& s);
// Fundamental theorem: D_h(I_h s) = s on the common truncation.
bool ftc_check(const HSeries& h, const Series& s);

// D_h(f g) - f D_h(g) - g D_h(f); identically zero only for the classical
// derivative's h, so a nonzero value is a product-rule failure witness.
Series leibniz_defect(const HSeries& h, const Series& f, const Series& g);

// Three-way identity D_h(s) = D_0(h) * D_0(s) (Hadamard) = D_0(h * s),
// with D_0 the 0-Jackson derivative. Vacuously true when no coefficient is
// checkable (trunc-0 inputs).
bool hadamard_derivative_identity_check(const HSeries& h, const Series& s);

}  // namespace ward
