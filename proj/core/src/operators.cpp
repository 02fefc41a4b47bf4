#include "ward/operators.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ward {

HSeries::HSeries(Series base) : base_(std::move(base)) {
  if (!base_.coeff(0).is_zero())
    throw InvalidH(0, "h_0 must be 0, got " + base_.coeff(0).str());
  for (int k = 1; k <= base_.trunc(); ++k)
    if (base_.coeff(k).is_zero())
      throw InvalidH(k, "h_" + std::to_string(k) + " must be nonzero");
}

const Rat& HSeries::at(int k) const {
  if (k < 1 || k > trunc())
    throw InvalidParameter("h index " + std::to_string(k) + " outside 1.." +
                           std::to_string(trunc()));
  return base_.coeff(k);
}

Rat HSeries::falling_product(int k) const {
  if (k < 0 || k > trunc())
    throw InvalidParameter("falling product wants 0 <= k <= trunc");
  Rat p(1);
  for (int i = 1; i <= k; ++i) p *= at(i);
  return p;
}

HSeries jackson_zero_h(int trunc) {
  std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1, Rat(1));
  v[0] = Rat(0);
  return HSeries(Series(std::move(v)));
}

SeriesOperator d_h(const HSeries& h) {
  return SeriesOperator{
      [h](const Series& s) {
        int t = std::min(s.trunc(), h.trunc()) - 1;
        if (t < 0)
          throw PrecisionExhausted(
              "derivative needs a known positive-degree coefficient");
        std::vector<Rat> v;
        v.reserve(static_cast<std::size_t>(t) + 1);
        for (int k = 0; k <= t; ++k) v.push_back(h.at(k + 1) * s.coeff(k + 1));
        return Series(std::move(v));
      },
      -1};
}

SeriesOperator i_h(const HSeries& h) {
  return SeriesOperator{
      [h](const Series& s) {
        int t = std::min(s.trunc() + 1, h.trunc());
        std::vector<Rat> v(static_cast<std::size_t>(t) + 1);
        for (int k = 1; k <= t; ++k) v[static_cast<std::size_t>(k)] = s.coeff(k - 1) / h.at(k);
        return Series(std::move(v));
      },
      +1};
}

SeriesOperator identity_op() {
  return SeriesOperator{[](const Series& s) { return s; }, 0};
}

SeriesOperator zero_op(int order_shift) {
  return SeriesOperator{
      [](const Series& s) { return Series::zero(s.trunc()); }, order_shift};
}

SeriesOperator add_ops(const SeriesOperator& a, const SeriesOperator& b) {
  return SeriesOperator{
      [a, b](const Series& s) { return a(s) + b(s); },
      std::min(a.order_shift, b.order_shift)};
}

SeriesOperator compose_ops(const SeriesOperator& outer,
                           const SeriesOperator& inner) {
  return SeriesOperator{
      [outer, inner](const Series& s) { return outer(inner(s)); },
      outer.order_shift + inner.order_shift};
}

SeriesOperator scale_op(const Rat& c, const SeriesOperator& t) {
  return SeriesOperator{[c, t](const Series& s) { return c * t(s); },
                        t.order_shift};
}

OperatorClass classify_f_of_T(const Series& f) {
  return f.coeff(0).is_zero() ? OperatorClass::Contractive
                              : OperatorClass::Isometry;
}

Series op_series_apply(const Series& f, const SeriesOperator& T,
                       const Series& s) {
  if (T.order_shift < 1)
    throw NotContractive(
        "operator power series wants order_shift >= 1 on the argument");
  Series acc = f.coeff(0) * s;
  Series cur = s;
  for (int n = 1; n <= f.trunc(); ++n) {
    if (static_cast<long>(n) * T.order_shift > acc.trunc()) break;
    cur = T(cur);
    if (f.coeff(n).is_zero()) continue;  // exact zero term, no precision cost
    acc = add_term_with_min_order(acc, f.coeff(n) * cur, n * T.order_shift);
  }
  // Terms past f.trunc() are unknown and would first touch exponent
  // (f.trunc()+1) * shift, so knowledge stops below that.
  int cap = (f.trunc() + 1) * T.order_shift - 1;
  return acc.trunc() <= cap ? acc : acc.truncated(cap);
}

SeriesOperator op_from_series(const Series& f, const SeriesOperator& T) {
  if (T.order_shift < 1)
    throw NotContractive(
        "operator power series wants order_shift >= 1 on the argument");
  int shift =
      f.coeff(0).is_zero() ? order_floor(f) * T.order_shift : 0;
  return SeriesOperator{
      [f, T](const Series& s) { return op_series_apply(f, T, s); }, shift};
}

OpDist op_dist(const SeriesOperator& t1, const SeriesOperator& t2,
               int probe_trunc) {
  if (probe_trunc < 0) throw InvalidParameter("probe_trunc must be >= 0");
  int min_shift = std::min(t1.order_shift, t2.order_shift);
  Rat cap = min_shift >= 0 ? two_pow_neg(min_shift)
                           : Rat(2).pow(-static_cast<long>(min_shift));
  Rat best;
  int witness = -1;
  for (int k = 0; k <= probe_trunc; ++k) {
    Series probe = Series::monomial(k, probe_trunc);
    Series diff = t1(probe) - t2(probe);
    Order o = order(diff);
    if (o.above()) continue;  // vanishes within trunc: no exact witness
    // Scaled contribution 2^k * 2^{-order}.
    int e = o.value() - k;
    Rat term = e >= 0 ? two_pow_neg(e) : Rat(2).pow(-static_cast<long>(e));
    if (witness < 0 || term > best) {
      best = term;
      witness = k;
    }
  }
  if (witness < 0)
    return OpDist{two_pow_neg(probe_trunc + 1), OpDist::Kind::Unresolved, -1};
  if (best == cap) return OpDist{best, OpDist::Kind::Exact, witness};
  return OpDist{best, OpDist::Kind::LowerBound, witness};
}

bool barrow_check(const HSeries& h, const Series& s) {
  if (std::min(h.trunc(), s.trunc()) < 1) return true;  // nothing checkable
  Series lhs = i_h(h)(d_h(h)(s));
  Series rhs = s - Series::constant(s.coeff(0), s.trunc());
  return agree_to_common_trunc(lhs, rhs);
}

bool ftc_check(const HSeries& h, const Series& s) {
  if (h.trunc() < 1) return true;  // I_h then D_h needs one usable h value
  Series lhs = d_h(h)(i_h(h)(s));
  return agree_to_common_trunc(lhs, s);
}

Series leibniz_defect(const HSeries& h, const Series& f, const Series& g) {
  SeriesOperator D = d_h(h);
  return D(f * g) - f * D(g) - g * D(f);
}

bool hadamard_derivative_identity_check(const HSeries& h, const Series& s) {
  int t = std::min(h.trunc(), s.trunc());
  if (t < 1) return true;  // empty comparison range
  SeriesOperator D0h = d_h(jackson_zero_h(h.trunc()));
  SeriesOperator D0s = d_h(jackson_zero_h(s.trunc()));
  Series lhs = d_h(h)(s);
  Series mid = hadamard(D0h(h.series()), D0s(s));
  Series rhs = d_h(jackson_zero_h(t))(hadamard(h.series(), s));
  return agree_to_common_trunc(lhs, mid) && agree_to_common_trunc(mid, rhs) &&
         agree_to_common_trunc(lhs, rhs);
}

}  // namespace ward
