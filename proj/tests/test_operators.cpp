#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "ward/catalog.hpp"
#include "ward/operators.hpp"

using namespace ward;
using testsupport::Rng;

namespace {

HSeries classical_h(int trunc) {
  // h_n = n, the ordinary derivative
  std::vector<Rat> v(static_cast<std::size_t>(trunc) + 1);
  for (int k = 0; k <= trunc; ++k) v[static_cast<std::size_t>(k)] = Rat(k);
  return HSeries(Series(v));
}

}  // namespace

TEST_CASE("h sequences reject bad bases") {
  CHECK_THROWS_AS(HSeries(Series{Rat(1), Rat(1)}), InvalidH);  // h_0 != 0
  try {
    HSeries(Series{Rat(0), Rat(1), Rat(0), Rat(3)});
    CHECK(false);
  } catch (const InvalidH& e) {
    CHECK(e.witness() == 2);
  }
  CHECK(HSeries(Series{Rat(0)}).trunc() == 0);  // nothing positive to check
}

TEST_CASE("falling products") {
  HSeries fib = make_h(CatalogTag::parse("fibonomial"), 8);
  CHECK(fib.falling_product(0) == Rat(1));
  CHECK(fib.falling_product(4) == Rat(6));   // 3*2*1*1
  CHECK(fib.falling_product(5) == Rat(30));  // 5*3*2*1*1
  HSeries cl = classical_h(6);
  CHECK(cl.falling_product(6) == Rat(720));
}

TEST_CASE("jackson zero derivative is the coefficient shift") {
  Rng rng(50);
  Series s = rng.series(6);
  Series shifted = d_h(jackson_zero_h(6))(s);
  CHECK(shifted.trunc() == 5);
  for (int k = 0; k <= 5; ++k) CHECK(shifted.coeff(k) == s.coeff(k + 1));
}

TEST_CASE("classical derivative and integral") {
  HSeries h = classical_h(5);
  Series s{Rat(7), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};  // 7 + x + ... + x^5
  Series ds = d_h(h)(s);
  CHECK(ds == Series{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
  Series is = i_h(h)(Series(std::vector<Rat>(5, Rat(1))));
  CHECK(is == Series{Rat(0), Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(1, 5)});
  CHECK_THROWS_AS(d_h(h)(Series{Rat(3)}), PrecisionExhausted);
}

TEST_CASE("derivative and integral shift the window as documented") {
  HSeries h = classical_h(9);
  Series s = Series::monomial(2, 4);
  CHECK(d_h(h)(s).trunc() == 3);
  CHECK(i_h(h)(s).trunc() == 5);
  // integral window also capped by how far h is known
  HSeries short_h = classical_h(3);
  CHECK(i_h(short_h)(s).trunc() == 3);
}

TEST_CASE("barrow and fundamental theorem hold everywhere") {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    HSeries h = rng.hseries(8);
    Series s = rng.series(8);
    CHECK(barrow_check(h, s));
    CHECK(ftc_check(h, s));
  }
  // vacuous at the precision floor
  CHECK(barrow_check(classical_h(1), Series{Rat(5), Rat(2)}));
}

TEST_CASE("leibniz defect vanishes exactly for the classical h") {
  Rng rng(52);
  HSeries h = classical_h(8);
  for (int trial = 0; trial < 20; ++trial) {
    Series f = rng.series(8), g = rng.series(8);
    CHECK(order(leibniz_defect(h, f, g)).above());
  }
}

TEST_CASE("leibniz defect witnesses a product-rule failure for q = 2") {
  HSeries h = make_h(CatalogTag::parse("q:2"), 6);
  Series x = Series::monomial(1, 6);
  Series defect = leibniz_defect(h, x, x);
  // D(x^2) = [2]_q x = 3x but f D(g) + g D(f) = 2x, so the defect is x
  CHECK_FALSE(order(defect).above());
  CHECK(order(defect).value() == 1);
  CHECK(defect.coeff(1) == Rat(1));
}

TEST_CASE("hadamard three-way identity") {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    HSeries h = rng.hseries(8);
    Series s = rng.series(8);
    CHECK(hadamard_derivative_identity_check(h, s));
  }
  CHECK(hadamard_derivative_identity_check(classical_h(0), Series{Rat(2)}));
}

TEST_CASE("operator power series classification") {
  CHECK(classify_f_of_T(Series{Rat(1), Rat(1)}) == OperatorClass::Isometry);
  CHECK(classify_f_of_T(Series::monomial(1, 3)) == OperatorClass::Contractive);
  CHECK(classify_f_of_T(Series::zero(3)) == OperatorClass::Contractive);
}

TEST_CASE("operator power series evaluation") {
  HSeries h = classical_h(8);
  Series all_ones{std::vector<Rat>(9, Rat(1))};
  // (sum I^n)(1) = 1 + x + x^2/2 + ... = e^x
  Series expx = op_series_apply(all_ones, i_h(h), Series::constant(Rat(1), 8));
  for (int k = 0; k <= expx.trunc(); ++k)
    CHECK(expx.coeff(k) == Rat(1) / Rat(factorial(k)));
  CHECK_THROWS_AS(op_series_apply(all_ones, identity_op(), all_ones),
                  NotContractive);
}

TEST_CASE("operator power series window cap") {
  // f has trunc 1, T = I (shift 1): cap (1+1)*1 - 1 = 1 even on wide input
  HSeries h = classical_h(20);
  Series f{Rat(1), Rat(1)};
  Series out = op_series_apply(f, i_h(h), Series::constant(Rat(1), 20));
  CHECK(out.trunc() == 1);
}

TEST_CASE("operators built from series compose like their symbols") {
  HSeries h = classical_h(10);
  Rng rng(54);
  Series f = rng.series(4), g = rng.series(4);
  SeriesOperator T = i_h(h);
  Series probe = rng.series(10);

  Series lhs_add = op_series_apply(f + g, T, probe);
  Series rhs_add = op_series_apply(f, T, probe) + op_series_apply(g, T, probe);
  CHECK(agree_to_common_trunc(lhs_add, rhs_add));

  Series lhs_mul = op_series_apply(f * g, T, probe);
  Series rhs_mul = op_series_apply(f, T, op_series_apply(g, T, probe));
  CHECK(agree_to_common_trunc(lhs_mul, rhs_mul));

  Series g0 = g - Series::constant(g.coeff(0), g.trunc());  // g(0) = 0
  Series lhs_cmp = op_series_apply(compose(f, g0.padded_as_polynomial(f.trunc() * 4)), T, probe);
  Series rhs_cmp = op_series_apply(f, op_from_series(g0, T), probe);
  CHECK(agree_to_common_trunc(lhs_cmp, rhs_cmp));
}

TEST_CASE("op_from_series order shift bookkeeping") {
  HSeries h = classical_h(8);
  SeriesOperator T = i_h(h);
  CHECK(op_from_series(Series{Rat(1), Rat(1)}, T).order_shift == 0);
  CHECK(op_from_series(Series::monomial(2, 4), T).order_shift == 2);
  CHECK(zero_op(3).order_shift == 3);
  CHECK(add_ops(zero_op(2), zero_op(5)).order_shift == 2);
  CHECK(compose_ops(zero_op(2), zero_op(5)).order_shift == 7);
  CHECK(scale_op(Rat(0), identity_op()).order_shift == 0);
}

TEST_CASE("operator distance probes") {
  SeriesOperator twice{[](const Series& s) { return Rat(2) * s; }, 0};
  OpDist d = op_dist(identity_op(), twice, 6);
  CHECK(d.kind == OpDist::Kind::Exact);
  CHECK(d.value == Rat(1));
  CHECK(d.witness == 0);

  HSeries a = classical_h(8);
  std::vector<Rat> v(9);
  for (int k = 0; k <= 8; ++k) v[static_cast<std::size_t>(k)] = Rat(k);
  v[3] = Rat(5);  // perturb one h coefficient
  HSeries b{Series(v)};
  OpDist di = op_dist(i_h(a), i_h(b), 6);
  CHECK(di.kind == OpDist::Kind::Exact);

  OpDist same = op_dist(i_h(a), i_h(a), 5);
  CHECK(same.kind == OpDist::Kind::Unresolved);
  CHECK(same.value == two_pow_neg(6));
  CHECK(same.witness == -1);

  SeriesOperator xsq{[](const Series& s) {
                       return Series::monomial(2, s.trunc() + 2) * s;
                     },
                     2};
  OpDist lb = op_dist(zero_op(0), xsq, 4);
  CHECK(lb.kind == OpDist::Kind::LowerBound);
  CHECK(lb.value == Rat(1, 4));
}
