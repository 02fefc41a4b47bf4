#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "ward/riordan.hpp"

using namespace ward;
using testsupport::Rng;

namespace {

RiordanPair random_pair(Rng& rng, int trunc) {
  Series f = rng.series(trunc), g = rng.series(trunc);
  while (f.coeff(0).is_zero()) f = rng.series(trunc);
  while (g.coeff(0).is_zero()) g = rng.series(trunc);
  return RiordanPair(f, g);
}

bool rows_equal(const std::vector<std::vector<Rat>>& a,
                const std::vector<std::vector<Rat>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("pairs need invertible f and g") {
  CHECK_THROWS_AS(RiordanPair(Series::monomial(1, 3), Series::constant(Rat(1), 3)),
                  ZeroConstantTerm);
  CHECK_THROWS_AS(RiordanPair(Series::constant(Rat(1), 3), Series::monomial(1, 3)),
                  ZeroConstantTerm);
}

TEST_CASE("pascal pair materializes the binomial triangle") {
  auto rows = materialize(pascal_pair(6), 7);
  REQUIRE(rows.size() == 7);
  for (int i = 0; i < 7; ++i) {
    REQUIRE(rows[static_cast<std::size_t>(i)].size() == static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j)
      CHECK(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            Rat(binomial(i, j)));
  }
  CHECK_THROWS_AS(materialize(pascal_pair(3), 5), PrecisionExhausted);
}

TEST_CASE("pascal acting on the all-ones column doubles") {
  Series out = riordan_apply(pascal_pair(8), Series(std::vector<Rat>(9, Rat(1))));
  for (int k = 0; k <= 8; ++k) CHECK(out.coeff(k) == Rat(2).pow(k));
}

TEST_CASE("matrix action agrees with row-by-row dot products") {
  Rng rng(60);
  for (int trial = 0; trial < 10; ++trial) {
    RiordanPair r = random_pair(rng, 7);
    Series gamma = rng.series(7);
    Series via_series = riordan_apply(r, gamma);
    auto rows = materialize(r, 8);
    for (int i = 0; i <= 7; ++i) {
      Rat dot;
      for (int j = 0; j <= i; ++j)
        dot = dot + rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        gamma.coeff(j);
      CHECK(via_series.coeff(i) == dot);
    }
  }
}

TEST_CASE("group identity and inverse") {
  RiordanPair id = riordan_identity(5);
  Rng rng(61);
  RiordanPair r = random_pair(rng, 5);
  CHECK(riordan_mul(r, id).f() == r.f());
  CHECK(riordan_mul(r, id).g() == r.g());

  RiordanPair inv = riordan_inverse(r);
  CHECK(inv.trunc() == r.trunc() - 1);  // inversion spends one coefficient
  RiordanPair prod = riordan_mul(r, inv);
  CHECK(prod.f() == Series::constant(Rat(1), inv.trunc()));
  CHECK(prod.g() == Series::constant(Rat(1), inv.trunc()));
}

TEST_CASE("pascal inverse carries alternating signs") {
  RiordanPair inv = riordan_inverse(pascal_pair(6));
  auto rows = materialize(inv, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j <= i; ++j)
      CHECK(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            Rat((i + j) % 2 == 0 ? 1 : -1) * Rat(binomial(i, j)));
}

TEST_CASE("multiplication is associative and matches matrix product") {
  Rng rng(62);
  RiordanPair a = random_pair(rng, 6), b = random_pair(rng, 6),
              c = random_pair(rng, 6);
  RiordanPair lhs = riordan_mul(riordan_mul(a, b), c);
  RiordanPair rhs = riordan_mul(a, riordan_mul(b, c));
  CHECK(agree_to_common_trunc(lhs.f(), rhs.f()));
  CHECK(agree_to_common_trunc(lhs.g(), rhs.g()));

  // product of materialized matrices == materialized product
  RiordanPair ab = riordan_mul(a, b);
  auto ra = materialize(a, 7), rb = materialize(b, 7), rab = materialize(ab, 7);
  std::vector<std::vector<Rat>> manual(7);
  for (int i = 0; i < 7; ++i) {
    manual[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) {
      Rat s;
      for (int k = j; k <= i; ++k)
        s = s + ra[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    rb[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      manual[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  }
  CHECK(rows_equal(manual, rab));
}

TEST_CASE("a-sequence of pascal is 1 + x") {
  Series a = a_sequence(pascal_pair(6));
  CHECK(a.coeff(0) == Rat(1));
  CHECK(a.coeff(1) == Rat(1));
  for (int k = 2; k <= a.trunc(); ++k) CHECK(a.coeff(k) == Rat(0));
}

TEST_CASE("a-sequence recurrence holds on random pairs") {
  Rng rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    RiordanPair r = random_pair(rng, 7);
    Series a = a_sequence(r);
    auto rows = materialize(r, 8);
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= i; ++j) {
        Rat s;
        for (int k = 0; j - 1 + k <= i - 1 && k <= a.trunc(); ++k)
          s = s + a.coeff(k) * rows[static_cast<std::size_t>(i - 1)]
                                   [static_cast<std::size_t>(j - 1 + k)];
        CHECK(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == s);
      }
  }
}

TEST_CASE("compositional inverse") {
  Series c = (Series::monomial(1, 5) + Series::monomial(2, 5));
  Series b = compositional_inverse(c);
  // alternating signed Catalan numbers
  CHECK(b == Series{Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-5), Rat(14)});
  Series back = compose(b, c);
  CHECK(back == Series::monomial(1, 5));

  CHECK_THROWS_AS(compositional_inverse(Series::constant(Rat(1), 4)),
                  InvalidParameter);
  CHECK_THROWS_AS(compositional_inverse(Series::monomial(2, 4)), InvalidParameter);
}
