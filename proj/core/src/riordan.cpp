#include "ward/riordan.hpp"

#include <algorithm>
#include <utility>

namespace ward {

namespace {

// x / g as a series: 1/g shifted up one place. Keeps g's truncation.
Series x_over(const Series& g) {
  return Series::monomial(1, g.trunc()) * mul_inverse(g);
}

}  // namespace

RiordanPair::RiordanPair(Series f, Series g)
    : f_(std::move(f)), g_(std::move(g)) {
  if (f_.coeff(0).is_zero())
    throw ZeroConstantTerm("riordan pair wants f(0) != 0");
  if (g_.coeff(0).is_zero())
    throw ZeroConstantTerm("riordan pair wants g(0) != 0");
}

int RiordanPair::trunc() const { return std::min(f_.trunc(), g_.trunc()); }

RiordanPair riordan_identity(int trunc) {
  return RiordanPair(Series::constant(Rat(1), trunc),
                     Series::constant(Rat(1), trunc));
}

RiordanPair pascal_pair(int trunc) {
  if (trunc < 1) throw InvalidParameter("pascal pair wants trunc >= 1");
  Series g = Series::monomial(1, trunc, Rat(-1)) + Series::constant(Rat(1), trunc);
  return RiordanPair(Series::constant(Rat(1), trunc), std::move(g));
}

Series riordan_apply(const RiordanPair& r, const Series& gamma) {
  Series ratio = r.f() * mul_inverse(r.g());
  return ratio * compose(gamma, x_over(r.g()));
}

RiordanPair riordan_mul(const RiordanPair& left, const RiordanPair& right) {
  Series w = x_over(left.g());
  return RiordanPair(left.f() * compose(right.f(), w),
                     left.g() * compose(right.g(), w));
}

Series compositional_inverse(const Series& c) {
  if (!c.coeff(0).is_zero())
    throw InvalidParameter("compositional inverse wants order exactly 1");
  if (c.trunc() < 1 || c.coeff(1).is_zero())
    throw InvalidParameter("compositional inverse wants c_1 != 0");
  int t = c.trunc();
  // Triangular solve of b(c) = x: the x^n coefficient of sum_k b_k c^k
  // involves b_n only through c_1^n.
  std::vector<Series> cpow;  // c^k truncated to t, k = 0..t
  cpow.push_back(Series::constant(Rat(1), t));
  for (int k = 1; k <= t; ++k)
    cpow.push_back((cpow.back() * c).truncated(t));
  std::vector<Rat> b(static_cast<std::size_t>(t) + 1);
  for (int n = 1; n <= t; ++n) {
    Rat rhs = n == 1 ? Rat(1) : Rat(0);
    for (int k = 1; k < n; ++k)
      rhs -= b[static_cast<std::size_t>(k)] * cpow[static_cast<std::size_t>(k)].coeff(n);
    b[static_cast<std::size_t>(n)] = rhs / cpow[static_cast<std::size_t>(n)].coeff(n);
  }
  return Series(std::move(b));
}

namespace {

// Shared by riordan_inverse and a_sequence: A = x / rev(x/g), one
// coefficient shorter than g.
Series a_from_g(const Series& g) {
  Series rev = compositional_inverse(x_over(g));
  // rev has order 1; divide x by it via the shifted-down reciprocal.
  std::vector<Rat> shifted(rev.coeffs().begin() + 1, rev.coeffs().end());
  return mul_inverse(Series(std::move(shifted)));
}

}  // namespace

RiordanPair riordan_inverse(const RiordanPair& r) {
  if (r.trunc() < 1)
    throw InvalidParameter("riordan inverse wants trunc >= 1");
  Series a = a_from_g(r.g());
  int t = a.trunc();
  Series w = x_over(a);
  Series finv = mul_inverse(compose(r.f().truncated(std::min(r.f().trunc(), t)), w));
  return RiordanPair(std::move(finv), std::move(a));
}

Series a_sequence(const RiordanPair& r) {
  if (r.trunc() < 1)
    throw InvalidParameter("a-sequence wants trunc >= 1");
  return a_from_g(r.g());
}

std::vector<std::vector<Rat>> materialize(const RiordanPair& r, int rows) {
  if (rows < 1) throw InvalidParameter("materialize wants rows >= 1");
  if (rows - 1 > r.trunc())
    throw PrecisionExhausted("riordan pair too short for requested rows");
  Series col = r.f() * mul_inverse(r.g());
  Series step = x_over(r.g());
  std::vector<std::vector<Rat>> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) out.emplace_back();
  for (int j = 0; j < rows; ++j) {
    for (int i = j; i < rows; ++i) out[static_cast<std::size_t>(i)].push_back(col.coeff(i));
    // step has order 1, so the product keeps at least rows-1 determined
    // coefficients; clip there since higher ones are never read.
    if (j + 1 < rows) col = (col * step).truncated(rows - 1);
  }
  return out;
}

}  // namespace ward
