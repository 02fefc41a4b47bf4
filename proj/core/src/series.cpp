#include "ward/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ward {

namespace {

std::vector<Rat> zeros(int trunc) {
  return std::vector<Rat>(static_cast<std::size_t>(trunc) + 1);
}

}  // namespace

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw InvalidParameter("a series needs at least the constant coefficient");
}

Series::Series(std::initializer_list<Rat> coeffs)
    : Series(std::vector<Rat>(coeffs)) {}

Series Series::zero(int trunc) {
  if (trunc < 0) throw InvalidParameter("series trunc must be >= 0");
  return Series(zeros(trunc));
}

Series Series::constant(const Rat& c, int trunc) {
  auto v = zeros(trunc);
  v[0] = c;
  return Series(std::move(v));
}

Series Series::monomial(int k, int trunc, const Rat& c) {
  if (k < 0 || k > trunc)
    throw InvalidParameter("monomial exponent outside 0..trunc");
  auto v = zeros(trunc);
  v[static_cast<std::size_t>(k)] = c;
  return Series(std::move(v));
}

const Rat& Series::coeff(int k) const {
  if (k < 0 || k > trunc())
    throw std::out_of_range("coefficient " + std::to_string(k) +
                            " beyond trunc " + std::to_string(trunc()));
  return coeffs_[static_cast<std::size_t>(k)];
}

Series Series::truncated(int new_trunc) const {
  if (new_trunc < 0 || new_trunc > trunc())
    throw InvalidParameter("truncated() wants 0 <= new_trunc <= trunc");
  return Series(std::vector<Rat>(coeffs_.begin(),
                                 coeffs_.begin() + new_trunc + 1));
}

Series Series::padded_as_polynomial(int new_trunc) const {
  if (new_trunc < trunc())
    throw InvalidParameter("padded_as_polynomial() cannot shrink");
  auto v = coeffs_;
  v.resize(static_cast<std::size_t>(new_trunc) + 1);
  return Series(std::move(v));
}

int Order::value() const {
  if (above()) throw InvalidParameter("order is above trunc");
  return n_;
}

Series operator+(const Series& a, const Series& b) {
  int t = std::min(a.trunc(), b.trunc());
  auto v = std::vector<Rat>();
  v.reserve(static_cast<std::size_t>(t) + 1);
  for (int k = 0; k <= t; ++k) v.push_back(a.coeff(k) + b.coeff(k));
  return Series(std::move(v));
}

Series operator-(const Series& a, const Series& b) {
  int t = std::min(a.trunc(), b.trunc());
  auto v = std::vector<Rat>();
  v.reserve(static_cast<std::size_t>(t) + 1);
  for (int k = 0; k <= t; ++k) v.push_back(a.coeff(k) - b.coeff(k));
  return Series(std::move(v));
}

Series operator-(const Series& a) {
  auto v = a.coeffs();
  for (auto& c : v) c = -c;
  return Series(std::move(v));
}

Series operator*(const Rat& c, const Series& a) {
  auto v = a.coeffs();
  for (auto& x : v) x = c * x;
  return Series(std::move(v));
}

Series operator*(const Series& a, const Series& b) {
  // Coefficient n is determined iff every product a_i * b_{n-i} touching an
  // unknown coefficient pairs it with a known zero. That holds up to
  // min(a.trunc + ord_floor(b), b.trunc + ord_floor(a)).
  int t = std::min(a.trunc() + order_floor(b), b.trunc() + order_floor(a));
  auto v = zeros(t);
  for (int i = 0; i <= std::min(a.trunc(), t); ++i) {
    if (a.coeff(i).is_zero()) continue;
    int jmax = std::min(b.trunc(), t - i);
    for (int j = 0; j <= jmax; ++j)
      v[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return Series(std::move(v));
}

Series hadamard(const Series& a, const Series& b) {
  int t = std::min(a.trunc(), b.trunc());
  auto v = std::vector<Rat>();
  v.reserve(static_cast<std::size_t>(t) + 1);
  for (int k = 0; k <= t; ++k) v.push_back(a.coeff(k) * b.coeff(k));
  return Series(std::move(v));
}

Series mul_inverse(const Series& a) {
  if (a.coeff(0).is_zero())
    throw ZeroConstantTerm("series with zero constant term has no reciprocal");
  int t = a.trunc();
  auto v = zeros(t);
  v[0] = Rat(1) / a.coeff(0);
  for (int n = 1; n <= t; ++n) {
    Rat s;
    for (int i = 1; i <= n; ++i) s += a.coeff(i) * v[static_cast<std::size_t>(n - i)];
    v[static_cast<std::size_t>(n)] = -s / a.coeff(0);
  }
  return Series(std::move(v));
}

Series compose(const Series& f, const Series& g) {
  if (!g.coeff(0).is_zero())
    throw NonzeroInnerConstant("composition wants inner constant term 0");
  int t = std::min(f.trunc(), g.trunc());
  Series gg = g.truncated(t);
  Series acc = Series::constant(f.coeff(std::min(f.trunc(), t)), t);
  for (int k = std::min(f.trunc(), t) - 1; k >= 0; --k) {
    acc = (acc * gg).truncated(t) + Series::constant(f.coeff(k), t);
  }
  return acc;
}

Series pow(const Series& a, int k) {
  if (k < 0) throw InvalidParameter("series pow wants k >= 0");
  Series r = Series::constant(Rat(1), a.trunc());
  for (int i = 0; i < k; ++i) r = (r * a).truncated(std::min(r.trunc(), a.trunc()));
  return r;
}

Order order(const Series& a) {
  for (int k = 0; k <= a.trunc(); ++k)
    if (!a.coeff(k).is_zero()) return Order::at(k);
  return Order::above_trunc();
}

int order_floor(const Series& a) {
  Order o = order(a);
  return o.above() ? a.trunc() + 1 : o.value();
}

UltraDist ultra_dist(const Series& a, const Series& b) {
  Series d = a - b;
  Order o = order(d);
  if (o.above()) return UltraDist{two_pow_neg(d.trunc() + 1), false};
  return UltraDist{two_pow_neg(o.value()), true};
}

Series add_term_with_min_order(const Series& acc, const Series& term,
                               int min_order) {
  // Coefficients of term below min_order are exact zeros even past its
  // trunc, so the sum keeps acc's knowledge there.
  int t = std::min(acc.trunc(), std::max(term.trunc(), min_order - 1));
  auto v = std::vector<Rat>();
  v.reserve(static_cast<std::size_t>(t) + 1);
  for (int k = 0; k <= t; ++k) {
    Rat c = acc.coeff(k);
    if (k <= term.trunc()) c += term.coeff(k);
    v.push_back(std::move(c));
  }
  return Series(std::move(v));
}

bool agree_to_common_trunc(const Series& a, const Series& b) {
  int t = std::min(a.trunc(), b.trunc());
  for (int k = 0; k <= t; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

}  // namespace ward
