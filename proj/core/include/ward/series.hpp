#pragma once

#include <initializer_list>
#include <vector>

#include "ward/rational.hpp"

namespace ward {

// Truncated formal power series over the rationals. A value knows its
// coefficients for exponents 0..trunc() and nothing beyond; every operation
// reports the largest exponent its result fully determines. Accessing a
// coefficient past trunc() is an error, not a zero.
class Series {
public:
  explicit Series(std::vector<Rat> coeffs);
  Series(std::initializer_list<Rat> coeffs);

  static Series zero(int trunc);
  static Series constant(const Rat& c, int trunc);
  static Series monomial(int k, int trunc, const Rat& c = Rat(1));

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  // Drops knowledge: new_trunc <= trunc().
  Series truncated(int new_trunc) const;
  // Extends with exact zeros. Only sound when the caller asserts the value
  // is an exact polynomial, not a truncation of something longer.
  Series padded_as_polynomial(int new_trunc) const;

  bool operator==(const Series&) const = default;

private:
  std::vector<Rat> coeffs_;  // invariant: size == trunc + 1 >= 1
};

// Valuation of a series: the least exponent with a nonzero coefficient, or
// the AboveTrunc sentinel when every known coefficient vanishes.
class Order {
public:
  static Order at(int n) { return Order(n); }
  static Order above_trunc() { return Order(-1); }

  bool above() const { return n_ < 0; }
  int value() const;

  bool operator==(const Order&) const = default;

private:
  explicit Order(int n) : n_(n) {}
  int n_;
};

// Ultrametric distance 2^{-order(a-b)}. When the difference vanishes within
// the common truncation the true distance is only bounded: d <= value.
struct UltraDist {
  Rat value;
  bool exact;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Rat& c, const Series& a);
// Cauchy product; truncation is order-aware (multiplying by a known zero
// prefix does not discard precision).
Series operator*(const Series& a, const Series& b);

Series hadamard(const Series& a, const Series& b);
Series mul_inverse(const Series& a);
Series compose(const Series& f, const Series& g);
Series pow(const Series& a, int k);

Order order(const Series& a);
// Certified lower bound on the valuation: the resolved order, or trunc + 1
// when every known coefficient is zero.
int order_floor(const Series& a);

UltraDist ultra_dist(const Series& a, const Series& b);

// Sum acc + term where term is certified to vanish below `min_order`
// (exact zeros even beyond term.trunc()). Sound to use whenever the caller
// holds a structural certificate, e.g. term = T^n(s) for an order-raising T.
Series add_term_with_min_order(const Series& acc, const Series& term,
                               int min_order);

// Equality of every coefficient both sides determine.
bool agree_to_common_trunc(const Series& a, const Series& b);

}  // namespace ward
