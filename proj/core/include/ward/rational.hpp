#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "ward/errors.hpp"

namespace ward {

// Exact rational number. Invariant: always canonical (lowest terms, positive
// denominator), which raw mpq_class construction does not guarantee.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, lets integer literals flow
  Rat(long num, long den) : v_(num, den) { canonical_or_throw(); }
  explicit Rat(const mpz_class& z) : v_(z) {}
  Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    canonical_or_throw();
  }

  // Strict "p" or "p/q" decimal text, optional leading '-', q > 0 digits.
  static Rat parse(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(); }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  // Integer power; negative exponents require a nonzero base.
  Rat pow(long e) const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw InvalidParameter("rational division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}

  void canonical_or_throw() {
    if (v_.get_den() == 0) throw InvalidParameter("rational with zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;  // invariant: canonical
};

// C(n, k); zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);
mpz_class factorial(long n);

// 2^{-e} as an exact rational (e >= 0).
Rat two_pow_neg(long e);

}  // namespace ward
