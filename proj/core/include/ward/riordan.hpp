#pragma once

#include <vector>

#include "ward/series.hpp"

namespace ward {

// Riordan matrix in the (f | g) convention: entry (i, j) is the coefficient
// of x^i in x^j f / g^{j+1}. Both f and g need nonzero constant terms.
class RiordanPair {
public:
  RiordanPair(Series f, Series g);

  const Series& f() const { return f_; }
  const Series& g() const { return g_; }
  int trunc() const;

private:
  Series f_, g_;
};

RiordanPair riordan_identity(int trunc);  // (1 | 1)
RiordanPair pascal_pair(int trunc);       // (1 | 1-x)

// Matrix action on a column vector of coefficients: (f/g) gamma(x/g).
Series riordan_apply(const RiordanPair& r, const Series& gamma);

// Group law: (f | g)(l | m) = (f * l(x/g) | g * m(x/g)).
RiordanPair riordan_mul(const RiordanPair& left, const RiordanPair& right);

// Group inverse (1/f(x/A) | A) where x/A is the compositional inverse of
// x/g. Determines one fewer coefficient than the input carries.
RiordanPair riordan_inverse(const RiordanPair& r);

// The A-sequence: the unique series with d_{i,j} = sum_k a_k d_{i-1,j-1+k}.
Series a_sequence(const RiordanPair& r);

// First `rows` rows of the lower-triangular matrix; rows-1 <= trunc().
std::vector<std::vector<Rat>> materialize(const RiordanPair& r, int rows);

// Series b with b(c) = x; wants c_0 = 0 and c_1 != 0.
Series compositional_inverse(const Series& c);

}  // namespace ward
