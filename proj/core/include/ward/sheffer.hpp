#pragma once

#include <optional>
#include <vector>

#include "ward/catalog.hpp"
#include "ward/operators.hpp"

namespace ward {

// Expansion of D_h over classical derivatives:
//   D_h(y) = sum_{k>=1} c_k x^{k-1} y^{(k)},
// with c_k = (1/k!) sum_{j=0}^{k} (-1)^{k+j} C(k,j) h_j. The polynomial
// a(x) = sum a_k x^k with a_k = k! c_k is the inverse-Pascal transform of h.
struct ShefferExpansion {
  // c[k] for 1 <= k <= h.trunc(); c[0] is unused and zero.
  std::vector<Rat> c;
  // Certified degree bound: c_k = 0 for all k > m, known only when the
  // expansion came with closed-form provenance.
  std::optional<int> finite_degree;

  int max_k() const { return static_cast<int>(c.size()) - 1; }
};

// Computes the coefficients two independent ways (alternating binomial sum
// and inverse-Pascal Riordan action) and insists they agree.
ShefferExpansion sheffer_coeffs(const HSeries& h);

// Evaluates sum_k c_k x^{k-1} y^{(k)} with classical derivatives. Must
// reproduce d_h(h)(y) on the propagated truncation.
Series reconstruct_apply(const ShefferExpansion& e, const Series& y);

enum class CalculusVerdict {
  FiniteDegree,       // certified finite with known degree
  InfiniteCertified,  // certified: no tail of zeros ever starts
  FiniteUpToTrunc,    // zeros observed past some degree, tail unverifiable
  UnknownBeyondTrunc  // nonzero through the whole window
};

struct Classification {
  CalculusVerdict verdict;
  std::optional<int> degree;  // FiniteDegree / FiniteUpToTrunc
};

// Certification requires closed-form provenance (a catalog tag); raw
// coefficients can only be classified up to the truncation window.
Classification classify_calculus(const HSeries& h,
                                 const std::optional<CatalogTag>& tag);

// Builds the h-series whose Sheffer polynomial is the given a (a polynomial
// with a_0 = 0, degree >= 1): h_n = sum_k C(n,k) a_k via the Pascal action.
// Every h_n through out_trunc must be nonzero; the witness index is carried
// by the InvalidH error otherwise.
HSeries h_from_a(const Series& a, int out_trunc);

// Three-way agreement for the Pascal column family h_s, s >= 2:
//   binomial-weighted classical form  sum_{k=1}^{s-1} C(s-2,k-1)/k! x^{k-1} y^{(k)}
//   shift-based form                  sum_{k=0}^{s-1} C(s-1,k) x^k/k! (D_0 y)^{(k)}
//   the operator itself               d_h(h_s)(y)
bool pascal_column_expansion_check(int s, const Series& y);

}  // namespace ward
