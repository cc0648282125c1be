#pragma once

#include <map>
#include <vector>

#include "fockdual/partitions.hpp"

namespace fockdual {

/*
  Brute-force symmetric-function arithmetic in finitely many variables.
  Deliberately slow and simple: this module is the independent oracle
  against which the tableau-based branching engine is checked, so it
  shares no code path with it.
*/

// Laurent polynomial in nvars variables; terms maps exponent vector to
// coefficient, zero coefficients never stored.
struct SymPolynomial {
  int nvars = 0;
  std::map<std::vector<Int>, Integer> terms;

  void add_term(const std::vector<Int>& expo, const Integer& c);
  SymPolynomial& operator+=(const SymPolynomial& o);
  SymPolynomial& operator-=(const SymPolynomial& o);
  SymPolynomial operator*(const SymPolynomial& o) const;

  bool is_zero() const noexcept { return terms.empty(); }
  bool is_symmetric() const;
  Integer eval_ones() const;  // sum of coefficients = value at z_i = 1

  bool operator==(const SymPolynomial&) const = default;
};

// Integer combination of Laurent-Schur functions s_lambda, lambda of
// fixed width nvars.
struct LaurentSchurExpansion {
  int nvars = 0;
  std::map<GeneralizedPartition, Integer> coeffs;

  bool operator==(const LaurentSchurExpansion&) const = default;
};

// Character of the irreducible GL(nvars) module with highest weight lam
// (width must equal nvars).  Mixed-sign weights go through
// polynomial_reduction and a det^{-shift} twist.  Memoized.
SymPolynomial schur_polynomial(const GeneralizedPartition& lam, int nvars);

// Exact expansion of a symmetric Laurent polynomial in the Schur basis by
// repeated subtraction at the lex-greatest exponent vector.
// Throws NotSymmetric, NonTerminating.
LaurentSchurExpansion schur_decompose(const SymPolynomial& p);

// Sum of coeff * s_lambda as an explicit polynomial.
SymPolynomial expansion_polynomial(const LaurentSchurExpansion& e);

// Re-embeds p into new_nvars variables, variable i becoming offset + i.
SymPolynomial embed(const SymPolynomial& p, int offset, int new_nvars);

}  // namespace fockdual
