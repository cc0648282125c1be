#pragma once

#include <map>
#include <vector>

#include "fockdual/glhat.hpp"
#include "fockdual/partitions.hpp"

namespace fockdual {

/*
  Primitive modules over the central extension of differential operators
  on the circle: finite lists of factors (level n, lambda, s), pairwise
  non-congruent s mod Z.  The base point s is kept as an exact rational
  so mod-Z congruence is decidable; the canonical fundamental domain is
  s in [0,1).
*/

struct WFactor {
  GeneralizedPartition lam;  // width = level n >= 1
  Rational s;

  int level() const noexcept { return lam.width(); }

  bool operator==(const WFactor& o) const { return s == o.s && lam == o.lam; }
  bool operator<(const WFactor& o) const {
    if (s != o.s) return s < o.s;
    return lam < o.lam;
  }
};

struct PrimitiveWModule {
  std::vector<WFactor> factors;  // empty list = trivial module, charge 0

  Int central_charge() const noexcept;

  bool operator==(const PrimitiveWModule& o) const { return factors == o.factors; }
  bool operator<(const PrimitiveWModule& o) const {
    return std::lexicographical_compare(factors.begin(), factors.end(), o.factors.begin(),
                                        o.factors.end());
  }
};

// Exponents r with positive integer multiplicities; charge is the total
// multiplicity.
struct ExponentMultiset {
  std::map<Rational, Int> entries;

  Int charge() const noexcept;
};

// Exponent data together with a declared central charge; Taylor
// coefficients of the quotient (sum m_i e^{r_i x} - c) / (e^x - 1) are
// computed on demand.
struct DeltaSeries {
  ExponentMultiset exps;
  Int central_charge = 0;
};

struct WDecomposition {
  EnumerationBox box;  // applied per shared congruence class
  std::map<PrimitiveWModule, Integer> terms;
};

// Shifts every factor into the fundamental domain s in [0,1) via
// (lambda, s) -> (lambda - floor(s)*1, s - floor(s)) and sorts by s.
// Throws CongruentExponents when two factors share s mod Z.
PrimitiveWModule canonicalize(const PrimitiveWModule& raw);

bool is_canonical(const PrimitiveWModule& m);

// Union over factors of the exponents s - j with multiplicity h_j, h
// the plus-side weight data of lambda.
ExponentMultiset exponents(const PrimitiveWModule& m);

// xi_0..xi_upto by exact power-series division.  Throws ChargeMismatch
// when the multiplicities do not sum to the central charge.
std::vector<Rational> delta_xi(const DeltaSeries& d, int upto);

bool is_isomorphic(const PrimitiveWModule& a, const PrimitiveWModule& b);

// Tensor decomposition: factors in congruence classes present on only
// one side pass through; each shared class expands by the level
// tensor rule inside the box; multiplicities multiply across classes.
// Inputs must be canonical (NonCanonicalInput).
WDecomposition tensor_w(const PrimitiveWModule& a, const PrimitiveWModule& b,
                        const EnumerationBox& box);

}  // namespace fockdual
