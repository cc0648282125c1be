#pragma once

#include <vector>

#include "fockdual/partitions.hpp"

namespace fockdual {

/*
  Littlewood-Richardson multiplicities, extended to rational GL-weights
  by the det-twist shift, and the restriction
  GL(M+N) -> GL(M) x GL(N) of a fixed highest weight.
*/

struct BranchingMultiplicity {
  GeneralizedPartition lambda;  // width M+N
  GeneralizedPartition mu;      // width M
  GeneralizedPartition nu;      // width N
  Integer mult;                 // > 0 when stored
};

// Number of ballot column-strict skew tableaux of shape lambda/mu and
// content nu.  Total: returns 0 when mu is not contained in lambda or
// the part sums do not match.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// C^lambda_{mu nu} for generalized weights, via the common shift
// k = max(0, -lambda_last, -mu_last, -nu_last); shift-invariant.
Integer rational_multiplicity(const GeneralizedPartition& lambda, const GeneralizedPartition& mu,
                              const GeneralizedPartition& nu);

// Complete decomposition of the restriction of lambda (width m+n) to the
// block-diagonal GL(m) x GL(n); finite, enumerated over the interlacing
// window [lambda_last, lambda_first].  Sorted by (mu, nu).
std::vector<BranchingMultiplicity> restrict_weight(const GeneralizedPartition& lambda, int m, int n);

}  // namespace fockdual
