#pragma once

#include <optional>
#include <vector>

#include "fockdual/glhat.hpp"
#include "fockdual/symfunc.hpp"

namespace fockdual {

/*
  Truncated q-series verification layer.  Fock-space characters are
  built as explicit products over modes, graded by energy (a creator of
  mode -m carries energy m) and charge, restricted to a declared charge
  window, and Schur-decomposed degree by degree.

  Grading convention: the series are reported in raw extraction
  normalization; no per-label conformal shifts are applied.  With that
  convention the graded branching identity is exact across the
  factorization of the Fock space, which is what the tensor-character
  check exploits.
*/

// Truncated q-series whose degree-d coefficient is a Laurent-Schur
// expansion; arithmetic is exact below the order and truncates above.
struct QSeries {
  int nvars = 0;
  int order = 0;
  std::vector<LaurentSchurExpansion> coeffs;  // size order + 1

  bool operator==(const QSeries&) const = default;
};

QSeries add(const QSeries& x, const QSeries& y);
QSeries multiply(const QSeries& x, const QSeries& y);

struct BranchingFunction {
  GeneralizedPartition lam;
  Category sign = Category::OPlus;
  std::vector<Integer> series;  // b_0..b_order
};

// Graded monomial form of a Fock character, one symmetric Laurent
// polynomial per energy degree (internal and test surface).
std::vector<SymPolynomial> fock_graded(int npairs, Category sign, int order, Int window);

// Largest charge magnitude reachable at the given energy with distinct
// fermionic modes.
Int fermionic_reach(int order);

// Charge window sufficient for a full-series sweep at the given size.
Int default_charge_window(int npairs, Category sign, int order);

// Charge window sufficient to extract the coefficient of lam exactly.
Int charge_window_for(const GeneralizedPartition& lam, Category sign, int order);

// Schur-decomposed Fock character; the decomposition is verified to
// reconstruct the graded coefficients exactly and to be non-negative
// (WindowTooSmall otherwise).  Cached per (npairs, sign, order, window).
QSeries fock_series(int npairs, Category sign, int order, Int window);

// Coefficient series of s_lam in the Fock character of width(lam)
// pairs.  The window is auto-sized from lam and the order when absent.
BranchingFunction branching_function(const GeneralizedPartition& lam, Category sign, int order,
                                     std::optional<Int> window = std::nullopt);

struct TensorCharacterReport {
  EnumerationBox box;
  Int window = 0;                  // charge window used on the product side
  std::vector<Integer> residual;   // per degree, zero on success
  std::vector<std::pair<GeneralizedPartition, Integer>> lambda_terms;

  bool passed() const noexcept;
};

// Checks B_mu * B_nu = sum over lambda in the box of C^lambda_{mu nu} *
// B_lambda through the given order, growing the box until the residual
// stabilizes at zero (BoxCapExceeded when it cannot).
TensorCharacterReport verify_tensor_characters(const GeneralizedPartition& mu,
                                               const GeneralizedPartition& nu, Category sign,
                                               int order,
                                               std::optional<EnumerationBox> box = std::nullopt);

}  // namespace fockdual
