#pragma once

#include <map>

#include "fockdual/partitions.hpp"

namespace fockdual {

/*
  Weight combinatorics of gl-hat-infinity: highest weights as central
  charge plus finitely supported h-data, the primitive encodings at
  charge +N / -N, nu-hat twists, and the tensor decomposition shared by
  the three equivalent categories (charge >= 0, charge <= 0, and the
  GL(N)-side category with the induction product).
*/

// Interchange form of a highest weight: central charge and the finitely
// supported values h_i (zeros never stored).
struct GlHatWeight {
  Int central_charge = 0;
  std::map<Int, Int> h;

  bool operator==(const GlHatWeight&) const = default;
};

enum class Category : char {
  OPlus = '+',   // charge +N side
  OMinus = '-',  // charge -N side
  Gl = 'f',      // GL(N) modules with the induction product
};

// Canonical label of an irreducible object: category tag plus the
// generalized partition; the level is the partition width.
struct PrimitiveLabel {
  Category cat = Category::OPlus;
  GeneralizedPartition lam;

  int level() const noexcept { return lam.width(); }
  auto operator<=>(const PrimitiveLabel&) const = default;
};

// Declared finite enumeration window: first parts at most hi, last parts
// at least lo.  Decomposition sums are complete within the box.
struct EnumerationBox {
  Int lo = 0;  // min last part
  Int hi = 0;  // max first part
};

struct GlDecomposition {
  EnumerationBox box;
  std::map<PrimitiveLabel, Integer> terms;
};

// Weight with h_j = #{a : lambda_a = j} at charge N.
GlHatWeight lambda_plus(const GeneralizedPartition& lam);

// Weight at charge -N with the label sequence
// (..., 0, lambda_{p+1}, ..., lambda_N; lambda_1, ..., lambda_p, 0, ...),
// the semicolon between slots 0 and 1.
GlHatWeight lambda_minus(const GeneralizedPartition& lam);

// Recovers the canonical (sign, level, lambda) encoding, or throws
// NotPrimitive naming the first violated condition.  The zero weight
// classifies as the level-0 object with the plus tag.
PrimitiveLabel classify_primitive(const GlHatWeight& w);

// Pullback along the shift automorphism: lambda -> lambda + k*1.
// Only defined on the plus side; throws SignMismatch otherwise.
PrimitiveLabel nu_twist(const PrimitiveLabel& p, Int k);

// Tensor decomposition: all lambda of level M+N inside the box with
// nonzero rational multiplicity.  Level-0 labels act as the identity in
// every category; otherwise the categories must agree (SignMismatch).
GlDecomposition tensor_category(const PrimitiveLabel& a, const PrimitiveLabel& b,
                                const EnumerationBox& box);

// The equivalence functors: identity on (level, lambda), retags the
// category.
PrimitiveLabel equivalence_map(const PrimitiveLabel& p, Category target);

}  // namespace fockdual
