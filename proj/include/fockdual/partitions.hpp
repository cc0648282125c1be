#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace fockdual {

using Int = long long;
using Integer = mpz_class;
using Rational = mpq_class;

/*
  Partitions and generalized partitions: weakly decreasing integer
  tuples.  A GeneralizedPartition keeps its width explicit, so (1,0)
  of width 2 and (1,0,0) of width 3 are distinct labels; width 0 (the
  empty tuple) is admitted and acts as the trivial label.
*/

// Weakly decreasing, non-negative, canonical form has no trailing zeros.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);

  const std::vector<Int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Int sum() const noexcept;
  // part(i) is 0 beyond length()
  Int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  bool contains(const Partition& mu) const noexcept;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<Int> parts_;
};

// Weakly decreasing integer N-tuple (element of P^N_+), entries may be
// negative.  Width is the number of stored parts, zeros included.
class GeneralizedPartition {
public:
  GeneralizedPartition() = default;
  explicit GeneralizedPartition(std::vector<Int> parts);

  int width() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<Int>& parts() const noexcept { return parts_; }
  Int sum() const noexcept;
  Int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  Int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  Int last() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  // lambda + k*(1,...,1)
  GeneralizedPartition shifted(Int k) const;

  auto operator<=>(const GeneralizedPartition&) const = default;

private:
  std::vector<Int> parts_;
};

// Pads raw with trailing zeros to the requested width and validates.
// Throws NotWeaklyDecreasing / PadViolation.
GeneralizedPartition normalize_generalized(std::vector<Int> raw, int width);

GeneralizedPartition padded(const Partition& p, int width);

struct PolynomialReduction {
  Partition shape;  // lambda + shift*(1,...,1), trailing zeros stripped
  Int shift = 0;    // max(0, -lambda_N)
};

PolynomialReduction polynomial_reduction(const GeneralizedPartition& lam);

// Weyl dimension formula for GL(width); exact.  Width 0 gives 1.
Integer weyl_dimension(const GeneralizedPartition& lam);

// All weakly decreasing width-tuples with entries in [lo, hi], optionally
// with a fixed part sum.  Lexicographically increasing order.
std::vector<GeneralizedPartition> weakly_decreasing_tuples(int width, Int lo, Int hi,
                                                           std::optional<Int> sum = std::nullopt);

// All partitions of n with at most max_len parts, each at most max_part.
std::vector<Partition> partitions_of(Int n, int max_len, Int max_part);

}  // namespace fockdual
