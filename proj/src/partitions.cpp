#include "fockdual/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fockdual/errors.hpp"

namespace fockdual {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    if (parts_[i] < parts_[i + 1]) {
      throw DomainError("NotWeaklyDecreasing", "partition parts must be weakly decreasing");
    }
  }
  if (!parts_.empty() && parts_.back() < 0) {
    throw std::invalid_argument("negative part in Partition");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Int Partition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

bool Partition::contains(const Partition& mu) const noexcept {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu.parts_[i] > parts_[i]) return false;
  }
  return true;
}

GeneralizedPartition::GeneralizedPartition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    if (parts_[i] < parts_[i + 1]) {
      throw DomainError("NotWeaklyDecreasing", "parts must be weakly decreasing");
    }
  }
}

Int GeneralizedPartition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

GeneralizedPartition GeneralizedPartition::shifted(Int k) const {
  std::vector<Int> v = parts_;
  for (Int& x : v) x += k;
  GeneralizedPartition out;
  out.parts_ = std::move(v);  // shift preserves monotonicity
  return out;
}

GeneralizedPartition normalize_generalized(std::vector<Int> raw, int width) {
  if (width < 0) throw std::invalid_argument("negative width");
  if (raw.size() > static_cast<std::size_t>(width)) {
    throw std::invalid_argument("more parts than width");
  }
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    if (raw[i] < raw[i + 1]) {
      throw DomainError("NotWeaklyDecreasing", "parts must be weakly decreasing");
    }
  }
  if (raw.size() < static_cast<std::size_t>(width) && !raw.empty() && raw.back() < 0) {
    throw DomainError("PadViolation",
                      "cannot pad with zeros below a negative part; supply the full-width tuple");
  }
  raw.resize(static_cast<std::size_t>(width), 0);
  return GeneralizedPartition(std::move(raw));
}

GeneralizedPartition padded(const Partition& p, int width) {
  return normalize_generalized(p.parts(), width);
}

PolynomialReduction polynomial_reduction(const GeneralizedPartition& lam) {
  Int k = lam.width() == 0 ? 0 : std::max<Int>(0, -lam.last());
  std::vector<Int> v = lam.parts();
  for (Int& x : v) x += k;
  return PolynomialReduction{Partition(std::move(v)), k};
}

Integer weyl_dimension(const GeneralizedPartition& lam) {
  const int n = lam.width();
  if (n <= 1) return 1;
  Integer num = 1, den = 1;
  const auto& p = lam.parts();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= Integer(p[i] - p[j] + j - i);
      den *= Integer(j - i);
    }
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

namespace {

void tuples_rec(int width, Int lo, Int hi, const std::optional<Int>& sum, std::vector<Int>& cur,
                Int cur_sum, std::vector<GeneralizedPartition>& out) {
  const int placed = static_cast<int>(cur.size());
  if (placed == width) {
    if (!sum || cur_sum == *sum) out.emplace_back(cur);
    return;
  }
  const Int cap = placed == 0 ? hi : std::min(hi, cur.back());
  const int rest = width - placed - 1;
  for (Int v = lo; v <= cap; ++v) {
    if (sum) {
      const Int rem = *sum - cur_sum - v;
      if (rem < static_cast<Int>(rest) * lo || rem > static_cast<Int>(rest) * v) continue;
    }
    cur.push_back(v);
    tuples_rec(width, lo, hi, sum, cur, cur_sum + v, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<GeneralizedPartition> weakly_decreasing_tuples(int width, Int lo, Int hi,
                                                           std::optional<Int> sum) {
  std::vector<GeneralizedPartition> out;
  if (width < 0 || lo > hi) return out;
  if (width == 0) {
    if (!sum || *sum == 0) out.emplace_back();
    return out;
  }
  std::vector<Int> cur;
  cur.reserve(width);
  tuples_rec(width, lo, hi, sum, cur, 0, out);
  return out;
}

std::vector<Partition> partitions_of(Int n, int max_len, Int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int remaining, Int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (Int v = std::min(cap, remaining); v >= 1; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

}  // namespace fockdual
