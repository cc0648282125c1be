#include "fockdual/lr.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fockdual {

namespace {

struct Cell {
  int row;
  Int col;
};

// Backtracking enumeration of Littlewood-Richardson fillings of
// lambda/mu with content nu.  Cells are visited in reverse reading
// order (rows top to bottom, right to left within a row), which is the
// order in which the ballot condition is checked.
class LrCounter {
public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lam_(lambda.parts()), nu_(nu.parts()) {
    const int nrows = static_cast<int>(lam_.size());
    mu_.assign(nrows, 0);
    for (std::size_t i = 0; i < mu.length(); ++i) mu_[i] = mu.parts()[i];
    for (int r = 0; r < nrows; ++r) {
      for (Int c = lam_[r] - 1; c >= mu_[r]; --c) cells_.push_back({r, c});
    }
    values_.resize(nrows);
    for (int r = 0; r < nrows; ++r) values_[r].assign(static_cast<std::size_t>(lam_[r]), 0);
    counts_.assign(nu_.size(), 0);
  }

  Integer count() {
    Integer total = 0;
    dfs(0, total);
    return total;
  }

private:
  void dfs(std::size_t idx, Integer& total) {
    if (idx == cells_.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells_[idx];
    // In a ballot filling, row r holds values at most r+1.
    int hi = std::min<int>(static_cast<int>(nu_.size()), r + 1);
    if (c + 1 < lam_[r]) hi = std::min(hi, values_[r][c + 1]);
    int lo = 1;
    if (r > 0 && c < lam_[r - 1] && c >= mu_[r - 1]) {
      lo = std::max(lo, values_[r - 1][c] + 1);
    }
    for (int v = lo; v <= hi; ++v) {
      if (counts_[v - 1] >= nu_[v - 1]) continue;
      if (v > 1 && counts_[v - 1] >= counts_[v - 2]) continue;  // ballot prefix
      values_[r][c] = v;
      ++counts_[v - 1];
      dfs(idx + 1, total);
      --counts_[v - 1];
    }
    values_[r][c] = 0;
  }

  std::vector<Int> lam_;
  std::vector<Int> mu_;
  std::vector<Int> nu_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> values_;
  std::vector<Int> counts_;
};

using LrKey = std::array<std::vector<Int>, 3>;
std::mutex lr_cache_mutex;
std::map<LrKey, Integer> lr_cache;

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.contains(mu)) return 0;
  if (lambda.sum() != mu.sum() + nu.sum()) return 0;
  if (nu.empty()) return lambda == mu ? Integer(1) : Integer(0);
  LrKey key{lambda.parts(), mu.parts(), nu.parts()};
  {
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    auto it = lr_cache.find(key);
    if (it != lr_cache.end()) return it->second;
  }
  Integer value = LrCounter(lambda, mu, nu).count();
  std::lock_guard<std::mutex> lock(lr_cache_mutex);
  return lr_cache.emplace(std::move(key), std::move(value)).first->second;
}

Integer rational_multiplicity(const GeneralizedPartition& lambda, const GeneralizedPartition& mu,
                              const GeneralizedPartition& nu) {
  if (lambda.width() != mu.width() + nu.width()) {
    throw std::invalid_argument("rational_multiplicity: width(lambda) != width(mu) + width(nu)");
  }
  Int k = 0;
  if (lambda.width() > 0) k = std::max(k, -lambda.last());
  if (mu.width() > 0) k = std::max(k, -mu.last());
  if (nu.width() > 0) k = std::max(k, -nu.last());
  return lr_coefficient(Partition(lambda.shifted(k).parts()), Partition(mu.shifted(k).parts()),
                        Partition(nu.shifted(k).parts()));
}

std::vector<BranchingMultiplicity> restrict_weight(const GeneralizedPartition& lambda, int m,
                                                   int n) {
  if (m < 0 || n < 0 || lambda.width() != m + n) {
    throw std::invalid_argument("restrict_weight: width(lambda) must equal m + n");
  }
  std::vector<BranchingMultiplicity> out;
  if (m + n == 0) {
    out.push_back({lambda, GeneralizedPartition{}, GeneralizedPartition{}, 1});
    return out;
  }
  // Nonzero multiplicity forces every part of mu and nu into the window
  // spanned by lambda's extreme parts.
  const Int lo = lambda.last();
  const Int hi = lambda.first();
  for (const auto& mu : weakly_decreasing_tuples(m, lo, hi)) {
    const Int want = lambda.sum() - mu.sum();
    for (const auto& nu : weakly_decreasing_tuples(n, lo, hi, want)) {
      Integer c = rational_multiplicity(lambda, mu, nu);
      if (c != 0) out.push_back({lambda, mu, nu, std::move(c)});
    }
  }
  return out;
}

}  // namespace fockdual
