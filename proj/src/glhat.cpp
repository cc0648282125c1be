#include "fockdual/glhat.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockdual/errors.hpp"
#include "fockdual/lr.hpp"

namespace fockdual {

namespace {

void put(std::map<Int, Int>& h, Int i, Int v) {
  if (v == 0) return;
  auto [it, inserted] = h.emplace(i, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) h.erase(it);
  }
}

}  // namespace

GlHatWeight lambda_plus(const GeneralizedPartition& lam) {
  GlHatWeight w;
  w.central_charge = lam.width();
  for (Int x : lam.parts()) put(w.h, x, 1);
  return w;
}

GlHatWeight lambda_minus(const GeneralizedPartition& lam) {
  const int n = lam.width();
  GlHatWeight w;
  w.central_charge = -static_cast<Int>(n);
  if (n == 0) return w;
  // Split index p with lambda_p >= 0 >= lambda_{p+1}.  The label
  // sequence holds lambda_1..lambda_p at slots 1..p and
  // lambda_{p+1}..lambda_N at slots ending at 0.
  int p = 0;
  while (p < n && lam.parts()[p] >= 0) ++p;
  std::map<Int, Int> labels;
  for (int j = 1; j <= p; ++j) {
    if (lam.parts()[j - 1] != 0) labels[j] = lam.parts()[j - 1];
  }
  for (int j = p + 1; j <= n; ++j) {
    if (lam.parts()[j - 1] != 0) labels[-(static_cast<Int>(n) - j)] = lam.parts()[j - 1];
  }
  auto label_at = [&](Int i) -> Int {
    auto it = labels.find(i);
    return it == labels.end() ? 0 : it->second;
  };
  Int lo = 0, hi = 0;
  if (!labels.empty()) {
    lo = std::min<Int>(labels.begin()->first - 1, 0);
    hi = std::max<Int>(labels.rbegin()->first, 0);
  }
  for (Int i = lo; i <= hi; ++i) {
    put(w.h, i, label_at(i) - label_at(i + 1) + (i == 0 ? w.central_charge : 0));
  }
  return w;
}

PrimitiveLabel classify_primitive(const GlHatWeight& w) {
  const Int c = w.central_charge;
  if (c >= 0) {
    Int total = 0;
    for (const auto& [i, hi] : w.h) {
      if (hi < 0) {
        throw DomainError("NotPrimitive", "negative h value at non-negative central charge");
      }
      total += hi;
    }
    if (total != c) {
      throw DomainError("NotPrimitive", "sum of h values does not equal the central charge");
    }
    std::vector<Int> parts;
    parts.reserve(static_cast<std::size_t>(c));
    for (auto it = w.h.rbegin(); it != w.h.rend(); ++it) {
      for (Int k = 0; k < it->second; ++k) parts.push_back(it->first);
    }
    return PrimitiveLabel{Category::OPlus, GeneralizedPartition(std::move(parts))};
  }

  const Int n = -c;
  Int total = 0;
  for (const auto& [i, hi] : w.h) {
    if (i != 0 && hi < 0) {
      throw DomainError("NotPrimitive", "negative h value away from slot 0");
    }
    total += hi;
  }
  if (!w.h.empty()) {
    const Int span = w.h.rbegin()->first - w.h.begin()->first;
    if (span > n) {
      throw DomainError("NotPrimitive", "support width of h exceeds the level");
    }
  }
  if (total != c) {
    throw DomainError("NotPrimitive", "sum of h values does not equal the central charge");
  }

  // Invert the label sequence: for slots i >= 1 the label is the sum of
  // h_j over j >= i; for slots i <= 0 it is minus the sum over j < i.
  std::vector<Int> right;  // labels at slots 1, 2, ...
  const Int top = w.h.empty() ? 0 : w.h.rbegin()->first;
  if (top >= 1) {
    right.assign(static_cast<std::size_t>(top), 0);
    Int acc = 0;
    for (Int i = top; i >= 1; --i) {
      auto it = w.h.find(i);
      if (it != w.h.end()) acc += it->second;
      right[static_cast<std::size_t>(i - 1)] = acc;
    }
    while (!right.empty() && right.back() == 0) right.pop_back();
  }
  std::vector<Int> left;  // labels at slots 0, -1, -2, ...
  const Int bottom = w.h.empty() ? 0 : w.h.begin()->first;
  if (bottom <= -1) {
    left.assign(static_cast<std::size_t>(-bottom), 0);
    Int acc = 0;  // sum of h_j for j < i, built from the bottom up
    for (Int i = bottom + 1; i <= 0; ++i) {
      auto it = w.h.find(i - 1);
      if (it != w.h.end()) acc += it->second;
      left[static_cast<std::size_t>(-i)] = -acc;
    }
    while (!left.empty() && left.back() == 0) left.pop_back();
  }

  const Int q = static_cast<Int>(right.size());
  const Int r = static_cast<Int>(left.size());
  if (q + r > n) {
    throw DomainError("NotPrimitive", "labels require more than level-many slots");
  }
  std::vector<Int> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (Int v : right) parts.push_back(v);
  for (Int k = 0; k < n - q - r; ++k) parts.push_back(0);
  for (auto it = left.rbegin(); it != left.rend(); ++it) parts.push_back(*it);
  return PrimitiveLabel{Category::OMinus, GeneralizedPartition(std::move(parts))};
}

PrimitiveLabel nu_twist(const PrimitiveLabel& p, Int k) {
  if (p.cat != Category::OPlus) {
    throw DomainError("SignMismatch", "nu_twist is defined on the plus side only");
  }
  return PrimitiveLabel{p.cat, p.lam.shifted(k)};
}

GlDecomposition tensor_category(const PrimitiveLabel& a, const PrimitiveLabel& b,
                                const EnumerationBox& box) {
  if (box.lo > box.hi) throw std::invalid_argument("enumeration box has lo > hi");
  GlDecomposition out;
  out.box = box;
  if (a.level() == 0) {
    out.terms.emplace(b, 1);
    return out;
  }
  if (b.level() == 0) {
    out.terms.emplace(a, 1);
    return out;
  }
  if (a.cat != b.cat) {
    throw DomainError("SignMismatch", "tensor factors live in different categories");
  }
  const auto& mu = a.lam;
  const auto& nu = b.lam;
  // The sum over lambda is genuinely infinite (the common shift grows
  // with the box), so the box is the only truncation; part sums are
  // conserved.
  for (const auto& lam :
       weakly_decreasing_tuples(a.level() + b.level(), box.lo, box.hi, mu.sum() + nu.sum())) {
    Integer c = rational_multiplicity(lam, mu, nu);
    if (c != 0) out.terms.emplace(PrimitiveLabel{a.cat, lam}, std::move(c));
  }
  return out;
}

PrimitiveLabel equivalence_map(const PrimitiveLabel& p, Category target) {
  return PrimitiveLabel{target, p.lam};
}

}  // namespace fockdual
