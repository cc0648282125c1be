#include "fockdual/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "fockdual/errors.hpp"
#include "fockdual/lr.hpp"

namespace fockdual {

namespace {

using Graded = std::vector<SymPolynomial>;

Graded graded_unit(int nvars, int order) {
  Graded g(static_cast<std::size_t>(order) + 1);
  for (auto& p : g) p.nvars = nvars;
  g[0].terms.emplace(std::vector<Int>(static_cast<std::size_t>(nvars), 0), Integer(1));
  return g;
}

// Single bc-pair character in one variable.  The per-step charge bound
// is widened by the order: a state whose final charge is in the window
// can pass through intermediate charges at most that much larger.
Graded pair_series(Category sign, int order, Int window) {
  const Int wide = window + order;
  auto clamp_add = [&](SymPolynomial& dst, Int charge, const Integer& c) {
    if (charge < -wide || charge > wide) return;
    dst.add_term({charge}, c);
  };
  Graded g = graded_unit(1, order);
  if (sign == Category::OPlus) {
    // creators: charge +1 at energies 1..order, charge -1 at energies 0..order
    for (int m = 1; m <= order; ++m) {
      Graded next = g;
      for (int d = 0; d + m <= order; ++d) {
        for (const auto& [e, c] : g[static_cast<std::size_t>(d)].terms) {
          clamp_add(next[static_cast<std::size_t>(d + m)], e[0] + 1, c);
        }
      }
      g = std::move(next);
    }
    for (int m = 0; m <= order; ++m) {
      Graded next = g;
      for (int d = 0; d + m <= order; ++d) {
        for (const auto& [e, c] : g[static_cast<std::size_t>(d)].terms) {
          clamp_add(next[static_cast<std::size_t>(d + m)], e[0] - 1, c);
        }
      }
      g = std::move(next);
    }
  } else {
    // bosonic: unlimited multiplicity per mode
    for (int m = 1; m <= order; ++m) {
      Graded next(static_cast<std::size_t>(order) + 1);
      for (auto& p : next) p.nvars = 1;
      for (int d = 0; d <= order; ++d) {
        for (const auto& [e, c] : g[static_cast<std::size_t>(d)].terms) {
          for (int j = 0; d + j * m <= order; ++j) {
            clamp_add(next[static_cast<std::size_t>(d + j * m)], e[0] + j, c);
          }
        }
      }
      g = std::move(next);
    }
    for (int m = 0; m <= order; ++m) {
      Graded next(static_cast<std::size_t>(order) + 1);
      for (auto& p : next) p.nvars = 1;
      for (int d = 0; d <= order; ++d) {
        for (const auto& [e, c] : g[static_cast<std::size_t>(d)].terms) {
          const Int jmax = m == 0 ? (e[0] + wide) : static_cast<Int>((order - d) / m);
          for (Int j = 0; j <= jmax; ++j) {
            clamp_add(next[static_cast<std::size_t>(d + j * m)], e[0] - j, c);
          }
        }
      }
      g = std::move(next);
    }
  }
  // final truncation to the declared window
  for (auto& p : g) {
    for (auto it = p.terms.begin(); it != p.terms.end();) {
      it = (it->first[0] < -window || it->first[0] > window) ? p.terms.erase(it) : std::next(it);
    }
  }
  return g;
}

}  // namespace

std::vector<SymPolynomial> fock_graded(int npairs, Category sign, int order, Int window) {
  if (npairs < 0 || order < 0 || window < 0) {
    throw std::invalid_argument("fock_graded: negative argument");
  }
  if (sign != Category::OPlus && sign != Category::OMinus) {
    throw std::invalid_argument("fock_graded: sign must be + or -");
  }
  Graded acc = graded_unit(npairs, order);
  if (npairs == 0) return acc;
  const Graded pair = pair_series(sign, order, window);
  for (int p = 0; p < npairs; ++p) {
    Graded next(static_cast<std::size_t>(order) + 1);
    for (auto& q : next) q.nvars = npairs;
    for (int d1 = 0; d1 <= order; ++d1) {
      if (acc[static_cast<std::size_t>(d1)].terms.empty()) continue;
      for (int d2 = 0; d1 + d2 <= order; ++d2) {
        for (const auto& [ea, ca] : acc[static_cast<std::size_t>(d1)].terms) {
          for (const auto& [eb, cb] : pair[static_cast<std::size_t>(d2)].terms) {
            std::vector<Int> e = ea;
            e[static_cast<std::size_t>(p)] = eb[0];
            next[static_cast<std::size_t>(d1 + d2)].add_term(e, ca * cb);
          }
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

Int fermionic_reach(int order) {
  Int k = 0;
  while ((k + 1) * k / 2 <= order) ++k;
  return k;
}

Int default_charge_window(int npairs, Category sign, int order) {
  if (sign == Category::OPlus) return fermionic_reach(order);
  return std::max<Int>(order, static_cast<Int>(npairs) * order);
}

Int charge_window_for(const GeneralizedPartition& lam, Category sign, int order) {
  Int coord = 0;
  for (Int x : lam.parts()) coord = std::max(coord, std::llabs(x));
  if (sign == Category::OPlus) return std::max(coord, fermionic_reach(order));
  // On the minus side, charge +k costs energy k while negative charge is
  // free; labels outside the window that are still reachable at this
  // order all have part sum below |lam|, so pushing the window past
  // (width-1)*order - |lam| keeps the extraction unpolluted.
  const Int guard = static_cast<Int>(lam.width() > 0 ? lam.width() - 1 : 0) * order - lam.sum();
  return std::max({coord, static_cast<Int>(order), guard});
}

namespace {

struct FockData {
  std::vector<SymPolynomial> graded;
  QSeries decomposed;
};

std::mutex fock_cache_mutex;
std::map<std::tuple<int, char, int, Int>, std::shared_ptr<const FockData>> fock_cache;

std::shared_ptr<const FockData> fock_data(int npairs, Category sign, int order, Int window) {
  const auto key = std::make_tuple(npairs, static_cast<char>(sign), order, window);
  {
    std::lock_guard<std::mutex> lock(fock_cache_mutex);
    auto it = fock_cache.find(key);
    if (it != fock_cache.end()) return it->second;
  }
  auto data = std::make_shared<FockData>();
  data->graded = fock_graded(npairs, sign, order, window);
  data->decomposed.nvars = npairs;
  data->decomposed.order = order;
  data->decomposed.coeffs.resize(static_cast<std::size_t>(order) + 1);
  for (int d = 0; d <= order; ++d) {
    auto& slot = data->decomposed.coeffs[static_cast<std::size_t>(d)];
    slot = schur_decompose(data->graded[static_cast<std::size_t>(d)]);
    for (const auto& [lam, c] : slot.coeffs) {
      if (c < 0) {
        throw DomainError("WindowTooSmall",
                          "negative graded multiplicity: enlarge the charge window");
      }
    }
    // The decomposition must reconstruct the graded coefficient exactly;
    // this is the degreewise duality check.
    if (expansion_polynomial(slot) != data->graded[static_cast<std::size_t>(d)]) {
      throw DomainError("WindowTooSmall", "graded coefficient failed to reconstruct");
    }
  }
  std::lock_guard<std::mutex> lock(fock_cache_mutex);
  return fock_cache.emplace(key, std::move(data)).first->second;
}

}  // namespace

QSeries fock_series(int npairs, Category sign, int order, Int window) {
  return fock_data(npairs, sign, order, window)->decomposed;
}

BranchingFunction branching_function(const GeneralizedPartition& lam, Category sign, int order,
                                     std::optional<Int> window) {
  const Int w = window ? *window : charge_window_for(lam, sign, order);
  for (Int x : lam.parts()) {
    if (x < -w || x > w) {
      throw DomainError("WindowTooSmall", "label lies outside the charge window");
    }
  }
  const auto data = fock_data(lam.width(), sign, order, w);
  BranchingFunction out;
  out.lam = lam;
  out.sign = sign;
  out.series.assign(static_cast<std::size_t>(order) + 1, Integer(0));
  for (int d = 0; d <= order; ++d) {
    const auto& slot = data->decomposed.coeffs[static_cast<std::size_t>(d)];
    auto it = slot.coeffs.find(lam);
    if (it != slot.coeffs.end()) out.series[static_cast<std::size_t>(d)] = it->second;
  }
  return out;
}

QSeries add(const QSeries& x, const QSeries& y) {
  if (x.nvars != y.nvars) throw std::invalid_argument("QSeries add: variable counts differ");
  QSeries out;
  out.nvars = x.nvars;
  out.order = std::min(x.order, y.order);
  out.coeffs.resize(static_cast<std::size_t>(out.order) + 1);
  for (int d = 0; d <= out.order; ++d) {
    auto& slot = out.coeffs[static_cast<std::size_t>(d)];
    slot.nvars = x.nvars;
    slot = x.coeffs[static_cast<std::size_t>(d)];
    for (const auto& [lam, c] : y.coeffs[static_cast<std::size_t>(d)].coeffs) {
      auto [it, inserted] = slot.coeffs.emplace(lam, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) slot.coeffs.erase(it);
      }
    }
  }
  return out;
}

QSeries multiply(const QSeries& x, const QSeries& y) {
  if (x.nvars != y.nvars) throw std::invalid_argument("QSeries multiply: variable counts differ");
  QSeries out;
  out.nvars = x.nvars;
  out.order = std::min(x.order, y.order);
  out.coeffs.resize(static_cast<std::size_t>(out.order) + 1);
  for (int d = 0; d <= out.order; ++d) {
    SymPolynomial acc;
    acc.nvars = x.nvars;
    for (int d1 = 0; d1 <= d; ++d1) {
      const auto& a = x.coeffs[static_cast<std::size_t>(d1)];
      const auto& b = y.coeffs[static_cast<std::size_t>(d - d1)];
      if (a.coeffs.empty() || b.coeffs.empty()) continue;
      acc += expansion_polynomial(a) * expansion_polynomial(b);
    }
    out.coeffs[static_cast<std::size_t>(d)] = schur_decompose(acc);
  }
  return out;
}

bool TensorCharacterReport::passed() const noexcept {
  return std::all_of(residual.begin(), residual.end(), [](const Integer& r) { return r == 0; });
}

TensorCharacterReport verify_tensor_characters(const GeneralizedPartition& mu,
                                               const GeneralizedPartition& nu, Category sign,
                                               int order, std::optional<EnumerationBox> box) {
  const int m = mu.width();
  const int n = nu.width();
  const BranchingFunction bmu = branching_function(mu, sign, order);
  const BranchingFunction bnu = branching_function(nu, sign, order);
  std::vector<Integer> lhs(static_cast<std::size_t>(order) + 1, Integer(0));
  for (int d1 = 0; d1 <= order; ++d1) {
    for (int d2 = 0; d1 + d2 <= order; ++d2) {
      lhs[static_cast<std::size_t>(d1 + d2)] +=
          bmu.series[static_cast<std::size_t>(d1)] * bnu.series[static_cast<std::size_t>(d2)];
    }
  }

  const Int sum = mu.sum() + nu.sum();

  // A label only contributes below the order when its states are
  // energetically reachable; that bounds the active part range and
  // gives both the growth cap and a uniform extraction window.
  EnumerationBox active{0, 0};
  Int w;
  if (sign == Category::OPlus) {
    const Int reach = fermionic_reach(order);
    active = EnumerationBox{-reach, reach};
    w = reach;
  } else {
    // positive charge costs its own size, negative charge is free
    const Int lo_active = sum - static_cast<Int>(m + n > 0 ? m + n - 1 : 0) * order;
    active = EnumerationBox{std::min<Int>(lo_active, 0), std::max<Int>(order, 0)};
    const Int guard = static_cast<Int>(m + n > 0 ? m + n - 1 : 0) * order - sum;
    w = std::max({static_cast<Int>(order), guard, std::llabs(active.lo), std::llabs(active.hi)});
  }

  EnumerationBox cur = box ? *box : EnumerationBox{std::min<Int>(mu.last() + nu.last(), -1),
                                                   std::max<Int>(mu.first() + nu.first(), 1)};
  const EnumerationBox cap{std::min(cur.lo, active.lo - 1), std::max(cur.hi, active.hi + 1)};
  TensorCharacterReport report;
  for (;;) {
    report.box = cur;
    report.window = w;
    report.lambda_terms.clear();
    std::vector<Integer> rhs(static_cast<std::size_t>(order) + 1, Integer(0));
    for (const auto& lam : weakly_decreasing_tuples(m + n, cur.lo, cur.hi, sum)) {
      Integer c = rational_multiplicity(lam, mu, nu);
      if (c == 0) continue;
      // Skip labels that cannot reach any state below the order; their
      // series vanish identically there.
      Int energy_floor = 0;
      for (Int x : lam.parts()) {
        if (sign == Category::OPlus) {
          energy_floor += x >= 0 ? x * (x + 1) / 2 : (-x) * (-x - 1) / 2;
        } else if (x > 0) {
          energy_floor += x;
        }
      }
      if (energy_floor <= order) {
        const BranchingFunction bl = branching_function(lam, sign, order, w);
        for (int d = 0; d <= order; ++d) {
          rhs[static_cast<std::size_t>(d)] += c * bl.series[static_cast<std::size_t>(d)];
        }
      }
      report.lambda_terms.emplace_back(lam, std::move(c));
    }
    report.residual.assign(static_cast<std::size_t>(order) + 1, Integer(0));
    for (int d = 0; d <= order; ++d) {
      report.residual[static_cast<std::size_t>(d)] =
          lhs[static_cast<std::size_t>(d)] - rhs[static_cast<std::size_t>(d)];
    }
    if (report.passed()) return report;
    if (cur.lo <= cap.lo && cur.hi >= cap.hi) {
      throw DomainError("BoxCapExceeded", "residual did not stabilize at zero within the cap");
    }
    cur.lo = std::max(cap.lo, cur.lo - 1);
    cur.hi = std::min(cap.hi, cur.hi + 1);
  }
}

}  // namespace fockdual
