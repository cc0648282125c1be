#include "fockdual/winfinity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fockdual/errors.hpp"

namespace fockdual {

namespace {

Rational floor_rational(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

}  // namespace

Int PrimitiveWModule::central_charge() const noexcept {
  Int c = 0;
  for (const auto& f : factors) c += f.level();
  return c;
}

Int ExponentMultiset::charge() const noexcept {
  Int c = 0;
  for (const auto& [r, m] : entries) c += m;
  return c;
}

PrimitiveWModule canonicalize(const PrimitiveWModule& raw) {
  PrimitiveWModule out;
  out.factors.reserve(raw.factors.size());
  for (const auto& f : raw.factors) {
    if (f.level() == 0) throw std::invalid_argument("factor level must be positive");
    Rational l = floor_rational(f.s);
    Int li = static_cast<Int>(mpz_get_si(l.get_num_mpz_t()));
    out.factors.push_back(WFactor{f.lam.shifted(-li), f.s - l});
  }
  std::sort(out.factors.begin(), out.factors.end());
  for (std::size_t i = 0; i + 1 < out.factors.size(); ++i) {
    if (out.factors[i].s == out.factors[i + 1].s) {
      throw DomainError("CongruentExponents", "two factors share the same base point mod Z");
    }
  }
  return out;
}

bool is_canonical(const PrimitiveWModule& m) {
  for (const auto& f : m.factors) {
    if (f.s < 0 || f.s >= 1) return false;
  }
  for (std::size_t i = 0; i + 1 < m.factors.size(); ++i) {
    if (!(m.factors[i].s < m.factors[i + 1].s)) return false;
  }
  return true;
}

ExponentMultiset exponents(const PrimitiveWModule& m) {
  ExponentMultiset out;
  for (const auto& f : m.factors) {
    const GlHatWeight w = lambda_plus(f.lam);
    for (const auto& [j, hj] : w.h) {
      out.entries[f.s - Rational(j)] += hj;
    }
  }
  for (auto it = out.entries.begin(); it != out.entries.end();) {
    it = it->second == 0 ? out.entries.erase(it) : std::next(it);
  }
  return out;
}

std::vector<Rational> delta_xi(const DeltaSeries& d, int upto) {
  if (upto < 0) throw std::invalid_argument("delta_xi: negative order");
  Int total = 0;
  for (const auto& [r, m] : d.exps.entries) total += m;
  if (total != d.central_charge) {
    throw DomainError("ChargeMismatch",
                      "exponent multiplicities do not sum to the central charge");
  }
  const int k = upto;
  // Numerator sum m_i e^{r_i x} - c has coefficients a_n = sum m_i r_i^n / n!
  // for n >= 1 and a_0 = 0.  Dividing by e^x - 1 = x * sum x^n/(n+1)!
  // gives the quotient recursion below.
  std::vector<Rational> a(static_cast<std::size_t>(k) + 2, Rational(0));
  for (const auto& [r, m] : d.exps.entries) {
    Rational pow(1);
    Rational fact(1);
    for (int n = 0; n <= k + 1; ++n) {
      if (n > 0) {
        pow *= r;
        fact *= n;
      }
      if (n >= 1) a[static_cast<std::size_t>(n)] += Rational(m) * pow / fact;
    }
  }
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1, Rational(0));
  {
    Rational fact(1);  // (n+1)!
    for (int n = 0; n <= k; ++n) {
      fact *= n + 1;
      b[static_cast<std::size_t>(n)] = Rational(1) / fact;
    }
  }
  std::vector<Rational> q(static_cast<std::size_t>(k) + 1, Rational(0));
  for (int n = 0; n <= k; ++n) {
    Rational acc = a[static_cast<std::size_t>(n) + 1];
    for (int j = 0; j < n; ++j) {
      acc -= q[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)];
    }
    q[static_cast<std::size_t>(n)] = acc;  // b[0] = 1
  }
  std::vector<Rational> xi(static_cast<std::size_t>(k) + 1);
  Rational fact(1);
  for (int n = 0; n <= k; ++n) {
    if (n > 0) fact *= n;
    xi[static_cast<std::size_t>(n)] = fact * q[static_cast<std::size_t>(n)];
    xi[static_cast<std::size_t>(n)].canonicalize();
  }
  return xi;
}

bool is_isomorphic(const PrimitiveWModule& a, const PrimitiveWModule& b) {
  return canonicalize(a) == canonicalize(b);
}

WDecomposition tensor_w(const PrimitiveWModule& a, const PrimitiveWModule& b,
                        const EnumerationBox& box) {
  if (!is_canonical(a) || !is_canonical(b)) {
    throw DomainError("NonCanonicalInput", "tensor_w requires canonical modules");
  }
  WDecomposition out;
  out.box = box;

  std::map<Rational, const WFactor*> left, right;
  for (const auto& f : a.factors) left.emplace(f.s, &f);
  for (const auto& f : b.factors) right.emplace(f.s, &f);

  std::vector<WFactor> passthrough;
  struct SharedClass {
    Rational s;
    std::vector<std::pair<GeneralizedPartition, Integer>> options;
  };
  std::vector<SharedClass> shared;
  for (const auto& [s, f] : left) {
    if (!right.count(s)) passthrough.push_back(*f);
  }
  for (const auto& [s, f] : right) {
    if (!left.count(s)) passthrough.push_back(*f);
  }
  for (const auto& [s, f] : left) {
    auto it = right.find(s);
    if (it == right.end()) continue;
    SharedClass cls;
    cls.s = s;
    const GlDecomposition d =
        tensor_category(PrimitiveLabel{Category::OPlus, f->lam},
                        PrimitiveLabel{Category::OPlus, it->second->lam}, box);
    for (const auto& [label, mult] : d.terms) cls.options.emplace_back(label.lam, mult);
    shared.push_back(std::move(cls));
  }

  if (shared.empty()) {
    // Disjoint congruence classes: the product is already irreducible.
    PrimitiveWModule term;
    term.factors = std::move(passthrough);
    std::sort(term.factors.begin(), term.factors.end());
    out.terms.emplace(std::move(term), 1);
    return out;
  }

  std::vector<std::size_t> pick(shared.size(), 0);
  for (;;) {
    bool viable = true;
    for (std::size_t i = 0; i < shared.size(); ++i) {
      if (shared[i].options.empty()) {
        viable = false;
        break;
      }
    }
    if (!viable) break;
    PrimitiveWModule term;
    term.factors = passthrough;
    Integer mult = 1;
    for (std::size_t i = 0; i < shared.size(); ++i) {
      const auto& [lam, c] = shared[i].options[pick[i]];
      term.factors.push_back(WFactor{lam, shared[i].s});
      mult *= c;
    }
    std::sort(term.factors.begin(), term.factors.end());
    auto [it, inserted] = out.terms.emplace(std::move(term), mult);
    if (!inserted) it->second += mult;
    // next choice vector
    std::size_t i = 0;
    while (i < shared.size()) {
      if (++pick[i] < shared[i].options.size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == shared.size()) break;
  }
  return out;
}

}  // namespace fockdual
