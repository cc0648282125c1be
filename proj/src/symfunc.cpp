#include "fockdual/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "fockdual/errors.hpp"

namespace fockdual {

void SymPolynomial::add_term(const std::vector<Int>& expo, const Integer& c) {
  if (c == 0) return;
  auto it = terms.find(expo);
  if (it == terms.end()) {
    terms.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& o) {
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

SymPolynomial SymPolynomial::operator*(const SymPolynomial& o) const {
  SymPolynomial out;
  out.nvars = nvars;
  std::vector<Int> e(nvars);
  for (const auto& [ea, ca] : terms) {
    for (const auto& [eb, cb] : o.terms) {
      for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool SymPolynomial::is_symmetric() const {
  std::vector<Int> swapped;
  for (const auto& [e, c] : terms) {
    for (int i = 0; i + 1 < nvars; ++i) {
      if (e[i] == e[i + 1]) continue;
      swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = terms.find(swapped);
      if (it == terms.end() || it->second != c) return false;
    }
  }
  return true;
}

Integer SymPolynomial::eval_ones() const {
  Integer s = 0;
  for (const auto& [e, c] : terms) s += c;
  return s;
}

namespace {

// Enumerates semistandard tableaux of the given straight shape with
// entries in 1..nvars, row-major backtracking.
void ssyt_rec(const std::vector<Int>& rows, int nvars, int r, Int c,
              std::vector<std::vector<int>>& tab, std::vector<Int>& content,
              SymPolynomial& out) {
  if (r == static_cast<int>(rows.size())) {
    out.add_term(content, 1);
    return;
  }
  if (c == rows[r]) {
    ssyt_rec(rows, nvars, r + 1, 0, tab, content, out);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, tab[r][c - 1]);
  if (r > 0 && c < rows[r - 1]) lo = std::max(lo, tab[r - 1][c] + 1);
  for (int v = lo; v <= nvars; ++v) {
    tab[r][c] = v;
    ++content[v - 1];
    ssyt_rec(rows, nvars, r, c + 1, tab, content, out);
    --content[v - 1];
  }
}

SymPolynomial schur_uncached(const GeneralizedPartition& lam, int nvars) {
  const auto red = polynomial_reduction(lam);
  SymPolynomial out;
  out.nvars = nvars;
  const auto& rows = red.shape.parts();
  if (static_cast<int>(rows.size()) > nvars) return out;  // zero
  std::vector<std::vector<int>> tab;
  for (Int len : rows) tab.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<Int> content(nvars, 0);
  ssyt_rec(rows, nvars, 0, 0, tab, content, out);
  if (red.shift != 0) {
    SymPolynomial shifted;
    shifted.nvars = nvars;
    for (auto& [e, c] : out.terms) {
      std::vector<Int> e2 = e;
      for (Int& x : e2) x -= red.shift;
      shifted.terms.emplace(std::move(e2), c);
    }
    return shifted;
  }
  return out;
}

std::mutex schur_cache_mutex;
std::map<std::pair<GeneralizedPartition, int>, std::shared_ptr<const SymPolynomial>> schur_cache;

}  // namespace

SymPolynomial schur_polynomial(const GeneralizedPartition& lam, int nvars) {
  if (lam.width() != nvars) {
    throw std::invalid_argument("schur_polynomial: width(lambda) must equal nvars");
  }
  const auto key = std::make_pair(lam, nvars);
  {
    std::lock_guard<std::mutex> lock(schur_cache_mutex);
    auto it = schur_cache.find(key);
    if (it != schur_cache.end()) return *it->second;
  }
  auto value = std::make_shared<const SymPolynomial>(schur_uncached(lam, nvars));
  std::lock_guard<std::mutex> lock(schur_cache_mutex);
  schur_cache.emplace(key, value);
  return *value;
}

LaurentSchurExpansion schur_decompose(const SymPolynomial& p) {
  if (!p.is_symmetric()) {
    throw DomainError("NotSymmetric", "polynomial is not invariant under variable permutation");
  }
  LaurentSchurExpansion out;
  out.nvars = p.nvars;
  SymPolynomial rest = p;
  const std::size_t bound = p.terms.size();
  std::size_t iterations = 0;
  while (!rest.terms.empty()) {
    if (iterations++ > bound) {
      throw DomainError("NonTerminating", "leading-term subtraction exceeded its iteration bound");
    }
    const auto& [e, c] = *rest.terms.rbegin();
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] < e[i + 1]) {
        throw DomainError("NotSymmetric", "lex-greatest term is not weakly decreasing");
      }
    }
    GeneralizedPartition lam{std::vector<Int>(e)};
    Integer coeff = c;
    SymPolynomial s = schur_polynomial(lam, p.nvars);
    for (const auto& [se, sc] : s.terms) rest.add_term(se, -coeff * sc);
    out.coeffs.emplace(std::move(lam), std::move(coeff));
  }
  return out;
}

SymPolynomial expansion_polynomial(const LaurentSchurExpansion& e) {
  SymPolynomial out;
  out.nvars = e.nvars;
  for (const auto& [lam, c] : e.coeffs) {
    SymPolynomial s = schur_polynomial(lam, e.nvars);
    for (const auto& [se, sc] : s.terms) out.add_term(se, c * sc);
  }
  return out;
}

SymPolynomial embed(const SymPolynomial& p, int offset, int new_nvars) {
  if (offset < 0 || offset + p.nvars > new_nvars) {
    throw std::invalid_argument("embed: variable block out of range");
  }
  SymPolynomial out;
  out.nvars = new_nvars;
  for (const auto& [e, c] : p.terms) {
    std::vector<Int> e2(new_nvars, 0);
    std::copy(e.begin(), e.end(), e2.begin() + offset);
    out.terms.emplace(std::move(e2), c);
  }
  return out;
}

}  // namespace fockdual
