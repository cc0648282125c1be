#include "fockdual/literals.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fockdual {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string t = trimmed(text);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trimmed(item);
    if (item.empty()) throw std::invalid_argument("empty entry in integer list");
    std::size_t pos = 0;
    Int v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

GeneralizedPartition parse_generalized(const std::string& text) {
  std::string t = trimmed(text);
  const auto colon = t.find(':');
  if (colon != std::string::npos) {
    std::size_t pos = 0;
    const std::string head = trimmed(t.substr(0, colon));
    long width = std::stol(head, &pos);
    if (pos != head.size() || width < 0) throw std::invalid_argument("bad width prefix");
    std::string body = trimmed(t.substr(colon + 1));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw std::invalid_argument("expected [a,b,...] after width prefix");
    }
    return normalize_generalized(parse_int_list(body.substr(1, body.size() - 2)),
                                 static_cast<int>(width));
  }
  std::vector<Int> parts = parse_int_list(t);
  const int width = static_cast<int>(parts.size());
  return normalize_generalized(std::move(parts), width);
}

Partition parse_partition(const std::string& text) {
  const GeneralizedPartition g = parse_generalized(text);
  return Partition(g.parts());
}

Rational parse_rational(const std::string& text) {
  std::string t = trimmed(text);
  if (t.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0) {
    throw std::invalid_argument("bad rational '" + t + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

PrimitiveWModule parse_wmodule(const std::string& text) {
  PrimitiveWModule out;
  std::string t = trimmed(text);
  if (t == "1" || t.empty()) return out;
  std::stringstream ss(t);
  std::string token;
  while (std::getline(ss, token, '*')) {
    token = trimmed(token);
    if (token == "1") continue;
    if (token.size() < 4 || token.front() != 'L' || token[1] != '(' || token.back() != ')') {
      throw std::invalid_argument("bad factor '" + token + "'");
    }
    const std::string body = token.substr(2, token.size() - 3);
    // fields in fixed order: n=<int>, lam=[...], s=<rational>
    const auto npos = body.find("n=");
    const auto lpos = body.find("lam=[");
    const auto spos = body.find("s=", lpos == std::string::npos ? 0 : lpos);
    if (npos != 0 || lpos == std::string::npos || spos == std::string::npos) {
      throw std::invalid_argument("factor fields must be n=, lam=[...], s=");
    }
    const auto ncomma = body.find(',', npos);
    const auto lclose = body.find(']', lpos);
    if (ncomma == std::string::npos || lclose == std::string::npos) {
      throw std::invalid_argument("malformed factor '" + token + "'");
    }
    const std::string nstr = trimmed(body.substr(npos + 2, ncomma - npos - 2));
    std::size_t pos = 0;
    long n = std::stol(nstr, &pos);
    if (pos != nstr.size() || n <= 0) throw std::invalid_argument("factor level must be positive");
    const std::string lamstr = body.substr(lpos + 5, lclose - lpos - 5);
    const std::string sstr = trimmed(body.substr(spos + 2));
    out.factors.push_back(
        WFactor{normalize_generalized(parse_int_list(lamstr), static_cast<int>(n)),
                parse_rational(sstr)});
  }
  return out;
}

std::string format_generalized(const GeneralizedPartition& p) {
  std::ostringstream os;
  os << p.width() << ":[";
  for (int i = 0; i < p.width(); ++i) {
    if (i) os << ',';
    os << p.parts()[static_cast<std::size_t>(i)];
  }
  os << ']';
  return os.str();
}

std::string format_tuple(const GeneralizedPartition& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.width(); ++i) {
    if (i) os << ',';
    os << p.parts()[static_cast<std::size_t>(i)];
  }
  os << ')';
  return os.str();
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_wmodule(const PrimitiveWModule& m) {
  if (m.factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : m.factors) {
    if (!first) os << " * ";
    first = false;
    os << "L(n=" << f.level() << ", lam=[";
    for (int i = 0; i < f.lam.width(); ++i) {
      if (i) os << ',';
      os << f.lam.parts()[static_cast<std::size_t>(i)];
    }
    os << "], s=" << f.s.get_str() << ")";
  }
  return os.str();
}

}  // namespace fockdual
