#include "fockdual/jsonio.hpp"

#include <stdexcept>

#include "fockdual/literals.hpp"

namespace fockdual {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

namespace {

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(static_cast<long>(j.get<long long>()));
}

json parts_json(const GeneralizedPartition& p) {
  json a = json::array();
  for (Int x : p.parts()) a.push_back(x);
  return a;
}

json box_json(const EnumerationBox& b) { return json{{"hi", b.hi}, {"lo", b.lo}}; }

EnumerationBox box_from_json(const json& j) {
  return EnumerationBox{j.at("lo").get<Int>(), j.at("hi").get<Int>()};
}

}  // namespace

json to_json(const GeneralizedPartition& p) {
  return json{{"width", p.width()}, {"parts", parts_json(p)}};
}

GeneralizedPartition generalized_from_json(const json& j) {
  std::vector<Int> parts;
  for (const auto& x : j.at("parts")) parts.push_back(x.get<Int>());
  return normalize_generalized(std::move(parts), j.at("width").get<int>());
}

json restriction_json(const GeneralizedPartition& lambda, int m, int n,
                      const std::vector<BranchingMultiplicity>& terms) {
  json t = json::array();
  for (const auto& bm : terms) {
    t.push_back(json{{"mu", parts_json(bm.mu)},
                     {"nu", parts_json(bm.nu)},
                     {"mult", integer_json(bm.mult)}});
  }
  return json{{"lam", to_json(lambda)}, {"split", json::array({m, n})}, {"terms", t}};
}

json to_json(const GlDecomposition& d, Category cat, int level) {
  json t = json::array();
  for (const auto& [label, mult] : d.terms) {
    t.push_back(json{{"lam", parts_json(label.lam)}, {"mult", integer_json(mult)}});
  }
  return json{{"sign", std::string(1, static_cast<char>(cat))},
              {"level", level},
              {"box", box_json(d.box)},
              {"terms", t}};
}

GlDecomposition gl_decomposition_from_json(const json& j) {
  GlDecomposition d;
  d.box = box_from_json(j.at("box"));
  const std::string sign = j.at("sign").get<std::string>();
  if (sign.size() != 1) throw std::invalid_argument("bad sign tag");
  const Category cat = static_cast<Category>(sign[0]);
  const int level = j.at("level").get<int>();
  for (const auto& term : j.at("terms")) {
    std::vector<Int> parts;
    for (const auto& x : term.at("lam")) parts.push_back(x.get<Int>());
    d.terms.emplace(PrimitiveLabel{cat, normalize_generalized(std::move(parts), level)},
                    integer_from_json(term.at("mult")));
  }
  return d;
}

json to_json(const WDecomposition& d, Int charge) {
  json t = json::array();
  for (const auto& [mod, mult] : d.terms) {
    json fs = json::array();
    for (const auto& f : mod.factors) {
      fs.push_back(json{{"n", f.level()},
                        {"lam", parts_json(f.lam)},
                        {"s", format_rational(f.s)}});
    }
    t.push_back(json{{"factors", fs}, {"mult", integer_json(mult)}});
  }
  return json{{"box", box_json(d.box)}, {"charge", charge}, {"terms", t}};
}

WDecomposition w_decomposition_from_json(const json& j) {
  WDecomposition d;
  d.box = box_from_json(j.at("box"));
  for (const auto& term : j.at("terms")) {
    PrimitiveWModule mod;
    for (const auto& f : term.at("factors")) {
      std::vector<Int> parts;
      for (const auto& x : f.at("lam")) parts.push_back(x.get<Int>());
      mod.factors.push_back(
          WFactor{normalize_generalized(std::move(parts), f.at("n").get<int>()),
                  parse_rational(f.at("s").get<std::string>())});
    }
    d.terms.emplace(std::move(mod), integer_from_json(term.at("mult")));
  }
  return d;
}

json exponents_json(const ExponentMultiset& e) {
  json entries = json::array();
  for (const auto& [r, m] : e.entries) {
    entries.push_back(json{{"r", format_rational(r)}, {"m", m}});
  }
  return json{{"charge", e.charge()}, {"entries", entries}};
}

json xi_json(const std::vector<Rational>& xi) {
  json a = json::array();
  for (const auto& v : xi) a.push_back(format_rational(v));
  return json{{"upto", static_cast<int>(xi.size()) - 1}, {"xi", a}};
}

json branching_json(const BranchingFunction& b, Int window) {
  json c = json::array();
  for (const auto& v : b.series) c.push_back(integer_json(v));
  return json{{"lam", to_json(b.lam)},
              {"sign", std::string(1, static_cast<char>(b.sign))},
              {"order", static_cast<int>(b.series.size()) - 1},
              {"window", window},
              {"coeffs", c}};
}

json tensor_char_json(const GeneralizedPartition& mu, const GeneralizedPartition& nu,
                      Category sign, int order, const TensorCharacterReport& r) {
  json terms = json::array();
  for (const auto& [lam, c] : r.lambda_terms) {
    terms.push_back(json{{"lam", parts_json(lam)}, {"mult", integer_json(c)}});
  }
  json residual = json::array();
  for (const auto& v : r.residual) residual.push_back(integer_json(v));
  return json{{"mu", to_json(mu)},
              {"nu", to_json(nu)},
              {"sign", std::string(1, static_cast<char>(sign))},
              {"order", order},
              {"box", box_json(r.box)},
              {"window", r.window},
              {"terms", terms},
              {"residual", residual},
              {"passed", r.passed()}};
}

std::string dump_json(const json& j) { return j.dump() + "\n"; }

}  // namespace fockdual
