#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fockdual/characters.hpp"
#include "fockdual/glhat.hpp"
#include "fockdual/lr.hpp"
#include "fockdual/winfinity.hpp"

namespace fockdual {

/*
  JSON forms of the decomposition results; schemas are documented in
  docs/schema.md and frozen by the golden files.  Object keys are
  emitted in sorted order, so parse -> re-emit is byte-identical.
*/

using json = nlohmann::json;

json integer_json(const Integer& v);  // number when it fits, else string

json to_json(const GeneralizedPartition& p);  // {"width": N, "parts": [...]}
GeneralizedPartition generalized_from_json(const json& j);

json restriction_json(const GeneralizedPartition& lambda, int m, int n,
                      const std::vector<BranchingMultiplicity>& terms);

json to_json(const GlDecomposition& d, Category cat, int level);
GlDecomposition gl_decomposition_from_json(const json& j);

json to_json(const WDecomposition& d, Int charge);
WDecomposition w_decomposition_from_json(const json& j);

json exponents_json(const ExponentMultiset& e);
json xi_json(const std::vector<Rational>& xi);
json branching_json(const BranchingFunction& b, Int window);
json tensor_char_json(const GeneralizedPartition& mu, const GeneralizedPartition& nu,
                      Category sign, int order, const TensorCharacterReport& r);

std::string dump_json(const json& j);  // canonical single-line dump + newline

}  // namespace fockdual
