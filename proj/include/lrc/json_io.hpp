#pragma once

// JSON encodings shared by the C API and the command-line tool.
//
//   rational     "p" or "p/q" (integers are also accepted on input)
//   matrix       [["1","4","2"], ...]
//   tuple        {"word": [1,2,1], "values": [...], "mode": "tropical"|"geometric"}
//   seed         {"n", "m", "entries", "coefficient_names", "cluster_names",
//                 "cluster": [[{"exponents": [...], "coefficient": "c"}, ...], ...]}
//
// "cluster" is optional on input; without it the seed is the initial one.

#include "lrc/cluster.hpp"
#include "lrc/grassmannian.hpp"
#include "lrc/minors.hpp"
#include "lrc/tropical.hpp"

#include <json.hpp>

#include <stdexcept>

namespace lrc::json_io {

using json = nlohmann::json;

/// Malformed JSON payloads.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j, std::size_t nvars);

json to_json(const Seed& s);
Seed seed_from_json(const json& j);

/// Accepts a bare array of rows or an object with "entries".
IntMatrix int_matrix_from_json(const json& j);

json to_json(const ExactMatrix& x);
ExactMatrix matrix_from_json(const json& j);

json to_json(const ParamTuple& t);
ParamTuple tuple_from_json(const json& j);

json to_json(const LaurentReport& r, const std::vector<std::string>& names);
/// Summary of an exchange graph; `list_variables` adds rendered variables.
json to_json(const ExchangeGraph& g, const std::vector<std::string>& names, bool list_variables);
json to_json(const FiniteTypeResult& r);
json to_json(const IdentitySweep& s);
json to_json(const GrassmannianReport& r);
json to_json(const TropicalizationReport& r);

}  // namespace lrc::json_io
