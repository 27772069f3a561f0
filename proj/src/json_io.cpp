#include "lrc/json_io.hpp"

namespace lrc::json_io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> names_or_default(const json& j, const char* key, std::vector<std::string> fallback) {
  if (!j.contains(key)) return fallback;
  auto names = j.at(key).get<std::vector<std::string>>();
  if (names.size() != fallback.size()) {
    throw ParseError(std::string(key) + " has " + std::to_string(names.size()) + " names, expected " +
                     std::to_string(fallback.size()));
  }
  return names;
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational as \"p/q\" or an integer");
  return parse_rational(j.get<std::string>());
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", to_string(c)}});
  return terms;
}

LaurentPoly laurent_from_json(const json& j, std::size_t nvars) {
  return guarded("Laurent polynomial", [&] {
    LaurentPoly p(nvars);
    for (const auto& term : j) {
      auto e = term.at("exponents").get<Exponents>();
      if (e.size() != nvars) throw ParseError("exponent vector has the wrong length");
      const Rational c = rational_from_json(term.at("coefficient"));
      if (c.get_den() != 1) throw ParseError("Laurent coefficients must be integers");
      p.add_term(e, c.get_num());
    }
    return p;
  });
}

json to_json(const Seed& s) {
  const int n = s.n();
  std::vector<std::string> cluster_names(s.names.begin(), s.names.begin() + n);
  std::vector<std::string> coefficient_names(s.names.begin() + n, s.names.end());
  json cluster = json::array();
  json text = json::array();
  for (const auto& x : s.cluster) {
    cluster.push_back(to_json(x));
    text.push_back(x.to_string(s.names));
  }
  return {{"n", n},
          {"m", s.m()},
          {"entries", s.matrix.entries()},
          {"cluster_names", cluster_names},
          {"coefficient_names", coefficient_names},
          {"cluster", cluster},
          {"cluster_text", text}};
}

Seed seed_from_json(const json& j) {
  return guarded("seed", [&] {
    const IntMatrix entries = int_matrix_from_json(j);
    ExchangeMatrix b(entries);
    if (j.contains("n") && j.at("n").get<int>() != b.n()) throw ParseError("n does not match entries");
    if (j.contains("m") && j.at("m").get<int>() != b.m()) throw ParseError("m does not match entries");
    const Seed defaults = Seed::initial(b);
    std::vector<std::string> names = names_or_default(
        j, "cluster_names", std::vector<std::string>(defaults.names.begin(), defaults.names.begin() + b.n()));
    auto coeffs = names_or_default(
        j, "coefficient_names", std::vector<std::string>(defaults.names.begin() + b.n(), defaults.names.end()));
    names.insert(names.end(), coeffs.begin(), coeffs.end());
    Seed s = Seed::initial(std::move(b), std::move(names));
    if (j.contains("cluster")) {
      const auto& c = j.at("cluster");
      if (!c.is_array() || static_cast<int>(c.size()) != s.n()) throw ParseError("cluster needs n entries");
      for (int i = 0; i < s.n(); ++i) s.cluster[i] = laurent_from_json(c[i], s.m());
    }
    return s;
  });
}

IntMatrix int_matrix_from_json(const json& j) {
  return guarded("integer matrix", [&] {
    const json& rows = j.is_object() ? j.at("entries") : j;
    return rows.get<IntMatrix>();
  });
}

json to_json(const ExactMatrix& x) {
  json rows = json::array();
  for (const auto& row : x.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(r);
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    const json& rows = j.is_object() ? j.at("matrix") : j;
    RationalMatrix m;
    for (const auto& row : rows) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      m.push_back(std::move(r));
    }
    return ExactMatrix(std::move(m));
  });
}

json to_json(const ParamTuple& t) {
  return std::visit(
      [](const auto& p) -> json {
        json values = json::array();
        for (const auto& v : p.values) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) {
            values.push_back(to_string(v));
          } else {
            values.push_back(v);
          }
        }
        const bool geometric = std::is_same_v<std::decay_t<decltype(p)>, GeometricParams>;
        return {{"word", p.word.letters}, {"values", values}, {"mode", geometric ? "geometric" : "tropical"}};
      },
      t);
}

ParamTuple tuple_from_json(const json& j) {
  return guarded("tuple", [&]() -> ParamTuple {
    ReducedWord word{j.at("word").get<std::vector<int>>()};
    const std::string mode = j.value("mode", "tropical");
    if (mode == "tropical") {
      TropicalParams t{std::move(word), {}};
      for (const auto& v : j.at("values")) {
        const Rational r = rational_from_json(v);
        if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
          throw ParseError("tropical values must be integers");
        }
        t.values.push_back(r.get_num().get_si());
      }
      return t;
    }
    if (mode == "geometric") {
      GeometricParams t{std::move(word), {}};
      for (const auto& v : j.at("values")) t.values.push_back(rational_from_json(v));
      return t;
    }
    throw ParseError("mode must be \"tropical\" or \"geometric\"");
  });
}

json to_json(const LaurentReport& r, const std::vector<std::string>& names) {
  json vars = json::array();
  for (const auto& v : r.variables) vars.push_back(v.to_string(names));
  return {{"pass", r.pass},
          {"complete", r.complete},
          {"closed", r.closed},
          {"cap_hit", r.cap_hit},
          {"depth", r.depth},
          {"seeds_visited", r.seeds_visited},
          {"mutations", r.mutations},
          {"max_terms", r.max_terms},
          {"variable_count", r.variables.size()},
          {"variables", vars},
          {"failure", r.failure}};
}

json to_json(const ExchangeGraph& g, const std::vector<std::string>& names, bool list_variables) {
  json out = {{"variables", g.variables.size()},
              {"clusters", g.clusters.size()},
              {"edges", g.edges.size()},
              {"complete", g.complete},
              {"max_terms", g.max_terms}};
  if (list_variables) {
    json vars = json::array();
    for (const auto& v : g.variables) vars.push_back(v.to_string(names));
    out["variable_list"] = vars;
  }
  return out;
}

json to_json(const FiniteTypeResult& r) {
  json out = {{"verdict", to_string(r.verdict)},
              {"finite", r.verdict == FiniteVerdict::Finite},
              {"class_size", r.class_size},
              {"cap_hit", r.cap_hit},
              {"reason", r.reason}};
  out["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return out;
}

json to_json(const IdentitySweep& s) {
  return {{"identity", s.which == MinorIdentity::Dodgson ? "dodgson" : "plucker"},
          {"n", s.n},
          {"choices", s.choices},
          {"samples", s.samples},
          {"evaluations", s.evaluations},
          {"nonzero", s.nonzero},
          {"pass", s.pass()}};
}

json to_json(const GrassmannianReport& r) {
  return {{"pass", r.pass()},
          {"relations_match", r.relations_match},
          {"labels_consistent", r.labels_consistent},
          {"clusters_match", r.clusters_match},
          {"edges_match", r.edges_match},
          {"clusters", r.clusters},
          {"triangulations", r.triangulation_count},
          {"variables", r.variables},
          {"edges", r.edges},
          {"flips", r.flips},
          {"relations", r.relations},
          {"mismatches", r.mismatches}};
}

json to_json(const TropicalizationReport& r) {
  return {{"pass", r.pass},
          {"samples", r.samples_run},
          {"component_pass", r.component_pass},
          {"expressions", r.expressions},
          {"expression_nodes", r.expression_nodes}};
}

}  // namespace lrc::json_io
