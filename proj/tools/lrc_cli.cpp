// Command-line front end. Talks to the library exclusively through lrc.h.

#include "lrc/lrc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

struct Failure {
  lrc_status status;
  std::string message;
};

int exit_code(lrc_status s) {
  switch (s) {
    case LRC_OK: return 0;
    case LRC_ERR_DOMAIN:
    case LRC_ERR_UNSUPPORTED: return 1;
    case LRC_ERR_RESOURCE: return 2;
    case LRC_ERR_INVALID_ARGUMENT: return kExitUsage;
    case LRC_ERR_PARSE: return kExitData;
    case LRC_ERR_INTERNAL: return kExitSoftware;
  }
  return kExitSoftware;
}

void check(lrc_status s) {
  if (s != LRC_OK) throw Failure{s, lrc_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  lrc_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Cartan = std::unique_ptr<lrc_cartan, Deleter<lrc_cartan, lrc_cartan_free>>;
using Tuple = std::unique_ptr<lrc_tuple, Deleter<lrc_tuple, lrc_tuple_free>>;
using SeedPtr = std::unique_ptr<lrc_seed, Deleter<lrc_seed, lrc_seed_free>>;
using Matrix = std::unique_ptr<lrc_matrix, Deleter<lrc_matrix, lrc_matrix_free>>;

Cartan cartan(const std::string& name) {
  lrc_cartan* a = nullptr;
  check(lrc_cartan_from_name(name.c_str(), &a));
  return Cartan(a);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{LRC_ERR_INVALID_ARGUMENT, "cannot open " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs a JSON-producing call; a resource cap still yields a partial report.
json call_json(lrc_status s, char* out) {
  json j = out ? json::parse(take(out)) : json();
  if (s != LRC_OK && s != LRC_ERR_RESOURCE) throw Failure{s, lrc_last_error()};
  if (s == LRC_ERR_RESOURCE) j["status"] = "resource cap exceeded";
  return j;
}

std::string join(const json& arr, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

std::string join(const std::vector<int>& v) { return join(json(v)); }

void print_fields(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::size_t width = 0;
  for (const auto& [k, v] : fields) width = std::max(width, k.size());
  for (const auto& [k, v] : fields) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << (k + ":") << v << "\n";
  }
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) return v.empty() || !v[0].is_array() ? join(v) : v.dump();
  return v.dump();
}

void print_report(const json& j, const std::vector<std::string>& keys) {
  std::vector<std::pair<std::string, std::string>> fields;
  for (const auto& k : keys) {
    if (j.contains(k)) fields.emplace_back(k, scalar(j.at(k)));
  }
  print_fields(fields);
}

struct Options {
  bool as_json = false;
};

SeedPtr load_seed(const std::string& seed_file, const std::string& type, int grassmannian) {
  lrc_seed* s = nullptr;
  if (!seed_file.empty()) {
    check(lrc_seed_from_json(read_file(seed_file).c_str(), &s));
  } else if (!type.empty()) {
    auto a = cartan(type);
    check(lrc_seed_from_cartan(a.get(), &s));
  } else if (grassmannian > 0) {
    check(lrc_seed_grassmannian(grassmannian, &s));
  } else {
    throw Failure{LRC_ERR_INVALID_ARGUMENT, "give one of --seed/--matrix, --type or --grassmannian"};
  }
  return SeedPtr(s);
}

int status_of(const json& j) { return j.contains("status") ? 2 : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Richardson coefficients, tropical transition maps, minors and cluster algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.as_json, "Machine-readable JSON output");

  // lr
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient of three partitions");
  std::vector<int> lr_lambda, lr_nu, lr_mu;
  lr->add_option("--lambda", lr_lambda, "Partition, comma separated")->required()->delimiter(',');
  lr->add_option("--nu", lr_nu, "Partition, comma separated")->required()->delimiter(',');
  lr->add_option("--mu", lr_mu, "Partition, comma separated")->required()->delimiter(',');

  // mult
  auto* mult = app.add_subcommand("mult", "Tensor-product multiplicity c^mu_{lambda,nu}");
  std::string m_type;
  std::vector<int> m_lambda, m_nu, m_mu;
  bool m_oracle = false, m_witnesses = false;
  mult->add_option("--type", m_type, "Cartan type, e.g. A2")->required();
  mult->add_option("--lambda", m_lambda, "Dominant weight")->required()->delimiter(',');
  mult->add_option("--nu", m_nu, "Dominant weight")->required()->delimiter(',');
  mult->add_option("--mu", m_mu, "Dominant weight")->required()->delimiter(',');
  mult->add_flag("--oracle", m_oracle, "Cross-check with the character oracle");
  mult->add_flag("--witnesses", m_witnesses, "List the counted parameter tuples");

  // transition
  auto* tr = app.add_subcommand("transition", "Transition map between reduced words of w0");
  std::string t_type, t_mode = "tropical", t_tuple;
  std::vector<int> t_from, t_to;
  std::vector<std::string> t_values;
  std::size_t t_verify = 0;
  tr->add_option("--type", t_type, "Cartan type")->required();
  tr->add_option("--from", t_from, "Source reduced word")->delimiter(',');
  tr->add_option("--to", t_to, "Target reduced word")->required()->delimiter(',');
  tr->add_option("--t", t_values, "Parameters (integers or p/q)")->delimiter(',');
  tr->add_option("--tuple", t_tuple, "Tuple JSON file instead of --from/--t");
  tr->add_option("--mode", t_mode, "tropical or geometric")->check(CLI::IsMember({"tropical", "geometric"}));
  tr->add_option("--verify", t_verify, "Also check tropicalization on this many random samples");

  // mutate
  auto* mu = app.add_subcommand("mutate", "Seed mutation");
  std::string s_file, s_type;
  int s_at = 0;
  mu->add_option("--seed", s_file, "Seed JSON file");
  mu->add_option("--type", s_type, "Start from the bipartite seed of a Cartan type");
  mu->add_option("--at", s_at, "Direction k (1-based)")->required();

  // clusters
  auto* cl = app.add_subcommand("clusters", "Enumerate the exchange graph");
  std::string c_file, c_type;
  int c_gr = 0;
  std::size_t c_max_seeds = 100000, c_max_terms = 200000;
  bool c_list = false;
  cl->add_option("--type", c_type, "Cartan type (coefficient-free bipartite seed)");
  cl->add_option("--seed", c_file, "Seed JSON file");
  cl->add_option("--grassmannian", c_gr, "Gr(2, n+3) seed for this n");
  cl->add_option("--max-seeds", c_max_seeds, "Seed cap")->capture_default_str();
  cl->add_option("--max-terms", c_max_terms, "Laurent term cap")->capture_default_str();
  cl->add_flag("--list", c_list, "Print every cluster variable");

  // finite-type
  auto* ft = app.add_subcommand("finite-type", "Finite-type classification of an exchange matrix");
  std::string f_file, f_type;
  std::size_t f_max = 20000;
  ft->add_option("--matrix", f_file, "Matrix or seed JSON file");
  ft->add_option("--type", f_type, "Use the bipartite matrix of a Cartan type");
  ft->add_option("--max-class", f_max, "Mutation-class cap")->capture_default_str();

  // laurent-check
  auto* lc = app.add_subcommand("laurent-check", "Verify the Laurent phenomenon up to a depth");
  std::string l_file, l_type;
  int l_depth = 8;
  std::size_t l_max_seeds = 100000, l_max_terms = 200000;
  lc->add_option("--matrix", l_file, "Matrix or seed JSON file");
  lc->add_option("--type", l_type, "Use the bipartite matrix of a Cartan type");
  lc->add_option("--depth", l_depth, "Mutation depth")->capture_default_str();
  lc->add_option("--max-seeds", l_max_seeds, "Seed cap")->capture_default_str();
  lc->add_option("--max-terms", l_max_terms, "Laurent term cap")->capture_default_str();

  // tp-check
  auto* tp = app.add_subcommand("tp-check", "Total positivity of an upper unitriangular matrix");
  std::string p_file;
  int p_n = 0;
  std::vector<int> p_word;
  std::vector<std::string> p_values;
  tp->add_option("--matrix", p_file, "Matrix JSON file");
  tp->add_option("--n", p_n, "Size when building the matrix from --word/--t");
  tp->add_option("--word", p_word, "Reduced word of w0 (factorization and boundary parameters)")->delimiter(',');
  tp->add_option("--t", p_values, "Positive parameters")->delimiter(',');

  // identities
  auto* id = app.add_subcommand("identities", "Check minor identities on random SL_n matrices");
  std::string i_which, i_type;
  std::size_t i_samples = 100;
  std::uint64_t i_seed = 1;
  id->add_option("--which", i_which, "dodgson or plucker")->required()->check(CLI::IsMember({"dodgson", "plucker"}));
  id->add_option("--type", i_type, "Type A_r (SL_{r+1})")->required();
  id->add_option("--samples", i_samples, "Random matrices")->capture_default_str();
  id->add_option("--seed", i_seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lr) {
      std::uint64_t c = 0;
      check(lrc_lr_coefficient(lr_lambda.data(), lr_lambda.size(), lr_nu.data(), lr_nu.size(),
                               lr_mu.data(), lr_mu.size(), &c));
      if (opt.as_json) {
        std::cout << json{{"lambda", lr_lambda}, {"nu", lr_nu}, {"mu", lr_mu}, {"lr", c}}.dump() << "\n";
      } else {
        std::cout << c << "\n";
      }
      return 0;
    }

    if (*mult) {
      auto a = cartan(m_type);
      std::size_t rank = 0;
      check(lrc_cartan_rank(a.get(), &rank));
      for (const auto* w : {&m_lambda, &m_nu, &m_mu}) {
        if (w->size() != rank) {
          throw Failure{LRC_ERR_INVALID_ARGUMENT, "weights need " + std::to_string(rank) + " coordinates"};
        }
      }
      char* out = nullptr;
      check(lrc_multiplicity_witnesses_json(a.get(), m_lambda.data(), m_nu.data(), m_mu.data(), &out));
      const json w = json::parse(take(out));
      json result = {{"tropical", w.at("count")}};
      if (m_oracle) {
        std::uint64_t oracle = 0;
        check(lrc_racah_oracle(a.get(), m_lambda.data(), m_nu.data(), m_mu.data(), &oracle));
        result["oracle"] = oracle;
        result["agree"] = oracle == w.at("count").get<std::uint64_t>();
      }
      if (m_witnesses) {
        result["word"] = w.at("word");
        result["witnesses"] = w.at("witnesses");
      }
      if (opt.as_json) {
        std::cout << result.dump() << "\n";
      } else if (!m_oracle && !m_witnesses) {
        std::cout << result.at("tropical").get<std::uint64_t>() << "\n";
      } else {
        std::vector<std::pair<std::string, std::string>> fields{{"tropical", result.at("tropical").dump()}};
        if (m_oracle) {
          fields.emplace_back("oracle", result.at("oracle").dump());
          fields.emplace_back("agree", result.at("agree").dump());
        }
        if (m_witnesses) {
          fields.emplace_back("word", join(result.at("word")));
          for (const auto& t : result.at("witnesses")) fields.emplace_back("witness", join(t));
        }
        print_fields(fields);
      }
      return m_oracle && !result.at("agree").get<bool>() ? kExitSoftware : 0;
    }

    if (*tr) {
      auto a = cartan(t_type);
      lrc_tuple* raw = nullptr;
      if (!t_tuple.empty()) {
        check(lrc_tuple_from_json(read_file(t_tuple).c_str(), &raw));
      } else {
        if (t_from.empty() || t_values.empty()) {
          throw Failure{LRC_ERR_INVALID_ARGUMENT, "give --from and --t, or --tuple"};
        }
        if (t_from.size() != t_values.size()) {
          throw Failure{LRC_ERR_INVALID_ARGUMENT, "--from and --t differ in length"};
        }
        std::vector<const char*> vals;
        for (const auto& v : t_values) vals.push_back(v.c_str());
        check(lrc_tuple_new(t_mode == "geometric" ? LRC_GEOMETRIC : LRC_TROPICAL, t_from.data(),
                            vals.data(), vals.size(), &raw));
      }
      Tuple src(raw);
      lrc_tuple* moved = nullptr;
      check(lrc_tuple_transition(src.get(), a.get(), t_to.data(), t_to.size(), &moved));
      Tuple dst(moved);
      char* out = nullptr;
      check(lrc_tuple_to_json(dst.get(), &out));
      json result = json::parse(take(out));
      int code = 0;
      if (t_verify > 0) {
        check(lrc_tuple_to_json(src.get(), &out));
        const auto from = json::parse(take(out)).at("word").get<std::vector<int>>();
        if (from.size() != t_to.size()) throw Failure{LRC_ERR_DOMAIN, "words differ in length"};
        char* rep = nullptr;
        const lrc_status s = lrc_verify_tropicalization_json(a.get(), from.data(), t_to.data(),
                                                             from.size(), t_verify, &rep);
        json report = call_json(s, rep);
        code = status_of(report);
        if (opt.as_json) {
          result = {{"tuple", result}, {"tropicalization", report}};
        } else {
          std::cout << join(result.at("values")) << "\n";
          print_report(report, {"pass", "samples", "expression_nodes", "status"});
          return code;
        }
      }
      if (opt.as_json) {
        std::cout << result.dump() << "\n";
      } else {
        std::cout << join(result.at("values")) << "\n";
      }
      return code;
    }

    if (*mu) {
      auto seed = load_seed(s_file, s_type, 0);
      char* rel = nullptr;
      check(lrc_seed_exchange_relation(seed.get(), s_at, &rel));
      const std::string relation = take(rel);
      lrc_seed* next = nullptr;
      check(lrc_seed_mutate(seed.get(), s_at, &next));
      SeedPtr mutated(next);
      char* out = nullptr;
      check(lrc_seed_to_json(mutated.get(), &out));
      json j = json::parse(take(out));
      if (opt.as_json) {
        std::cout << j.dump() << "\n";
      } else {
        std::vector<std::pair<std::string, std::string>> fields{{"exchange", relation}};
        const auto names = j.at("cluster_names");
        for (std::size_t i = 0; i < names.size(); ++i) {
          fields.emplace_back(names[i].get<std::string>(), j.at("cluster_text")[i].get<std::string>());
        }
        fields.emplace_back("matrix", j.at("entries").dump());
        print_fields(fields);
      }
      return 0;
    }

    if (*cl) {
      auto seed = load_seed(c_file, c_type, c_gr);
      char* out = nullptr;
      const lrc_status s = lrc_enumerate_clusters_json(seed.get(), c_max_seeds, c_max_terms, c_list ? 1 : 0, &out);
      json j = call_json(s, out);
      if (c_gr > 0 && s == LRC_OK) {
        char* rep = nullptr;
        check(lrc_grassmannian_check_json(c_gr, &rep));
        const json g = json::parse(take(rep));
        j["triangulations"] = g.at("triangulations");
        j["flip_graph_match"] = g.at("pass");
        j["relations"] = g.at("relations");
      }
      if (opt.as_json) {
        std::cout << j.dump() << "\n";
      } else {
        print_report(j, {"variables", "clusters", "edges", "complete", "max_terms", "triangulations",
                         "flip_graph_match", "status"});
        if (j.contains("relations")) {
          for (const auto& r : j.at("relations")) std::cout << "  " << r.get<std::string>() << "\n";
        }
        if (j.contains("variable_list")) {
          for (const auto& v : j.at("variable_list")) std::cout << "  " << v.get<std::string>() << "\n";
        }
      }
      return status_of(j);
    }

    if (*ft) {
      auto seed = load_seed(f_file, f_type, 0);
      char* out = nullptr;
      const lrc_status s = lrc_finite_type_json(seed.get(), f_max, &out);
      json j = call_json(s, out);
      if (opt.as_json) {
        std::cout << j.dump() << "\n";
      } else {
        print_report(j, {"verdict", "class_size", "reason", "witness", "status"});
      }
      return status_of(j);
    }

    if (*lc) {
      auto seed = load_seed(l_file, l_type, 0);
      char* out = nullptr;
      const lrc_status s = lrc_laurent_check_json(seed.get(), l_depth, l_max_seeds, l_max_terms, &out);
      json j = out ? json::parse(take(out)) : json();
      if (opt.as_json) {
        std::cout << j.dump() << "\n";
      } else {
        print_report(j, {"pass", "depth", "closed", "seeds_visited", "mutations", "variable_count", "max_terms",
                         "failure"});
      }
      if (s == LRC_ERR_INTERNAL) std::cerr << "error: " << lrc_last_error() << "\n";
      if (s != LRC_OK && s != LRC_ERR_INTERNAL && s != LRC_ERR_RESOURCE) throw Failure{s, lrc_last_error()};
      return exit_code(s);
    }

    if (*tp) {
      lrc_matrix* raw = nullptr;
      if (!p_file.empty()) {
        check(lrc_matrix_from_json(read_file(p_file).c_str(), &raw));
      } else {
        if (p_n < 2 || p_word.empty() || p_word.size() != p_values.size()) {
          throw Failure{LRC_ERR_INVALID_ARGUMENT, "give --matrix, or --n with --word and --t of equal length"};
        }
        std::vector<const char*> vals;
        for (const auto& v : p_values) vals.push_back(v.c_str());
        check(lrc_matrix_from_word(p_word.data(), vals.data(), vals.size(), p_n, &raw));
      }
      Matrix x(raw);
      int positive = 0;
      check(lrc_matrix_is_totally_positive(x.get(), &positive));
      char* out = nullptr;
      check(lrc_matrix_to_json(x.get(), &out));
      json j = {{"matrix", json::parse(take(out))}, {"totally_positive", positive != 0}};
      if (!p_word.empty() && positive) {
        char* t1 = nullptr;
        char* tm = nullptr;
        check(lrc_matrix_boundary_parameters(x.get(), p_word.data(), p_word.size(), &t1, &tm));
        j["t_first"] = take(t1);
        j["t_last"] = take(tm);
      }
      if (opt.as_json) {
        std::cout << j.dump() << "\n";
      } else {
        std::vector<std::pair<std::string, std::string>> fields;
        for (const auto& row : j.at("matrix")) fields.emplace_back("row", join(row, " "));
        fields.emplace_back("totally_positive", j.at("totally_positive").dump());
        if (j.contains("t_first")) {
          fields.emplace_back("t_first", j.at("t_first").get<std::string>());
          fields.emplace_back("t_last", j.at("t_last").get<std::string>());
        }
        print_fields(fields);
      }
      return 0;
    }

    if (*id) {
      if (i_type.size() < 2 || i_type[0] != 'A') throw Failure{LRC_ERR_DOMAIN, "identities are checked in type A only"};
      auto a = cartan(i_type);
      std::size_t rank = 0;
      check(lrc_cartan_rank(a.get(), &rank));
      char* out = nullptr;
      check(lrc_identity_sweep_json(i_which.c_str(), static_cast<int>(rank) + 1, i_samples, i_seed, &out));
      json j = json::parse(take(out));
      if (opt.as_json) {
        std::cout << j.dump() << "\n";
      } else {
        print_report(j, {"identity", "n", "choices", "samples", "evaluations", "nonzero", "pass"});
      }
      return j.at("pass").get<bool>() ? 0 : kExitSoftware;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    if (f.message.rfind("cannot open", 0) == 0) return kExitNoInput;
    return exit_code(f.status);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSoftware;
  }
  return kExitUsage;
}
