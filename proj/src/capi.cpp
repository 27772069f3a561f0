#include "lrc/lrc.h"

#include "lrc/cluster.hpp"
#include "lrc/grassmannian.hpp"
#include "lrc/json_io.hpp"
#include "lrc/minors.hpp"
#include "lrc/multiplicity.hpp"
#include "lrc/tableaux.hpp"
#include "lrc/tropical.hpp"

#include <cstring>
#include <new>
#include <string>

struct lrc_cartan {
  lrc::CartanMatrix value;
};
struct lrc_tuple {
  lrc::ParamTuple value;
};
struct lrc_seed {
  lrc::Seed value;
};
struct lrc_matrix {
  lrc::ExactMatrix value;
};

namespace {

using lrc::json_io::json;

thread_local std::string last_error;

lrc_status fail(lrc_status status, const char* message) {
  last_error = message;
  return status;
}

class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
lrc_status guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ArgumentError& e) {
    return fail(LRC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const lrc::UnsupportedType& e) {
    return fail(LRC_ERR_UNSUPPORTED, e.what());
  } catch (const lrc::DomainError& e) {
    return fail(LRC_ERR_DOMAIN, e.what());
  } catch (const lrc::ResourceError& e) {
    return fail(LRC_ERR_RESOURCE, e.what());
  } catch (const lrc::InternalError& e) {
    return fail(LRC_ERR_INTERNAL, e.what());
  } catch (const json::exception& e) {
    return fail(LRC_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LRC_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LRC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(LRC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LRC_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw ArgumentError(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lrc_status emit(const json& j, char** out, lrc_status status = LRC_OK) {
  *out = copy_string(j.dump());
  return status;
}

std::vector<int> ints(const int* p, std::size_t n) {
  if (n > 0) require(p, "array");
  return std::vector<int>(p, p + n);
}

lrc::Weight weight(const lrc_cartan* a, const int* p) {
  require(p, "weight");
  return lrc::Weight{ints(p, a->value.rank())};
}

json parse_json(const char* text) {
  require(text, "json");
  return json::parse(text);
}

}  // namespace

extern "C" {

const char* lrc_version(void) { return "1.0.0"; }

const char* lrc_last_error(void) { return last_error.c_str(); }

const char* lrc_status_name(lrc_status status) {
  switch (status) {
    case LRC_OK: return "ok";
    case LRC_ERR_DOMAIN: return "domain error";
    case LRC_ERR_RESOURCE: return "resource cap exceeded";
    case LRC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LRC_ERR_UNSUPPORTED: return "unsupported type";
    case LRC_ERR_INTERNAL: return "internal error";
    case LRC_ERR_PARSE: return "parse error";
  }
  return "unknown status";
}

void lrc_string_free(char* s) { std::free(s); }

lrc_status lrc_cartan_from_name(const char* name, lrc_cartan** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = new lrc_cartan{lrc::CartanMatrix::parse(name)};
    return LRC_OK;
  });
}

lrc_status lrc_cartan_from_entries(const int* entries, size_t rank, lrc_cartan** out) {
  return guard([&] {
    require(out, "out");
    if (rank == 0) throw ArgumentError("rank must be positive");
    std::vector<std::vector<int>> m(rank);
    for (size_t i = 0; i < rank; ++i) m[i] = ints(entries + i * rank, rank);
    *out = new lrc_cartan{lrc::CartanMatrix(std::move(m))};
    return LRC_OK;
  });
}

void lrc_cartan_free(lrc_cartan* a) { delete a; }

lrc_status lrc_cartan_rank(const lrc_cartan* a, size_t* out) {
  return guard([&] {
    require(a, "cartan");
    require(out, "out");
    *out = static_cast<size_t>(a->value.rank());
    return LRC_OK;
  });
}

lrc_status lrc_cartan_is_finite(const lrc_cartan* a, int* out) {
  return guard([&] {
    require(a, "cartan");
    require(out, "out");
    *out = a->value.finite_type() ? 1 : 0;
    return LRC_OK;
  });
}

lrc_status lrc_cartan_info_json(const lrc_cartan* a, char** out) {
  return guard([&] {
    require(a, "cartan");
    require(out, "out");
    const auto& c = a->value;
    json j = {{"rank", c.rank()},
              {"entries", c.entries()},
              {"symmetrizer", c.symmetrizer()},
              {"finite", c.finite_type()}};
    if (c.finite_type()) {
      json roots = json::array();
      for (const auto& r : lrc::positive_roots(c)) roots.push_back(r.coords);
      const auto w0 = lrc::longest_element_data(c);
      j["positive_roots"] = roots;
      j["longest_word"] = w0.word.letters;
      j["star"] = w0.star;
    }
    return emit(j, out);
  });
}

lrc_status lrc_lr_coefficient(const int* lambda, size_t lambda_len, const int* nu, size_t nu_len,
                              const int* mu, size_t mu_len, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = lrc::lr_coefficient(lrc::Partition(ints(lambda, lambda_len)),
                               lrc::Partition(ints(nu, nu_len)), lrc::Partition(ints(mu, mu_len)));
    return LRC_OK;
  });
}

lrc_status lrc_tensor_multiplicity(const lrc_cartan* a, const int* lambda, const int* nu,
                                   const int* mu, uint64_t* out) {
  return guard([&] {
    require(a, "cartan");
    require(out, "out");
    *out = lrc::tensor_multiplicity({a->value, weight(a, lambda), weight(a, nu), weight(a, mu)});
    return LRC_OK;
  });
}

lrc_status lrc_racah_oracle(const lrc_cartan* a, const int* lambda, const int* nu, const int* mu,
                            uint64_t* out) {
  return guard([&] {
    require(a, "cartan");
    require(out, "out");
    *out = lrc::racah_oracle({a->value, weight(a, lambda), weight(a, nu), weight(a, mu)});
    return LRC_OK;
  });
}

lrc_status lrc_multiplicity_witnesses_json(const lrc_cartan* a, const int* lambda, const int* nu,
                                           const int* mu, char** out) {
  return guard([&] {
    require(a, "cartan");
    require(out, "out");
    lrc::MultiplicityEngine engine(a->value);
    const auto w = engine.witnesses(weight(a, lambda), weight(a, nu), weight(a, mu));
    return emit({{"count", w.size()}, {"word", engine.base_word().letters}, {"witnesses", w}}, out);
  });
}

lrc_status lrc_tuple_new(lrc_mode mode, const int* word, const char* const* values, size_t length,
                         lrc_tuple** out) {
  return guard([&] {
    require(out, "out");
    if (length > 0) require(values, "values");
    json j = {{"word", ints(word, length)}, {"values", json::array()}};
    for (size_t k = 0; k < length; ++k) {
      require(values[k], "value");
      j["values"].push_back(values[k]);
    }
    if (mode == LRC_TROPICAL) {
      j["mode"] = "tropical";
    } else if (mode == LRC_GEOMETRIC) {
      j["mode"] = "geometric";
    } else {
      throw ArgumentError("unknown mode");
    }
    auto t = lrc::json_io::tuple_from_json(j);
    std::visit([](const auto& p) { lrc::validate(p); }, t);
    *out = new lrc_tuple{std::move(t)};
    return LRC_OK;
  });
}

lrc_status lrc_tuple_from_json(const char* text, lrc_tuple** out) {
  return guard([&] {
    require(out, "out");
    auto t = lrc::json_io::tuple_from_json(parse_json(text));
    std::visit([](const auto& p) { lrc::validate(p); }, t);
    *out = new lrc_tuple{std::move(t)};
    return LRC_OK;
  });
}

void lrc_tuple_free(lrc_tuple* t) { delete t; }

lrc_status lrc_tuple_to_json(const lrc_tuple* t, char** out) {
  return guard([&] {
    require(t, "tuple");
    require(out, "out");
    return emit(lrc::json_io::to_json(t->value), out);
  });
}

lrc_status lrc_tuple_transition(const lrc_tuple* t, const lrc_cartan* a, const int* target,
                                size_t target_len, lrc_tuple** out) {
  return guard([&] {
    require(t, "tuple");
    require(a, "cartan");
    require(out, "out");
    auto r = lrc::transition(t->value, lrc::ReducedWord{ints(target, target_len)}, a->value);
    *out = new lrc_tuple{std::move(r)};
    return LRC_OK;
  });
}

lrc_status lrc_tuple_braid_move(const lrc_tuple* t, const lrc_cartan* a, size_t position, int kind,
                                lrc_tuple** out) {
  return guard([&] {
    require(t, "tuple");
    require(a, "cartan");
    require(out, "out");
    if (kind != 2 && kind != 3) throw ArgumentError("move kind must be 2 or 3");
    const auto mk = kind == 2 ? lrc::MoveKind::Commute : lrc::MoveKind::Braid3;
    auto r = std::visit(
        [&](const auto& p) -> lrc::ParamTuple { return lrc::apply_braid_move(p, position, mk, a->value); },
        t->value);
    *out = new lrc_tuple{std::move(r)};
    return LRC_OK;
  });
}

lrc_status lrc_verify_tropicalization_json(const lrc_cartan* a, const int* from, const int* to,
                                           size_t length, size_t samples, char** out) {
  return guard([&] {
    require(a, "cartan");
    require(out, "out");
    try {
      const auto r = lrc::verify_tropicalization(a->value, lrc::ReducedWord{ints(from, length)},
                                                 lrc::ReducedWord{ints(to, length)}, samples);
      return emit(lrc::json_io::to_json(r), out);
    } catch (const lrc::ExpressionBlowup& e) {
      last_error = e.what();
      return emit(lrc::json_io::to_json(e.partial()), out, LRC_ERR_RESOURCE);
    }
  });
}

lrc_status lrc_matrix_from_json(const char* text, lrc_matrix** out) {
  return guard([&] {
    require(out, "out");
    *out = new lrc_matrix{lrc::json_io::matrix_from_json(parse_json(text))};
    return LRC_OK;
  });
}

lrc_status lrc_matrix_from_word(const int* word, const char* const* params, size_t length, int n,
                                lrc_matrix** out) {
  return guard([&] {
    require(out, "out");
    if (length > 0) require(params, "params");
    std::vector<lrc::Rational> t;
    for (size_t k = 0; k < length; ++k) {
      require(params[k], "param");
      t.push_back(lrc::parse_rational(params[k]));
    }
    *out = new lrc_matrix{lrc::group_element_from_word(ints(word, length), t, n)};
    return LRC_OK;
  });
}

void lrc_matrix_free(lrc_matrix* x) { delete x; }

lrc_status lrc_matrix_to_json(const lrc_matrix* x, char** out) {
  return guard([&] {
    require(x, "matrix");
    require(out, "out");
    return emit(lrc::json_io::to_json(x->value), out);
  });
}

lrc_status lrc_matrix_minor(const lrc_matrix* x, const int* rows, const int* cols, size_t size,
                            char** out) {
  return guard([&] {
    require(x, "matrix");
    require(out, "out");
    *out = copy_string(lrc::to_string(lrc::minor(x->value, {ints(rows, size), ints(cols, size)})));
    return LRC_OK;
  });
}

lrc_status lrc_matrix_is_totally_positive(const lrc_matrix* x, int* out) {
  return guard([&] {
    require(x, "matrix");
    require(out, "out");
    *out = lrc::is_totally_positive_upper(x->value) ? 1 : 0;
    return LRC_OK;
  });
}

lrc_status lrc_matrix_boundary_parameters(const lrc_matrix* x, const int* word, size_t length,
                                          char** t_first, char** t_last) {
  return guard([&] {
    require(x, "matrix");
    require(t_first, "t_first");
    require(t_last, "t_last");
    const auto [a, b] = lrc::boundary_parameters(x->value, lrc::ReducedWord{ints(word, length)});
    *t_first = copy_string(lrc::to_string(a));
    *t_last = copy_string(lrc::to_string(b));
    return LRC_OK;
  });
}

lrc_status lrc_identity_sweep_json(const char* which, int n, size_t samples, uint64_t seed,
                                   char** out) {
  return guard([&] {
    require(which, "which");
    require(out, "out");
    lrc::MinorIdentity id;
    if (std::strcmp(which, "dodgson") == 0) {
      id = lrc::MinorIdentity::Dodgson;
    } else if (std::strcmp(which, "plucker") == 0) {
      id = lrc::MinorIdentity::Plucker;
    } else {
      throw ArgumentError("identity must be \"dodgson\" or \"plucker\"");
    }
    return emit(lrc::json_io::to_json(lrc::sweep_identity(id, n, samples, seed)), out);
  });
}

lrc_status lrc_seed_from_json(const char* text, lrc_seed** out) {
  return guard([&] {
    require(out, "out");
    *out = new lrc_seed{lrc::json_io::seed_from_json(parse_json(text))};
    return LRC_OK;
  });
}

lrc_status lrc_seed_from_cartan(const lrc_cartan* a, lrc_seed** out) {
  return guard([&] {
    require(a, "cartan");
    require(out, "out");
    *out = new lrc_seed{lrc::Seed::initial(lrc::exchange_matrix_for_cartan(a->value))};
    return LRC_OK;
  });
}

lrc_status lrc_seed_grassmannian(int n, lrc_seed** out) {
  return guard([&] {
    require(out, "out");
    *out = new lrc_seed{lrc::grassmannian_seed(n).seed};
    return LRC_OK;
  });
}

void lrc_seed_free(lrc_seed* s) { delete s; }

lrc_status lrc_seed_to_json(const lrc_seed* s, char** out) {
  return guard([&] {
    require(s, "seed");
    require(out, "out");
    return emit(lrc::json_io::to_json(s->value), out);
  });
}

lrc_status lrc_seed_mutate(const lrc_seed* s, int k, lrc_seed** out) {
  return guard([&] {
    require(s, "seed");
    require(out, "out");
    *out = new lrc_seed{lrc::mutate_seed(s->value, k)};
    return LRC_OK;
  });
}

lrc_status lrc_seed_exchange_relation(const lrc_seed* s, int k, char** out) {
  return guard([&] {
    require(s, "seed");
    require(out, "out");
    const auto& seed = s->value;
    const int n = seed.n();
    if (k < 1 || k > n) throw lrc::DomainError("mutation direction out of range");
    std::vector<std::string> cluster(seed.names.begin(), seed.names.begin() + n);
    std::vector<std::string> coeffs(seed.names.begin() + n, seed.names.end());
    *out = copy_string(lrc::exchange_relation_text(cluster, coeffs, seed.matrix, k,
                                                   cluster[k - 1] + "'"));
    return LRC_OK;
  });
}

lrc_status lrc_enumerate_clusters_json(const lrc_seed* s, size_t max_seeds, size_t max_terms,
                                       int list_variables, char** out) {
  return guard([&] {
    require(s, "seed");
    require(out, "out");
    const auto g = lrc::enumerate_exchange_graph(s->value, {max_seeds, max_terms});
    if (!g.complete) last_error = "exchange graph enumeration stopped at a cap";
    return emit(lrc::json_io::to_json(g, s->value.names, list_variables != 0), out,
                g.complete ? LRC_OK : LRC_ERR_RESOURCE);
  });
}

lrc_status lrc_laurent_check_json(const lrc_seed* s, int depth, size_t max_seeds, size_t max_terms,
                                  char** out) {
  return guard([&] {
    require(s, "seed");
    require(out, "out");
    const auto r = lrc::laurent_check(s->value.matrix, depth, {max_seeds, max_terms});
    lrc_status status = LRC_OK;
    if (!r.pass) {
      status = LRC_ERR_INTERNAL;
      last_error = r.failure;
    } else if (r.cap_hit) {
      status = LRC_ERR_RESOURCE;
      last_error = "Laurent check stopped at a cap";
    }
    return emit(lrc::json_io::to_json(r, s->value.names), out, status);
  });
}

lrc_status lrc_finite_type_json(const lrc_seed* s, size_t max_class, char** out) {
  return guard([&] {
    require(s, "seed");
    require(out, "out");
    const auto r = lrc::is_finite_type(s->value.matrix, max_class);
    const bool capped = r.cap_hit;
    if (capped) last_error = r.reason;
    return emit(lrc::json_io::to_json(r), out, capped ? LRC_ERR_RESOURCE : LRC_OK);
  });
}

lrc_status lrc_grassmannian_check_json(int n, char** out) {
  return guard([&] {
    require(out, "out");
    return emit(lrc::json_io::to_json(lrc::check_grassmannian(n)), out);
  });
}

}  // extern "C"
