#include "digitfn.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "bseries.hpp"
#include "catalog.hpp"
#include "clt.hpp"
#include "digits.hpp"
#include "quasi.hpp"
#include "serialize.hpp"

using namespace digitfn;
using ordered_json = nlohmann::ordered_json;

struct digitfn_function {
  Builtin builtin;
};
struct digitfn_rep {
  LinearRepresentation rep;
};
struct digitfn_transducer {
  Transducer t;
};

namespace {

thread_local std::string g_last_error;

digitfn_status to_status(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return DIGITFN_ERR_INVALID_ARGUMENT;
    case Errc::unsupported_block: return DIGITFN_ERR_UNSUPPORTED_BLOCK;
    case Errc::domain: return DIGITFN_ERR_DOMAIN;
    case Errc::composition: return DIGITFN_ERR_COMPOSITION;
    case Errc::not_canonical: return DIGITFN_ERR_NOT_CANONICAL;
    case Errc::minimization_conflict: return DIGITFN_ERR_MINIMIZATION_CONFLICT;
    case Errc::singular: return DIGITFN_ERR_SINGULAR;
    case Errc::disconnected: return DIGITFN_ERR_DISCONNECTED;
    case Errc::parse: return DIGITFN_ERR_PARSE;
    case Errc::unknown_function: return DIGITFN_ERR_UNKNOWN_FUNCTION;
    case Errc::verification_failed: return DIGITFN_ERR_VERIFICATION_FAILED;
    case Errc::convergence: return DIGITFN_ERR_CONVERGENCE;
  }
  return DIGITFN_ERR_INTERNAL;
}

template <class Fn>
digitfn_status wrap(Fn&& fn) {
  try {
    fn();
    return DIGITFN_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DIGITFN_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

digitfn_status require(bool cond, const char* msg) {
  if (cond) return DIGITFN_OK;
  g_last_error = msg;
  return DIGITFN_ERR_INVALID_ARGUMENT;
}

// numeric-pipeline defaults: deep transfer for additive representations,
// enumeration depth keyed to the B-set growth otherwise
unsigned default_truncation(const Builtin& b) {
  if (b.rep && b.spec.mode == Mode::additive) return 320;
  if (b.spec.r <= 1) return 48;
  if (b.spec.r == 2) return 30;
  return 28;
}

BSeries build_bseries(const Builtin& b, unsigned L, bool tail) {
  if (!b.identity_verified)
    fail(Errc::domain, b.spec.name + " is not quasiadditive/-multiplicative; no B-series");
  BSeries B;
  if (b.rep && b.spec.mode == Mode::additive) {
    B = bseries_transfer(*b.rep, b.spec.r, L);
  } else if (b.rep) {
    B = bseries_enumerate_rep(*b.rep, b.spec.mode, b.spec.r, L);
  } else {
    B = bseries_enumerate(b.spec, L);
  }
  if (tail) fit_tail(B);
  return B;
}

ordered_json moments_json(const MomentSums& m) {
  ordered_json j;
  if (m.exact) {
    j["provenance"] = "exact";
    j["bt"] = m.bt.str();
    j["btt"] = m.btt.str();
    j["btx"] = m.btx.str();
  } else {
    j["provenance"] = "truncated";
    j["L"] = m.truncation;
    j["tail"] = m.tail_used;
    if (m.tail_used) {
      j["tail_gamma"] = m.tail_gamma;
      j["tail_fit"] = m.tail_fit;
    }
    j["bt"] = m.bt.as_double();
    j["btt"] = m.btt.as_double();
    j["btx"] = m.btx.as_double();
  }
  return j;
}

ordered_json value_json(const Value& v) {
  if (v.is_exact()) return v.str();
  return v.as_double();
}

}  // namespace

extern "C" {

const char* digitfn_version(void) { return "1.0.0"; }

const char* digitfn_status_name(digitfn_status s) {
  switch (s) {
    case DIGITFN_OK: return "ok";
    case DIGITFN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DIGITFN_ERR_UNSUPPORTED_BLOCK: return "unsupported block";
    case DIGITFN_ERR_DOMAIN: return "domain error";
    case DIGITFN_ERR_COMPOSITION: return "composition error";
    case DIGITFN_ERR_NOT_CANONICAL: return "representation not canonical";
    case DIGITFN_ERR_MINIMIZATION_CONFLICT: return "minimization conflict";
    case DIGITFN_ERR_SINGULAR: return "singular system";
    case DIGITFN_ERR_DISCONNECTED: return "disconnected transducer";
    case DIGITFN_ERR_PARSE: return "parse error";
    case DIGITFN_ERR_UNKNOWN_FUNCTION: return "unknown function";
    case DIGITFN_ERR_VERIFICATION_FAILED: return "verification failed";
    case DIGITFN_ERR_CONVERGENCE: return "no convergence";
    default: return "internal error";
  }
}

const char* digitfn_last_error(void) { return g_last_error.c_str(); }

void digitfn_string_free(char* s) { std::free(s); }
void digitfn_u64_free(uint64_t* p) { std::free(p); }

digitfn_status digitfn_function_open(const char* name, digitfn_function** out) {
  if (auto st = require(name && out, "name and out must be non-null")) return st;
  return wrap([&] { *out = new digitfn_function{catalog_lookup(name)}; });
}

void digitfn_function_close(digitfn_function* f) { delete f; }

digitfn_status digitfn_function_info(const digitfn_function* f, unsigned* q, unsigned* r,
                                     int* multiplicative, char** summary) {
  if (auto st = require(f != nullptr, "null function handle")) return st;
  if (q) *q = f->builtin.spec.q;
  if (r) *r = f->builtin.spec.r;
  if (multiplicative) *multiplicative = f->builtin.spec.mode == Mode::multiplicative ? 1 : 0;
  if (summary) *summary = dup_string(f->builtin.summary);
  return DIGITFN_OK;
}

digitfn_status digitfn_function_eval(const digitfn_function* f, uint64_t n, char** value) {
  if (auto st = require(f && value, "null argument")) return st;
  return wrap([&] { *value = dup_string(f->builtin.spec.eval(n).str()); });
}

digitfn_status digitfn_function_eval_split(const digitfn_function* f, uint64_t n, char** value) {
  if (auto st = require(f && value, "null argument")) return st;
  return wrap([&] { *value = dup_string(eval_by_splitting(f->builtin.spec, n).str()); });
}

digitfn_status digitfn_naf(uint64_t n, char** out) {
  if (auto st = require(out != nullptr, "null out")) return st;
  return wrap([&] { *out = dup_string(signed_str(naf(n))); });
}

digitfn_status digitfn_split(uint64_t n, unsigned q, unsigned r, uint64_t** blocks,
                             uint64_t** reduced, size_t* count) {
  if (auto st = require(blocks && reduced && count, "null out")) return st;
  return wrap([&] {
    SplitResult s = split_blocks(n, q, r);
    *count = s.blocks.size();
    *blocks = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * std::max<size_t>(1, s.blocks.size())));
    *reduced = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * std::max<size_t>(1, s.blocks.size())));
    for (size_t i = 0; i < s.blocks.size(); ++i) {
      (*blocks)[i] = s.blocks[i];
      (*reduced)[i] = s.reduced[i];
    }
  });
}

digitfn_status digitfn_bset(unsigned q, unsigned r, unsigned max_len, uint64_t** members,
                            size_t* count) {
  if (auto st = require(members && count, "null out")) return st;
  return wrap([&] {
    auto v = enumerate_bset(q, r, max_len);
    *count = v.size();
    *members = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * std::max<size_t>(1, v.size())));
    for (size_t i = 0; i < v.size(); ++i) (*members)[i] = v[i];
  });
}

digitfn_status digitfn_check_quasi(const digitfn_function* f, uint64_t a_max, unsigned k_max,
                                   int r_override, const char* mode_override, int* ok,
                                   char** report_json) {
  if (auto st = require(f && ok, "null argument")) return st;
  return wrap([&] {
    QuasiSpec spec = f->builtin.spec;
    if (r_override >= 0) spec.r = static_cast<unsigned>(r_override);
    if (mode_override) {
      std::string m = mode_override;
      if (m == "additive") spec.mode = Mode::additive;
      else if (m == "multiplicative") spec.mode = Mode::multiplicative;
      else fail(Errc::invalid_argument, "mode must be additive or multiplicative");
    }
    auto cx = verify_identity(spec, a_max, k_max);
    *ok = cx ? 0 : 1;
    if (report_json) {
      ordered_json j;
      j["fn"] = spec.name;
      j["q"] = spec.q;
      j["r"] = spec.r;
      j["mode"] = mode_name(spec.mode);
      j["a_max"] = a_max;
      j["k_max"] = k_max;
      j["ok"] = !cx;
      if (cx) {
        ordered_json c;
        c["a"] = cx->a;
        c["k"] = cx->k;
        c["b"] = cx->b;
        c["lhs"] = value_json(cx->lhs);
        c["rhs"] = value_json(cx->rhs);
        j["counterexample"] = c;
      }
      *report_json = dup_string(j.dump(2));
    }
  });
}

digitfn_status digitfn_rep_open_file(const char* path, digitfn_rep** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return wrap([&] { *out = new digitfn_rep{rep_from_file(path)}; });
}

digitfn_status digitfn_rep_open_json(const char* json_text, digitfn_rep** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  return wrap([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::parse, e.what());
    }
    *out = new digitfn_rep{rep_from_json(j)};
  });
}

digitfn_status digitfn_rep_open_builtin(const digitfn_function* f, digitfn_rep** out) {
  if (auto st = require(f && out, "null argument")) return st;
  return wrap([&] {
    if (!f->builtin.rep)
      fail(Errc::invalid_argument, f->builtin.spec.name + " has no built-in representation");
    *out = new digitfn_rep{*f->builtin.rep};
  });
}

void digitfn_rep_close(digitfn_rep* r) { delete r; }

digitfn_status digitfn_rep_dimension(const digitfn_rep* r, size_t* dim) {
  if (auto st = require(r && dim, "null argument")) return st;
  *dim = r->rep.dim;
  return DIGITFN_OK;
}

digitfn_status digitfn_rep_eval(const digitfn_rep* r, uint64_t n, char** value) {
  if (auto st = require(r && value, "null argument")) return st;
  return wrap([&] { *value = dup_string(rat_to_string(eval_rep(r->rep, n))); });
}

digitfn_status digitfn_rep_is_zero_insensitive(const digitfn_rep* r, int* flag) {
  if (auto st = require(r && flag, "null argument")) return st;
  return wrap([&] { *flag = is_zero_insensitive(r->rep) ? 1 : 0; });
}

digitfn_status digitfn_rep_minimize(const digitfn_rep* r, digitfn_rep** out) {
  if (auto st = require(r && out, "null argument")) return st;
  return wrap([&] { *out = new digitfn_rep{minimize(r->rep)}; });
}

digitfn_status digitfn_rep_to_json(const digitfn_rep* r, char** json_text) {
  if (auto st = require(r && json_text, "null argument")) return st;
  return wrap([&] { *json_text = dup_string(rep_to_json(r->rep).dump(2)); });
}

digitfn_status digitfn_check_regular_mult(const digitfn_rep* r, unsigned param_r, int raw, int* ok,
                                          char** report_json) {
  if (auto st = require(r && ok, "null argument")) return st;
  return wrap([&] {
    ordered_json j;
    j["check"] = "quasimultiplicative";
    j["condition"] = "M0^r = v u^t";
    j["r"] = param_r;
    j["raw"] = raw != 0;
    j["input_dim"] = r->rep.dim;
    if (raw) {
      bool pass = quasimult_condition(r->rep, param_r);
      j["zero_insensitive"] = is_zero_insensitive(r->rep);
      j["ok"] = pass;
      *ok = pass ? 1 : 0;
    } else {
      auto rep = check_quasimultiplicative(r->rep, param_r);
      j["minimal_dim"] = rep.minimal_dim;
      j["zero_insensitive"] = rep.zero_insensitive_after;
      j["ok"] = rep.ok;
      *ok = rep.ok ? 1 : 0;
    }
    if (report_json) *report_json = dup_string(j.dump(2));
  });
}

digitfn_status digitfn_check_regular_add(const digitfn_rep* r, unsigned param_r, int* ok,
                                         char** report_json) {
  if (auto st = require(r && ok, "null argument")) return st;
  return wrap([&] {
    auto rep = check_quasiadditive(r->rep, param_r);
    *ok = rep.ok ? 1 : 0;
    if (report_json) {
      ordered_json j;
      j["check"] = "quasiadditive";
      j["r"] = param_r;
      j["dim"] = r->rep.dim;
      j["dim_U"] = rep.dim_left;
      j["dim_V"] = rep.dim_right;
      j["conditions"] = {
          {"uv_zero", rep.uv_zero},
          {"U_orthogonal_to_(M0^r-I)v", rep.left_orthogonal},
          {"u(M0^r-I)_orthogonal_to_V", rep.right_orthogonal},
          {"U_M0^r_V_zero", rep.cross_zero},
      };
      j["ok"] = rep.ok;
      *report_json = dup_string(j.dump(2));
    }
  });
}

digitfn_status digitfn_transducer_open_file(const char* path, digitfn_transducer** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return wrap([&] { *out = new digitfn_transducer{transducer_from_file(path)}; });
}

digitfn_status digitfn_transducer_open_json(const char* json_text, digitfn_transducer** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  return wrap([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::parse, e.what());
    }
    *out = new digitfn_transducer{transducer_from_json(j)};
  });
}

void digitfn_transducer_close(digitfn_transducer* t) { delete t; }

digitfn_status digitfn_transducer_eval(const digitfn_transducer* t, uint64_t n, char** value) {
  if (auto st = require(t && value, "null argument")) return st;
  return wrap([&] { *value = dup_string(rat_to_string(transducer_eval(t->t, n))); });
}

digitfn_status digitfn_check_transducer(const digitfn_transducer* t, unsigned param_r, int* ok,
                                        char** report_json) {
  if (auto st = require(t && ok, "null argument")) return st;
  return wrap([&] {
    auto rep = check_transducer_conditions(t->t, param_r);
    *ok = rep.ok ? 1 : 0;
    if (report_json) {
      ordered_json j;
      j["check"] = "transducer quasiadditivity";
      j["r"] = param_r;
      j["states"] = t->t.size();
      j["conditions"] = {
          {"reset_to_initial", rep.reset_to_initial},
          {"reset_sum_matches_final", rep.reset_sum_matches_final},
          {"trailing_zeros_invariant", rep.trailing_zeros_invariant},
      };
      j["ok"] = rep.ok;
      if (!rep.ok) j["failure"] = rep.failure;
      *report_json = dup_string(j.dump(2));
    }
  });
}

digitfn_status digitfn_constants(const digitfn_function* f, const digitfn_constants_opts* opts,
                                 char** report_json) {
  if (auto st = require(f && report_json, "null argument")) return st;
  return wrap([&] {
    const Builtin& b = f->builtin;
    digitfn_constants_opts o = opts ? *opts : digitfn_constants_opts{0, 0, 1};
    ordered_json j;
    j["fn"] = b.spec.name;
    j["q"] = b.spec.q;
    j["r"] = b.spec.r;
    j["mode"] = mode_name(b.spec.mode);
    MomentSums m;
    if (o.exact) {
      if (!b.rep || b.spec.mode != Mode::additive)
        fail(Errc::domain,
             "exact constants need an additive function with a built-in representation");
      m = exact_moments(*b.rep, b.spec.r);
    } else {
      unsigned L = o.truncate_L ? o.truncate_L : default_truncation(b);
      BSeries B = build_bseries(b, L, o.tail != 0);
      m = truncated_moments(B);
    }
    j["moments"] = moments_json(m);
    j["mu"] = value_json(mean_constant(m, b.spec.q, b.spec.r));
    j["sigma2"] = value_json(variance_constant(m, b.spec.q, b.spec.r));
    *report_json = dup_string(j.dump(2));
  });
}

digitfn_status digitfn_singularity_mean(const digitfn_function* f, unsigned truncate_L, int tail,
                                        double* mu_out) {
  if (auto st = require(f && mu_out, "null argument")) return st;
  return wrap([&] {
    const Builtin& b = f->builtin;
    unsigned L = truncate_L ? truncate_L : default_truncation(b);
    BSeries B = build_bseries(b, L, tail != 0);
    const double h = 1e-4;
    double ap = dominant_singularity(B, h);
    double am = dominant_singularity(B, -h);
    *mu_out = -static_cast<double>(b.spec.q) * (ap - am) / (2 * h);
  });
}

digitfn_status digitfn_experiment(const digitfn_function* f, unsigned k, unsigned jobs,
                                  char** report_json) {
  if (auto st = require(f && report_json, "null argument")) return st;
  return wrap([&] {
    auto rep = empirical_experiment(f->builtin.spec, k, jobs == 0 ? 1 : jobs);
    ordered_json j;
    j["fn"] = f->builtin.spec.name;
    j["k"] = rep.k;
    j["count"] = rep.count;
    j["mean"] = rep.mean;
    j["variance"] = rep.variance;
    j["ks_distance"] = rep.ks_distance;
    j["degenerate"] = rep.degenerate;
    ordered_json h = ordered_json::array();
    for (auto& [v, c] : rep.histogram) h.push_back({v, c});
    j["histogram"] = h;
    *report_json = dup_string(j.dump(2));
  });
}

digitfn_status digitfn_gf_check(const digitfn_function* f, unsigned L, const long* ts,
                                size_t ts_count, int* ok, char** report_json) {
  if (auto st = require(f && ok && (ts || ts_count == 0), "null argument")) return st;
  return wrap([&] {
    std::vector<long> tv(ts, ts + ts_count);
    if (tv.empty()) tv = {0, 1, 2};
    auto res = gf_identity_check(f->builtin.spec, L, tv);
    *ok = res.ok ? 1 : 0;
    if (report_json) {
      ordered_json j;
      j["fn"] = f->builtin.spec.name;
      j["L"] = L;
      j["t"] = tv;
      j["k_max"] = res.k_checked;
      j["ok"] = res.ok;
      if (!res.ok) j["detail"] = res.detail;
      *report_json = dup_string(j.dump(2));
    }
  });
}

}  // extern "C"
