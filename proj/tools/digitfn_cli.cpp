// digitfn command line tool. Talks to the library exclusively through the
// C API in digitfn.h; reports are rendered from the library's JSON.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "digitfn.h"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct StringOut {
  char* p = nullptr;
  ~StringOut() { digitfn_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

[[noreturn]] void die(digitfn_status st) {
  std::cerr << "error: " << digitfn_status_name(st) << ": " << digitfn_last_error() << "\n";
  std::exit(kExitError);
}

void check(digitfn_status st) {
  if (st != DIGITFN_OK) die(st);
}

std::string fmt_real(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", d);
  return buf;
}

// report values arrive either as "p/q" strings or JSON numbers
std::string fmt_value(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  return fmt_real(v.get<double>());
}

struct FunctionHandle {
  digitfn_function* f = nullptr;
  ~FunctionHandle() { digitfn_function_close(f); }
};

struct RepHandle {
  digitfn_rep* r = nullptr;
  ~RepHandle() { digitfn_rep_close(r); }
};

struct TransducerHandle {
  digitfn_transducer* t = nullptr;
  ~TransducerHandle() { digitfn_transducer_close(t); }
};

void open_function(const std::string& name, FunctionHandle& h) {
  check(digitfn_function_open(name.c_str(), &h.f));
}

void print_report(const std::string& json_text, bool as_json,
                  const std::function<void(const ordered_json&)>& text_renderer) {
  if (as_json) {
    std::cout << json_text << "\n";
    return;
  }
  text_renderer(ordered_json::parse(json_text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digitfn: q-quasiadditive and q-quasimultiplicative digital functions"};
  app.require_subcommand(1);

  bool json_out = false;
  app.add_flag("--json", json_out, "structured JSON output");

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "evaluate a catalog function, representation or transducer");
  std::string eval_fn, eval_rep_file, eval_trans_file;
  uint64_t eval_n = 0;
  bool eval_split = false;
  eval->add_option("--fn", eval_fn, "catalog function name");
  eval->add_option("--rep", eval_rep_file, "linear representation file");
  eval->add_option("--trans", eval_trans_file, "transducer file");
  eval->add_option("--n", eval_n, "argument")->required();
  eval->add_flag("--split", eval_split, "evaluate through the block-splitting decomposition");

  // ---- split ----
  auto* split = app.add_subcommand("split", "block decomposition along runs of >= r zeros");
  uint64_t split_n = 0;
  unsigned split_q = 2, split_r = 1;
  split->add_option("--n", split_n, "integer to split")->required();
  split->add_option("--q", split_q, "base")->required();
  split->add_option("--r", split_r, "zero-run parameter")->required();

  // ---- check-quasi ----
  auto* cq = app.add_subcommand("check-quasi", "brute-force functional equation check");
  std::string cq_fn, cq_mode;
  int cq_r = -1;
  unsigned cq_q = 0;
  uint64_t cq_amax = 64;
  unsigned cq_kmax = 8;
  cq->add_option("--fn", cq_fn, "catalog function name")->required();
  cq->add_option("--q", cq_q, "base (must match the catalog entry)");
  cq->add_option("--r", cq_r, "parameter override");
  cq->add_option("--mode", cq_mode, "additive|multiplicative override");
  cq->add_option("--amax", cq_amax, "largest a");
  cq->add_option("--kmax", cq_kmax, "largest k");

  // ---- check-regular ----
  auto* cr = app.add_subcommand("check-regular", "decision procedures on a linear representation");
  std::string cr_file;
  bool cr_mult = false, cr_add = false, cr_raw = false;
  unsigned cr_r = 0;
  cr->add_option("--rep", cr_file, "representation file")->required();
  cr->add_flag("--mult", cr_mult, "quasimultiplicativity (M0^r = v u^t)");
  cr->add_flag("--add", cr_add, "quasiadditivity (four conditions)");
  cr->add_flag("--raw", cr_raw, "test the representation as given (skip minimization)");
  cr->add_option("--r", cr_r, "parameter r")->required();

  // ---- check-transducer ----
  auto* ct = app.add_subcommand("check-transducer", "sufficient conditions on a transducer");
  std::string ct_file;
  unsigned ct_r = 0;
  ct->add_option("--trans", ct_file, "transducer file")->required();
  ct->add_option("--r", ct_r, "parameter r")->required();

  // ---- constants ----
  auto* cc = app.add_subcommand("constants", "central limit mean/variance constants");
  std::string cc_fn, cc_tail = "on";
  bool cc_exact = false;
  unsigned cc_L = 0;
  cc->add_option("--fn", cc_fn, "catalog function name")->required();
  cc->add_flag("--exact", cc_exact, "exact rational pipeline");
  cc->add_option("--truncate", cc_L, "truncation length for the numeric pipeline");
  cc->add_option("--tail", cc_tail, "tail extrapolation on|off")
      ->check(CLI::IsMember({"on", "off"}));

  // ---- experiment ----
  auto* ex = app.add_subcommand("experiment", "exhaustive distribution of lambda over [0, q^k)");
  std::string ex_fn, ex_out, ex_hist;
  std::vector<unsigned> ex_ks;
  unsigned ex_jobs = 1;
  ex->add_option("--fn", ex_fn, "catalog function name")->required();
  ex->add_option("--k", ex_ks, "digit count(s)")->required();
  ex->add_option("--out", ex_out, "write k,count,mean,variance,ks_distance CSV here");
  ex->add_option("--hist", ex_hist, "write value,standardized,count histogram CSV here (last k)");
  ex->add_option("--jobs", ex_jobs, "worker threads (result independent of this)");

  // ---- gf-check ----
  auto* gf = app.add_subcommand("gf-check", "generating function identity check");
  std::string gf_fn;
  unsigned gf_L = 16;
  std::vector<long> gf_ts{0, 1, 2};
  gf->add_option("--fn", gf_fn, "catalog function name")->required();
  gf->add_option("--L", gf_L, "series truncation degree");
  gf->add_option("--t", gf_ts, "integer t values");

  // ---- bset ----
  auto* bs = app.add_subcommand("bset", "members of the B-set ordered by (length, value)");
  unsigned bs_q = 2, bs_r = 1, bs_len = 8;
  size_t bs_limit = 0;
  bs->add_option("--q", bs_q, "base")->required();
  bs->add_option("--r", bs_r, "forbidden zero-run length")->required();
  bs->add_option("--max-len", bs_len, "maximum expansion length")->required();
  bs->add_option("--limit", bs_limit, "print at most this many members");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (eval->parsed()) {
    int sources = !eval_fn.empty() + !eval_rep_file.empty() + !eval_trans_file.empty();
    if (sources != 1) {
      std::cerr << "error: eval needs exactly one of --fn, --rep, --trans\n";
      return kExitError;
    }
    StringOut value;
    ordered_json j;
    if (!eval_fn.empty()) {
      FunctionHandle f;
      open_function(eval_fn, f);
      check(eval_split ? digitfn_function_eval_split(f.f, eval_n, &value.p)
                       : digitfn_function_eval(f.f, eval_n, &value.p));
      j["fn"] = eval_fn;
      j["n"] = eval_n;
      j["via"] = eval_split ? "splitting" : "direct";
      j["value"] = value.str();
      if (eval_fn == "naf-weight" || eval_fn == "naf-exp") {
        StringOut nafs;
        check(digitfn_naf(eval_n, &nafs.p));
        j["naf"] = nafs.str();
      }
    } else if (!eval_rep_file.empty()) {
      RepHandle r;
      check(digitfn_rep_open_file(eval_rep_file.c_str(), &r.r));
      check(digitfn_rep_eval(r.r, eval_n, &value.p));
      j["rep"] = eval_rep_file;
      j["n"] = eval_n;
      j["value"] = value.str();
    } else {
      TransducerHandle t;
      check(digitfn_transducer_open_file(eval_trans_file.c_str(), &t.t));
      check(digitfn_transducer_eval(t.t, eval_n, &value.p));
      j["transducer"] = eval_trans_file;
      j["n"] = eval_n;
      j["value"] = value.str();
    }
    if (json_out) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << value.str() << "\n";
      if (j.contains("naf")) std::cout << "naf: " << j["naf"].get<std::string>() << "\n";
    }
    return kExitOk;
  }

  if (split->parsed()) {
    uint64_t *blocks = nullptr, *reduced = nullptr;
    size_t count = 0;
    check(digitfn_split(split_n, split_q, split_r, &blocks, &reduced, &count));
    if (json_out) {
      ordered_json j;
      j["n"] = split_n;
      j["q"] = split_q;
      j["r"] = split_r;
      j["blocks"] = std::vector<uint64_t>(blocks, blocks + count);
      j["reduced"] = std::vector<uint64_t>(reduced, reduced + count);
      std::cout << j.dump(2) << "\n";
    } else {
      auto line = [count](const char* label, uint64_t* xs) {
        std::cout << label;
        for (size_t i = 0; i < count; ++i) std::cout << (i ? "," : "") << xs[i];
        std::cout << "\n";
      };
      line("blocks: ", blocks);
      line("reduced: ", reduced);
    }
    digitfn_u64_free(blocks);
    digitfn_u64_free(reduced);
    return kExitOk;
  }

  if (cq->parsed()) {
    FunctionHandle f;
    open_function(cq_fn, f);
    if (cq_q != 0) {
      unsigned q = 0;
      check(digitfn_function_info(f.f, &q, nullptr, nullptr, nullptr));
      if (q != cq_q) {
        std::cerr << "error: " << cq_fn << " works in base " << q << ", not " << cq_q << "\n";
        return kExitError;
      }
    }
    int ok = 0;
    StringOut report;
    check(digitfn_check_quasi(f.f, cq_amax, cq_kmax, cq_r,
                              cq_mode.empty() ? nullptr : cq_mode.c_str(), &ok, &report.p));
    print_report(report.str(), json_out, [&](const ordered_json& j) {
      std::cout << "fn: " << j["fn"].get<std::string>() << " (q=" << j["q"] << ", r=" << j["r"]
                << ", " << j["mode"].get<std::string>() << ")\n";
      std::cout << "window: a <= " << j["a_max"] << ", k <= " << j["k_max"] << "\n";
      if (j["ok"].get<bool>()) {
        std::cout << "identity: PASS\n";
      } else {
        const auto& c = j["counterexample"];
        std::cout << "identity: FAIL at a=" << c["a"] << " k=" << c["k"] << " b=" << c["b"]
                  << " (lhs " << fmt_value(c["lhs"]) << ", rhs " << fmt_value(c["rhs"]) << ")\n";
      }
    });
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (cr->parsed()) {
    if (cr_mult == cr_add) {
      std::cerr << "error: choose exactly one of --mult / --add\n";
      return kExitError;
    }
    RepHandle r;
    check(digitfn_rep_open_file(cr_file.c_str(), &r.r));
    int ok = 0;
    StringOut report;
    if (cr_mult) {
      check(digitfn_check_regular_mult(r.r, cr_r, cr_raw ? 1 : 0, &ok, &report.p));
      print_report(report.str(), json_out, [&](const ordered_json& j) {
        std::cout << "check: M0^r = v u^t with r=" << j["r"] << (cr_raw ? " (raw)" : "") << "\n";
        std::cout << "input dimension: " << j["input_dim"] << "\n";
        if (j.contains("minimal_dim")) std::cout << "minimal dimension: " << j["minimal_dim"] << "\n";
        std::cout << "zero-insensitive: " << (j["zero_insensitive"].get<bool>() ? "yes" : "no") << "\n";
        std::cout << "result: " << (j["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
      });
    } else {
      check(digitfn_check_regular_add(r.r, cr_r, &ok, &report.p));
      print_report(report.str(), json_out, [&](const ordered_json& j) {
        std::cout << "check: quasiadditive with r=" << j["r"] << "\n";
        std::cout << "dim U: " << j["dim_U"] << ", dim V: " << j["dim_V"] << "\n";
        for (auto& [name, val] : j["conditions"].items())
          std::cout << "  " << name << ": " << (val.get<bool>() ? "PASS" : "FAIL") << "\n";
        std::cout << "result: " << (j["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
      });
    }
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (ct->parsed()) {
    TransducerHandle t;
    check(digitfn_transducer_open_file(ct_file.c_str(), &t.t));
    int ok = 0;
    StringOut report;
    check(digitfn_check_transducer(t.t, ct_r, &ok, &report.p));
    print_report(report.str(), json_out, [&](const ordered_json& j) {
      std::cout << "check: transducer output sum quasiadditivity, r=" << j["r"] << "\n";
      for (auto& [name, val] : j["conditions"].items())
        std::cout << "  " << name << ": " << (val.get<bool>() ? "PASS" : "FAIL") << "\n";
      std::cout << "result: " << (j["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
      if (!j["ok"].get<bool>() && j.contains("failure"))
        std::cout << "first failure: " << j["failure"].get<std::string>() << "\n";
    });
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (cc->parsed()) {
    FunctionHandle f;
    open_function(cc_fn, f);
    digitfn_constants_opts opts{};
    opts.exact = cc_exact ? 1 : 0;
    opts.truncate_L = cc_L;
    opts.tail = cc_tail == "on" ? 1 : 0;
    StringOut report;
    check(digitfn_constants(f.f, &opts, &report.p));
    print_report(report.str(), json_out, [&](const ordered_json& j) {
      std::cout << "fn: " << j["fn"].get<std::string>() << " (q=" << j["q"] << ", r=" << j["r"]
                << ", " << j["mode"].get<std::string>() << ")\n";
      const auto& m = j["moments"];
      std::cout << "provenance: " << m["provenance"].get<std::string>();
      if (m["provenance"] == "truncated") {
        std::cout << " (L=" << m["L"] << ", tail " << (m["tail"].get<bool>() ? "on" : "off");
        if (m["tail"].get<bool>()) std::cout << ", gamma=" << fmt_value(m["tail_gamma"]);
        std::cout << ")";
      }
      std::cout << "\n";
      std::cout << "bt: " << fmt_value(m["bt"]) << "\n";
      std::cout << "btt: " << fmt_value(m["btt"]) << "\n";
      std::cout << "btx: " << fmt_value(m["btx"]) << "\n";
      std::cout << "mu: " << fmt_value(j["mu"]) << "\n";
      std::cout << "sigma2: " << fmt_value(j["sigma2"]) << "\n";
    });
    return kExitOk;
  }

  if (ex->parsed()) {
    FunctionHandle f;
    open_function(ex_fn, f);
    std::unique_ptr<std::ofstream> csv;
    if (!ex_out.empty()) {
      csv = std::make_unique<std::ofstream>(ex_out);
      if (!*csv) {
        std::cerr << "error: cannot write " << ex_out << "\n";
        return kExitError;
      }
      *csv << "k,count,mean,variance,ks_distance\n";
    }
    std::string last_report;
    for (unsigned k : ex_ks) {
      StringOut report;
      check(digitfn_experiment(f.f, k, ex_jobs, &report.p));
      last_report = report.str();
      auto j = ordered_json::parse(last_report);
      if (csv)
        *csv << k << "," << fmt_real(j["count"].get<double>()) << ","
             << fmt_real(j["mean"].get<double>()) << "," << fmt_real(j["variance"].get<double>())
             << "," << fmt_real(j["ks_distance"].get<double>()) << "\n";
      if (json_out) {
        std::cout << last_report << "\n";
      } else {
        std::cout << "k=" << k << " count=" << fmt_real(j["count"].get<double>())
                  << " mean=" << fmt_real(j["mean"].get<double>())
                  << " variance=" << fmt_real(j["variance"].get<double>())
                  << " ks=" << fmt_real(j["ks_distance"].get<double>())
                  << (j["degenerate"].get<bool>() ? " (degenerate)" : "") << "\n";
      }
    }
    if (!ex_hist.empty() && !last_report.empty()) {
      auto j = ordered_json::parse(last_report);
      std::ofstream hist(ex_hist);
      if (!hist) {
        std::cerr << "error: cannot write " << ex_hist << "\n";
        return kExitError;
      }
      double mean = j["mean"].get<double>();
      double sd = std::sqrt(j["variance"].get<double>());
      hist << "value,standardized,count\n";
      for (auto& pair : j["histogram"]) {
        double v = pair[0].get<double>();
        hist << fmt_real(v) << "," << fmt_real(sd > 0 ? (v - mean) / sd : 0.0) << ","
             << pair[1].get<uint64_t>() << "\n";
      }
    }
    return kExitOk;
  }

  if (gf->parsed()) {
    FunctionHandle f;
    open_function(gf_fn, f);
    int ok = 0;
    StringOut report;
    check(digitfn_gf_check(f.f, gf_L, gf_ts.data(), gf_ts.size(), &ok, &report.p));
    print_report(report.str(), json_out, [&](const ordered_json& j) {
      std::cout << "fn: " << j["fn"].get<std::string>() << "\n";
      std::cout << "series degree: " << j["L"] << ", k <= " << j["k_max"] << ", t in [";
      bool first = true;
      for (auto& t : j["t"]) {
        std::cout << (first ? "" : ",") << t;
        first = false;
      }
      std::cout << "]\n";
      std::cout << "result: " << (j["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
      if (!j["ok"].get<bool>()) std::cout << j["detail"].get<std::string>() << "\n";
    });
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (bs->parsed()) {
    uint64_t* members = nullptr;
    size_t count = 0;
    check(digitfn_bset(bs_q, bs_r, bs_len, &members, &count));
    size_t shown = bs_limit ? std::min(bs_limit, count) : count;
    if (json_out) {
      ordered_json j;
      j["q"] = bs_q;
      j["r"] = bs_r;
      j["max_len"] = bs_len;
      j["count"] = count;
      j["members"] = std::vector<uint64_t>(members, members + shown);
      std::cout << j.dump(2) << "\n";
    } else {
      for (size_t i = 0; i < shown; ++i) std::cout << members[i] << "\n";
      if (shown < count) std::cout << "... (" << count << " members total)\n";
    }
    digitfn_u64_free(members);
    return kExitOk;
  }

  return kExitError;
}
