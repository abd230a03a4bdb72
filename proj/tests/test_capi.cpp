// Exercises the shared library through the public C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "digitfn.h"

using nlohmann::json;

static std::string fx(const char* name) {
  return std::string(DIGITFN_FIXTURES_DIR) + "/" + name;
}

struct Str {
  char* p = nullptr;
  ~Str() { digitfn_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

TEST_CASE("version and status names") {
  CHECK(std::strlen(digitfn_version()) > 0);
  CHECK(std::string(digitfn_status_name(DIGITFN_OK)) == "ok");
  CHECK(std::string(digitfn_status_name(DIGITFN_ERR_PARSE)) == "parse error");
}

TEST_CASE("function open, info, eval") {
  digitfn_function* f = nullptr;
  REQUIRE(digitfn_function_open("naf-weight", &f) == DIGITFN_OK);
  unsigned q = 0, r = 0;
  int mult = -1;
  Str summary;
  CHECK(digitfn_function_info(f, &q, &r, &mult, &summary.p) == DIGITFN_OK);
  CHECK(q == 2);
  CHECK(r == 2);
  CHECK(mult == 0);
  CHECK(summary.get().size() > 0);

  Str v;
  CHECK(digitfn_function_eval(f, 314159265, &v.p) == DIGITFN_OK);
  CHECK(v.get() == "11");
  Str vs;
  CHECK(digitfn_function_eval_split(f, 314159265, &vs.p) == DIGITFN_OK);
  CHECK(vs.get() == "11");
  digitfn_function_close(f);

  digitfn_function* bad = nullptr;
  CHECK(digitfn_function_open("no-such-fn", &bad) == DIGITFN_ERR_UNKNOWN_FUNCTION);
  CHECK(std::strlen(digitfn_last_error()) > 0);
}

TEST_CASE("naf string") {
  Str s;
  CHECK(digitfn_naf(27, &s.p) == DIGITFN_OK);
  CHECK(s.get() == "100T0T");
}

TEST_CASE("split") {
  uint64_t *blocks = nullptr, *reduced = nullptr;
  size_t count = 0;
  REQUIRE(digitfn_split(314159265, 2, 2, &blocks, &reduced, &count) == DIGITFN_OK);
  REQUIRE(count == 5);
  uint64_t eb[5] = {4, 348, 432, 80, 1};
  uint64_t er[5] = {1, 87, 27, 5, 1};
  for (size_t i = 0; i < 5; ++i) {
    CHECK(blocks[i] == eb[i]);
    CHECK(reduced[i] == er[i]);
  }
  digitfn_u64_free(blocks);
  digitfn_u64_free(reduced);
}

TEST_CASE("bset") {
  uint64_t* members = nullptr;
  size_t count = 0;
  REQUIRE(digitfn_bset(2, 1, 4, &members, &count) == DIGITFN_OK);
  REQUIRE(count == 4);
  CHECK(members[0] == 1);
  CHECK(members[3] == 15);
  digitfn_u64_free(members);
}

TEST_CASE("check-quasi reports") {
  digitfn_function* f = nullptr;
  REQUIRE(digitfn_function_open("naf-weight", &f) == DIGITFN_OK);
  int ok = 0;
  Str rep;
  CHECK(digitfn_check_quasi(f, 32, 6, -1, nullptr, &ok, &rep.p) == DIGITFN_OK);
  CHECK(ok == 1);
  auto j = json::parse(rep.get());
  CHECK(j["ok"] == true);

  Str rep2;
  CHECK(digitfn_check_quasi(f, 32, 6, 1, nullptr, &ok, &rep2.p) == DIGITFN_OK);
  CHECK(ok == 0);
  j = json::parse(rep2.get());
  CHECK(j["ok"] == false);
  CHECK(j["counterexample"]["a"] == 3);
  digitfn_function_close(f);
}

TEST_CASE("representations through the C API") {
  digitfn_rep* r = nullptr;
  REQUIRE(digitfn_rep_open_file(fx("opt_reps_rep.json").c_str(), &r) == DIGITFN_OK);
  size_t dim = 0;
  CHECK(digitfn_rep_dimension(r, &dim) == DIGITFN_OK);
  CHECK(dim == 6);
  Str v;
  CHECK(digitfn_rep_eval(r, 45, &v.p) == DIGITFN_OK);
  CHECK(v.get() == "5");
  int zi = 0;
  CHECK(digitfn_rep_is_zero_insensitive(r, &zi) == DIGITFN_OK);
  CHECK(zi == 1);

  int ok = 0;
  Str rep;
  CHECK(digitfn_check_regular_mult(r, 3, 0, &ok, &rep.p) == DIGITFN_OK);
  CHECK(ok == 1);
  digitfn_rep_close(r);

  digitfn_rep* rem = nullptr;
  REQUIRE(digitfn_rep_open_file(fx("remark_nonminimal_rep.json").c_str(), &rem) == DIGITFN_OK);
  for (unsigned rr = 0; rr <= 10; ++rr) {
    Str ignored;
    CHECK(digitfn_check_regular_mult(rem, rr, 1, &ok, &ignored.p) == DIGITFN_OK);
    CHECK(ok == 0);
  }
  digitfn_rep* minrem = nullptr;
  CHECK(digitfn_rep_minimize(rem, &minrem) == DIGITFN_OK);
  CHECK(digitfn_rep_dimension(minrem, &dim) == DIGITFN_OK);
  CHECK(dim == 1);
  Str mj;
  CHECK(digitfn_rep_to_json(minrem, &mj.p) == DIGITFN_OK);
  digitfn_rep* back = nullptr;
  CHECK(digitfn_rep_open_json(mj.p, &back) == DIGITFN_OK);
  digitfn_rep_close(back);
  digitfn_rep_close(minrem);
  digitfn_rep_close(rem);

  digitfn_rep* hn = nullptr;
  REQUIRE(digitfn_rep_open_file(fx("naf_weight_rep.json").c_str(), &hn) == DIGITFN_OK);
  Str arep;
  CHECK(digitfn_check_regular_add(hn, 2, &ok, &arep.p) == DIGITFN_OK);
  CHECK(ok == 1);
  auto j = json::parse(arep.get());
  CHECK(j["dim_U"] == 3);
  CHECK(j["dim_V"] == 3);
  digitfn_rep_close(hn);

  digitfn_rep* nofile = nullptr;
  CHECK(digitfn_rep_open_file("/nonexistent.json", &nofile) == DIGITFN_ERR_PARSE);
}

TEST_CASE("transducers through the C API") {
  digitfn_transducer* t = nullptr;
  REQUIRE(digitfn_transducer_open_file(fx("naf_weight_transducer.json").c_str(), &t) == DIGITFN_OK);
  Str v;
  CHECK(digitfn_transducer_eval(t, 87, &v.p) == DIGITFN_OK);
  CHECK(v.get() == "4");
  int ok = 0;
  Str rep;
  CHECK(digitfn_check_transducer(t, 2, &ok, &rep.p) == DIGITFN_OK);
  CHECK(ok == 1);
  CHECK(digitfn_check_transducer(t, 1, &ok, nullptr) == DIGITFN_OK);
  CHECK(ok == 0);
  digitfn_transducer_close(t);
}

TEST_CASE("constants through the C API") {
  digitfn_function* f = nullptr;
  REQUIRE(digitfn_function_open("naf-weight", &f) == DIGITFN_OK);
  digitfn_constants_opts opts{1, 0, 0};
  Str rep;
  REQUIRE(digitfn_constants(f, &opts, &rep.p) == DIGITFN_OK);
  auto j = json::parse(rep.get());
  CHECK(j["mu"] == "1/3");
  CHECK(j["sigma2"] == "2/27");
  CHECK(j["moments"]["provenance"] == "exact");
  digitfn_function_close(f);

  REQUIRE(digitfn_function_open("rlt:jacobsthal", &f) == DIGITFN_OK);
  digitfn_constants_opts num{0, 0, 1};
  Str rep2;
  REQUIRE(digitfn_constants(f, &num, &rep2.p) == DIGITFN_OK);
  j = json::parse(rep2.get());
  CHECK(std::abs(j["mu"].get<double>() - 0.429947) < 1e-5);
  CHECK(std::abs(j["sigma2"].get<double>() - 0.121137) < 1e-5);
  digitfn_function_close(f);

  // exact pipeline rejects multiplicative functions
  REQUIRE(digitfn_function_open("opt-reps", &f) == DIGITFN_OK);
  Str rep3;
  CHECK(digitfn_constants(f, &opts, &rep3.p) == DIGITFN_ERR_DOMAIN);
  digitfn_function_close(f);
}

TEST_CASE("experiment and gf-check through the C API") {
  digitfn_function* f = nullptr;
  REQUIRE(digitfn_function_open("naf-weight", &f) == DIGITFN_OK);
  Str rep;
  REQUIRE(digitfn_experiment(f, 12, 2, &rep.p) == DIGITFN_OK);
  auto j = json::parse(rep.get());
  CHECK(j["count"] == 4096.0);
  CHECK(std::abs(j["mean"].get<double>() - 4.444336) < 1e-5);
  digitfn_function_close(f);

  REQUIRE(digitfn_function_open("opt-reps", &f) == DIGITFN_OK);
  int ok = 0;
  long ts[2] = {0, 1};
  Str gf;
  REQUIRE(digitfn_gf_check(f, 14, ts, 2, &ok, &gf.p) == DIGITFN_OK);
  CHECK(ok == 1);
  digitfn_function_close(f);
}

TEST_CASE("singularity mean through the C API") {
  digitfn_function* f = nullptr;
  REQUIRE(digitfn_function_open("naf-weight", &f) == DIGITFN_OK);
  double mu = 0;
  REQUIRE(digitfn_singularity_mean(f, 0, 1, &mu) == DIGITFN_OK);
  CHECK(std::abs(mu - 1.0 / 3) < 1e-4);
  digitfn_function_close(f);
}
