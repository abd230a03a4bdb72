#include <doctest.h>

#include <string>

#include "catalog.hpp"
#include "digits.hpp"
#include "serialize.hpp"

using namespace digitfn;

static std::string fx(const char* name) {
  return std::string(DIGITFN_FIXTURES_DIR) + "/" + name;
}

TEST_CASE("shipped representation fixtures match the builtins") {
  auto hn_file = rep_from_file(fx("naf_weight_rep.json"));
  auto hn = naf_weight_rep();
  CHECK(hn_file.dim == hn.dim);
  CHECK(hn_file.u == hn.u);
  CHECK(hn_file.v == hn.v);
  for (unsigned d = 0; d < 2; ++d) CHECK(mat_equal(hn_file.M[d], hn.M[d]));

  auto rho_file = rep_from_file(fx("opt_reps_rep.json"));
  auto rho = opt_reps_rep();
  CHECK(rho_file.dim == 6);
  for (uint64_t n = 0; n < 512; ++n) CHECK(eval_rep(rho_file, n) == eval_rep(rho, n));

  auto rem = rep_from_file(fx("remark_nonminimal_rep.json"));
  CHECK(rem.dim == 2);
  CHECK(minimize(rem).dim == 1);

  auto pds = rep_from_file(fx("pow_digit_sum_rep.json"));
  CHECK(pds.dim == 1);

  auto bc = rep_from_file(fx("block_count_0101_rep.json"));
  CHECK(eval_rep(bc, 240150) == 3);
}

TEST_CASE("shipped transducer fixture") {
  auto T = transducer_from_file(fx("naf_weight_transducer.json"));
  CHECK(transducer_eval(T, 27) == 3);
  CHECK(check_transducer_conditions(T, 2).ok);
}

TEST_CASE("representation json round trip") {
  auto hn = naf_weight_rep();
  auto j = rep_to_json(hn);
  auto back = rep_from_json(j);
  CHECK(back.dim == hn.dim);
  CHECK(back.u == hn.u);
  CHECK(back.v == hn.v);
  for (unsigned d = 0; d < 2; ++d) CHECK(mat_equal(back.M[d], hn.M[d]));

  // rationals survive
  LinearRepresentation r;
  r.q = 2;
  r.dim = 1;
  r.M = {{{Rat(1) / 3}}, {{Rat(-7) / 2}}};
  r.u = {Rat(2) / 5};
  r.v = {Rat(0)};
  auto rb = rep_from_json(rep_to_json(r));
  CHECK(rb.M[1][0][0] == Rat(-7) / 2);
  CHECK(rb.u[0] == Rat(2) / 5);
}

TEST_CASE("transducer json round trip") {
  auto T = naf_weight_transducer();
  auto back = transducer_from_json(transducer_to_json(T));
  for (uint64_t n = 0; n < 512; ++n) CHECK(transducer_eval(back, n) == transducer_eval(T, n));
}

TEST_CASE("malformed files are rejected with parse errors") {
  CHECK_THROWS_AS(rep_from_file(fx("no_such_file.json")), Error);
  CHECK_THROWS_AS(rep_from_json(nlohmann::json{{"q", 2}}), Error);
  nlohmann::json bad = {{"q", 2},
                        {"u", {"1", "0"}},
                        {"v", {"1", "0"}},
                        {"M", {{{"1", "0"}, {"0", "1"}}}}};  // one matrix for base 2
  CHECK_THROWS_AS(rep_from_json(bad), Error);
}
