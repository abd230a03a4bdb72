#include <doctest.h>

#include "catalog.hpp"
#include "funcs.hpp"

using namespace digitfn;

TEST_CASE("u vector initial values and 8n identities") {
  CHECK(u_vector(0) == std::array<uint64_t, 5>{1, 1, 1, 1, 1});
  CHECK(u_vector(1) == std::array<uint64_t, 5>{1, 1, 0, 0, 0});
  auto u40 = u_vector(40);  // 8n for n = 5
  for (unsigned i = 0; i < 5; ++i) CHECK(u40[i] == u_vector(5)[0]);

  OptimalRepCounter c;
  for (uint64_t n = 0; n < 10000; ++n) {
    uint64_t u1n = c.u_vector(n)[0];
    auto a = c.u_vector(8 * n);
    auto b = c.u_vector(8 * n + 1);
    for (unsigned i = 0; i < 5; ++i) CHECK(a[i] == u1n);
    CHECK(b[0] == u1n);
    CHECK(b[1] == u1n);
    CHECK(b[2] == 0);
    CHECK(b[3] == 0);
    CHECK(b[4] == 0);
  }
}

TEST_CASE("optimal representation counts") {
  CHECK(optimal_rep_count(0) == 1);
  CHECK(optimal_rep_count(3) == 2);
  CHECK(optimal_rep_count(45) == 5);
  CHECK(optimal_rep_count(204280974) == 10);
}

TEST_CASE("rho is quasimultiplicative on a window") {
  OptimalRepCounter c;
  for (uint64_t a = 0; a < 64; ++a)
    for (unsigned k = 0; k <= 8; ++k)
      for (uint64_t b = 0; b < (uint64_t(1) << k); b += (k > 5 ? 7 : 1))
        CHECK(c.count((uint64_t(1) << (k + 3)) * a + b) == c.count(a) * c.count(b));
}

TEST_CASE("opt_reps_by_rep matches the recursion") {
  OptimalRepCounter c;
  for (uint64_t n = 0; n < 5000; ++n) CHECK(opt_reps_by_rep(n) == c.count(n));
  CHECK(opt_reps_by_rep(204280974) == 10);
}

TEST_CASE("adjusted gray") {
  CHECK(adjusted_gray(0) == 0);
  CHECK(adjusted_gray(1) == 2);
  CHECK(adjusted_gray(5) == 4);
}

TEST_CASE("jacobsthal formula") {
  CHECK(jacobsthal(1) == 3);
  CHECK(jacobsthal(2) == 5);
  CHECK(jacobsthal(3) == 11);
  CHECK(jacobsthal(4) == 21);
  CHECK_THROWS_AS(jacobsthal(0), Error);
}

TEST_CASE("run length transform") {
  auto jac = [](unsigned i) { return Value(Rat(jacobsthal(i))); };
  CHECK(run_length_transform(jac, 0).rat() == 1);
  CHECK(run_length_transform(jac, 1).rat() == 3);
  // t(1910) = s_2 s_3^2 = 5 * 121
  CHECK(run_length_transform(jac, 1910).rat() == 605);
  // identity t(2^{k+1} a + b) = t(a) t(b)
  for (uint64_t a = 0; a < 64; ++a)
    for (unsigned k = 0; k <= 8; ++k)
      for (uint64_t b = 0; b < (uint64_t(1) << k); b += (k > 5 ? 5 : 1)) {
        Value lhs = run_length_transform(jac, (uint64_t(1) << (k + 1)) * a + b);
        Value rhs = run_length_transform(jac, a) * run_length_transform(jac, b);
        CHECK(lhs.rat() == rhs.rat());
      }
}

TEST_CASE("pow digit sum") {
  CHECK(pow_digit_sum(0) == 1);
  CHECK(pow_digit_sum(3) == 4);
  CHECK(pow_digit_sum(7) == 8);
}

TEST_CASE("rlt inverse") {
  auto jac = catalog_lookup("rlt:jacobsthal");
  auto s = rlt_inverse(jac.spec, 8);
  for (unsigned k = 1; k <= 8; ++k) CHECK(s[k - 1].rat() == Rat(jacobsthal(k)));

  QuasiSpec ones = jac.spec;
  ones.name = "one";
  ones.eval = [](uint64_t) { return Value(1); };
  auto s1 = rlt_inverse(ones, 4);
  for (auto& v : s1) CHECK(v.rat() == 1);

  QuasiSpec runs2 = jac.spec;
  runs2.name = "2^runs";
  runs2.eval = [](uint64_t n) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(run_lengths(n).size()));
    return Value(Rat(p));
  };
  auto s2 = rlt_inverse(runs2, 5);
  for (auto& v : s2) CHECK(v.rat() == 2);

  // naf-weight exponentiated has r = 2, not 1: the verification must fail
  auto nw = catalog_lookup("naf-exp");
  CHECK_THROWS_AS(rlt_inverse(nw.spec, 3), Error);
}
