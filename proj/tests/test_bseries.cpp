#include <doctest.h>

#include <cmath>

#include "bseries.hpp"
#include "catalog.hpp"

using namespace digitfn;

TEST_CASE("count growth eigenvalues") {
  CHECK(bset_count_growth(2, 1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(bset_count_growth(2, 2) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-9));
  CHECK(bset_count_growth(2, 3) == doctest::Approx(1.8392867552).epsilon(1e-8));
}

TEST_CASE("enumeration and transfer providers agree per length") {
  auto hn = catalog_lookup("naf-weight");
  auto by_enum = bseries_enumerate(hn.spec, 18);
  auto by_rep = bseries_enumerate_rep(*hn.rep, Mode::additive, hn.spec.r, 18);
  auto by_transfer = bseries_transfer(*hn.rep, hn.spec.r, 18);
  for (unsigned j = 0; j < 5; ++j)
    for (unsigned l = 1; l <= 18; ++l) {
      CHECK(by_enum.w[j][l] == doctest::Approx(by_rep.w[j][l]).epsilon(1e-12));
      CHECK(by_enum.w[j][l] == doctest::Approx(by_transfer.w[j][l]).epsilon(1e-10));
    }

  auto bc = catalog_lookup("block-count:0101");
  auto e2 = bseries_enumerate(bc.spec, 14);
  auto t2 = bseries_transfer(*bc.rep, bc.spec.r, 14);
  for (unsigned j = 0; j < 5; ++j)
    for (unsigned l = 1; l <= 14; ++l)
      CHECK(e2.w[j][l] == doctest::Approx(t2.w[j][l]).epsilon(1e-10));
}

TEST_CASE("multiplicative enumeration uses logs") {
  auto rho = catalog_lookup("opt-reps");
  auto B = bseries_enumerate(rho.spec, 12);
  auto Br = bseries_enumerate_rep(*rho.rep, Mode::multiplicative, rho.spec.r, 12);
  for (unsigned j = 0; j < 5; ++j)
    for (unsigned l = 1; l <= 12; ++l)
      CHECK(B.w[j][l] == doctest::Approx(Br.w[j][l]).epsilon(1e-12));
  // single member per length for r = 1: w0 = 2^-l exactly
  auto jac = catalog_lookup("rlt:jacobsthal");
  auto Bj = bseries_enumerate(jac.spec, 20);
  for (unsigned l = 1; l <= 20; ++l)
    CHECK(Bj.w[0][l] == doctest::Approx(std::pow(2.0, -double(l))).epsilon(1e-14));
}

TEST_CASE("tail extrapolation reproduces deep sums") {
  auto hn = catalog_lookup("naf-weight");
  auto deep = bseries_transfer(*hn.rep, hn.spec.r, 400);  // converged to double precision
  auto shallow = bseries_transfer(*hn.rep, hn.spec.r, 40);
  fit_tail(shallow);
  CHECK(shallow.tail.has_value());
  CHECK(shallow.bt() == doctest::Approx(deep.bt()).epsilon(1e-9));
  CHECK(shallow.btt() == doctest::Approx(deep.btt()).epsilon(1e-9));
  CHECK(shallow.btx() == doctest::Approx(deep.btx()).epsilon(1e-9));
}
