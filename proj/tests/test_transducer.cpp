#include <doctest.h>

#include "catalog.hpp"
#include "digits.hpp"
#include "quasi.hpp"
#include "transducer.hpp"

using namespace digitfn;

TEST_CASE("naf weight transducer evaluates hn") {
  auto T = naf_weight_transducer();
  CHECK(transducer_eval(T, 27) == 3);
  CHECK(transducer_eval(T, 87) == 4);
  CHECK(transducer_eval(T, 0) == 0);  // final output of the initial state
  for (uint64_t n = 0; n < (1u << 14); ++n) CHECK(transducer_eval(T, n) == naf_weight(n));
}

TEST_CASE("transducer conditions certify quasiadditivity") {
  auto T = naf_weight_transducer();
  auto rep = check_transducer_conditions(T, 2);
  CHECK(rep.ok);
  CHECK(rep.reset_to_initial);
  CHECK(rep.reset_sum_matches_final);
  CHECK(rep.trailing_zeros_invariant);
  CHECK(!check_transducer_conditions(T, 1).ok);

  // certified r = 2 implies the identity window passes for the output sum
  QuasiSpec f;
  f.name = "transducer";
  f.q = 2;
  f.r = 2;
  f.mode = Mode::additive;
  f.eval = [T](uint64_t n) { return Value(transducer_eval(T, n)); };
  CHECK(!verify_identity(f, 32, 6));
}

TEST_CASE("digit sum transducer: single state") {
  Transducer T;
  T.q = 2;
  T.names = {"s"};
  T.initial = 0;
  T.delta = {{{0, Rat(0)}, {0, Rat(1)}}};
  T.final_output = {Rat(0)};
  CHECK(transducer_eval(T, 469) == 6);
  CHECK(check_transducer_conditions(T, 1).ok);
  CHECK(check_transducer_conditions(T, 0).ok);
}

TEST_CASE("zero loop with output breaks the trailing-zero condition") {
  Transducer T;
  T.q = 2;
  T.names = {"s"};
  T.initial = 0;
  T.delta = {{{0, Rat(1)}, {0, Rat(1)}}};  // 0-loop emits 1
  T.final_output = {Rat(0)};
  for (unsigned r : {0u, 1u, 3u}) {
    auto rep = check_transducer_conditions(T, r);
    CHECK(!rep.ok);
    CHECK(!rep.trailing_zeros_invariant);
  }
}

TEST_CASE("disconnected transducer is rejected") {
  Transducer T;
  T.q = 2;
  T.names = {"a", "b"};
  T.initial = 0;
  T.delta = {{{0, Rat(0)}, {0, Rat(0)}}, {{0, Rat(0)}, {1, Rat(0)}}};
  T.final_output = {Rat(0), Rat(0)};
  CHECK(!transducer_connected(T));
  CHECK_THROWS_AS(check_transducer_conditions(T, 1), Error);
}
