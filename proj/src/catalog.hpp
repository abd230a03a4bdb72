#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quasi.hpp"
#include "regular.hpp"
#include "transducer.hpp"

namespace digitfn {

// A catalog entry: the function together with whatever extra structure it
// carries (a linear representation for the q-regular ones, a transducer for
// naf-weight). `identity_verified` marks entries whose (q, r, mode) passes
// the brute-force window; gray-runs ships unverified on purpose (it is not
// quasiadditive for any r, which check-quasi demonstrates).
struct Builtin {
  QuasiSpec spec;
  bool identity_verified = true;
  std::optional<LinearRepresentation> rep;
  std::optional<Transducer> transducer;
  std::string summary;
};

// Addressable names: block-count:<digits>[@q], gray-runs, adjusted-gray,
// naf-weight, opt-reps, rlt:jacobsthal, pow-digit-sum, naf-exp.
// Throws Errc::unknown_function.
Builtin catalog_lookup(const std::string& name);

std::vector<std::string> catalog_names();

// Linear representation for the padded block count of `pattern` in base q:
// dimension |pattern|+1 (running count + prefix-match automaton state).
LinearRepresentation block_count_rep(unsigned q, const std::vector<uint8_t>& pattern);

// Paper fixtures.
LinearRepresentation naf_weight_rep();        // 4x4, vector (hn(n), hn(n+1), hn(2n+1), 1)
LinearRepresentation opt_reps_rep();          // 6x6, vector (u1..u3(n), u1,u4,u5(n+1))
LinearRepresentation pow_digit_sum_rep();     // 1x1 minimal
LinearRepresentation remark_nonminimal_rep(); // 2x2 zero-insensitive, not minimal
Transducer naf_weight_transducer();           // 3 states, reset word 00

// {0,1,-1}-representation count via the 6-dim representation; exact in
// unsigned 64-bit for the enumeration windows used here.
uint64_t opt_reps_by_rep(uint64_t n);

// Recovers s_k = f(2^k - 1), k = 1..k_count, after verifying that f is
// 2-quasimultiplicative with r = 1 on the window (Errc::verification_failed).
std::vector<Value> rlt_inverse(const QuasiSpec& f, unsigned k_count,
                               uint64_t a_max = 32, unsigned k_max = 6);

}  // namespace digitfn
