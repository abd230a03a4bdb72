#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace digitfn {

// Deterministic complete transducer reading q-ary digits least significant
// first; the function value is the sum of transition outputs plus the final
// output of the state reached.
struct Transducer {
  struct Arc {
    size_t next = 0;
    Rat output;
  };

  unsigned q = 2;
  size_t initial = 0;
  std::vector<std::string> names;        // one per state
  std::vector<std::vector<Arc>> delta;   // delta[state][digit]
  RatVec final_output;                   // one per state

  size_t size() const { return names.size(); }
  void validate() const;  // determinism/completeness/shape; throws Errc::parse
};

Rat transducer_eval(const Transducer& T, uint64_t n);

bool transducer_connected(const Transducer& T);

struct TransducerReport {
  bool ok = false;
  unsigned r = 0;
  // reading 0^r from every state ends in the initial state
  bool reset_to_initial = false;
  // the output sum along each state's 0^r path equals its final output
  bool reset_sum_matches_final = false;
  // output(s,0) + final(delta(s,0)) = final(s): one-step fixed point, so any
  // number of trailing zeros leaves the output sum unchanged
  bool trailing_zeros_invariant = false;
  std::string failure;  // first violated condition, for the report
};

// Sufficient condition for q-quasiadditivity of the output sum with
// parameter r. Requires a connected transducer (Errc::disconnected).
TransducerReport check_transducer_conditions(const Transducer& T, unsigned r);

}  // namespace digitfn
