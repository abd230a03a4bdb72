#include "transducer.hpp"

#include <deque>

namespace digitfn {

void Transducer::validate() const {
  if (q < 2) fail(Errc::parse, "transducer base must be at least 2");
  size_t n = names.size();
  if (n == 0) fail(Errc::parse, "transducer needs at least one state");
  if (initial >= n) fail(Errc::parse, "initial state out of range");
  if (delta.size() != n || final_output.size() != n)
    fail(Errc::parse, "transducer tables do not match the state count");
  for (const auto& row : delta) {
    if (row.size() != q) fail(Errc::parse, "transducer must be complete on digits 0..q-1");
    for (const Arc& a : row)
      if (a.next >= n) fail(Errc::parse, "transition target out of range");
  }
}

Rat transducer_eval(const Transducer& T, uint64_t n) {
  Rat sum(0);
  size_t s = T.initial;
  while (n > 0) {
    const Transducer::Arc& a = T.delta[s][n % T.q];
    sum += a.output;
    s = a.next;
    n /= T.q;
  }
  return sum + T.final_output[s];
}

bool transducer_connected(const Transducer& T) {
  std::vector<bool> seen(T.size(), false);
  std::deque<size_t> work{T.initial};
  seen[T.initial] = true;
  size_t count = 1;
  while (!work.empty()) {
    size_t s = work.front();
    work.pop_front();
    for (const auto& a : T.delta[s]) {
      if (!seen[a.next]) {
        seen[a.next] = true;
        ++count;
        work.push_back(a.next);
      }
    }
  }
  return count == T.size();
}

TransducerReport check_transducer_conditions(const Transducer& T, unsigned r) {
  T.validate();
  if (!transducer_connected(T))
    fail(Errc::disconnected, "transducer has states unreachable from the initial state");

  TransducerReport rep;
  rep.r = r;
  rep.reset_to_initial = true;
  rep.reset_sum_matches_final = true;
  rep.trailing_zeros_invariant = true;

  for (size_t s = 0; s < T.size(); ++s) {
    size_t cur = s;
    Rat sum(0);
    for (unsigned i = 0; i < r; ++i) {
      const auto& a = T.delta[cur][0];
      sum += a.output;
      cur = a.next;
    }
    if (cur != T.initial && rep.reset_to_initial) {
      rep.reset_to_initial = false;
      rep.failure = "state " + T.names[s] + " does not reach the initial state on 0^r";
    }
    if (sum != T.final_output[s] && rep.reset_sum_matches_final) {
      rep.reset_sum_matches_final = false;
      if (rep.failure.empty())
        rep.failure = "0^r output sum from state " + T.names[s] + " differs from its final output";
    }
    const auto& a0 = T.delta[s][0];
    if (a0.output + T.final_output[a0.next] != T.final_output[s] && rep.trailing_zeros_invariant) {
      rep.trailing_zeros_invariant = false;
      if (rep.failure.empty())
        rep.failure = "trailing zero changes the output sum from state " + T.names[s];
    }
  }
  rep.ok = rep.reset_to_initial && rep.reset_sum_matches_final && rep.trailing_zeros_invariant;
  return rep;
}

}  // namespace digitfn
