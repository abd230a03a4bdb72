#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "value.hpp"

namespace digitfn {

enum class Mode { additive, multiplicative };

inline const char* mode_name(Mode m) { return m == Mode::additive ? "additive" : "multiplicative"; }

// A digital function packaged with the data of its functional equation
//   f(q^{k+r} a + b) = f(a) (+|*) f(b)   for 0 <= b < q^k.
struct QuasiSpec {
  std::string name;
  unsigned q = 2;
  unsigned r = 0;
  Mode mode = Mode::additive;
  std::function<Value(uint64_t)> eval;

  Value neutral() const { return mode == Mode::additive ? Value(0) : Value(1); }
  Value merge(const Value& a, const Value& b) const {
    return mode == Mode::additive ? a + b : a * b;
  }
};

struct Counterexample {
  uint64_t a = 0;
  unsigned k = 0;
  uint64_t b = 0;
  Value lhs, rhs;  // f(q^{k+r}a+b) vs f(a) (+|*) f(b)
};

// Checks the defining identity for all a <= a_max, k <= k_max, 0 <= b < q^k.
// Returns the first violation in lexicographic (a, k, b) order, or nullopt.
// `param` overrides the spec's r (used by the monotone-parameter check).
std::optional<Counterexample> verify_identity(const QuasiSpec& f, uint64_t a_max, unsigned k_max,
                                              std::optional<unsigned> param = std::nullopt);

// Proposition: the identity at r implies it at every s >= r.
std::optional<Counterexample> monotone_parameter_check(const QuasiSpec& f, unsigned s,
                                                       uint64_t a_max, unsigned k_max);

// alpha*f + beta*g for additive f, g over the same base; r = max(r_f, r_g).
QuasiSpec combine(const QuasiSpec& f, const QuasiSpec& g, const Rat& alpha, const Rat& beta);

// Mode flip: additive f -> n |-> c^{f(n)} (exact when f is integer-valued);
// multiplicative f -> n |-> log_c f(n) (real; f must stay positive).
QuasiSpec exp_log_bridge(const QuasiSpec& f, const Rat& c);

// Block decomposition along runs of >= r zeros, scanning MSB to LSB; each
// maximal zero run of length >= r ends exactly one block. r = 0 degenerates
// to digit-wise splitting (zero digits vanish, each nonzero digit is its own
// block). reduced[i] is blocks[i] with all factors q removed.
struct SplitResult {
  std::vector<uint64_t> blocks;
  std::vector<uint64_t> reduced;
};

SplitResult split_blocks(uint64_t n, unsigned q, unsigned r);

Value eval_by_splitting(const QuasiSpec& f, uint64_t n);

// Same, with a reusable memo keyed by the reduced blocks (the q-free parts
// are canonical representatives since f(qa) = f(a)).
class SplitEvaluator {
 public:
  explicit SplitEvaluator(const QuasiSpec& f) : f_(f) {}
  Value eval(uint64_t n);

 private:
  const QuasiSpec& f_;
  std::unordered_map<uint64_t, Value> memo_;
};

// B-set: positive integers not divisible by q whose q-ary expansion avoids
// the factor 0^r (r >= 1). Members of length <= max_len, ordered by
// (length, value).
std::vector<uint64_t> enumerate_bset(unsigned q, unsigned r, unsigned max_len);

// Per-length member counts via the trailing-zero-count automaton.
std::vector<uint64_t> bset_counts(unsigned q, unsigned r, unsigned max_len);

// Depth-first walk over all B-set prefixes in digit order. The visitor sees
//   enter(digit): a digit was appended (prefix grew by one)
//   leave():      the digit was removed again
//   member(len):  the current prefix is a member of length len
// Incremental state (e.g. a representation vector) hangs off enter/leave.
template <class Visitor>
void walk_bset(unsigned q, unsigned r, unsigned max_len, Visitor&& vis) {
  if (r < 1) fail(Errc::invalid_argument, "B-set requires r >= 1");
  if (q < 2) fail(Errc::invalid_argument, "base must be at least 2");
  auto descend = [&](auto&& self, unsigned zeros, unsigned len) -> void {
    if (len > 0 && zeros == 0) vis.member(len);
    if (len == max_len) return;
    for (unsigned d = len == 0 ? 1u : 0u; d < q; ++d) {
      unsigned nz = d == 0 ? zeros + 1 : 0;
      if (nz >= r) continue;  // would complete a 0^r factor
      vis.enter(d);
      self(self, nz, len + 1);
      vis.leave();
    }
  };
  descend(descend, 0, 0);
}

}  // namespace digitfn
