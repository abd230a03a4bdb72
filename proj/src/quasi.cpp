#include "quasi.hpp"

#include <algorithm>
#include <cmath>

#include "digits.hpp"

namespace digitfn {

std::optional<Counterexample> verify_identity(const QuasiSpec& f, uint64_t a_max, unsigned k_max,
                                              std::optional<unsigned> param) {
  unsigned r = param.value_or(f.r);
  // f(a) is reused across the whole k/b sweep for each a.
  for (uint64_t a = 0; a <= a_max; ++a) {
    Value fa = f.eval(a);
    for (unsigned k = 0; k <= k_max; ++k) {
      uint64_t qk = 1;
      for (unsigned i = 0; i < k; ++i) qk *= f.q;
      uint64_t shift = qk;
      for (unsigned i = 0; i < r; ++i) shift *= f.q;
      for (uint64_t b = 0; b < qk; ++b) {
        Value lhs = f.eval(shift * a + b);
        Value rhs = f.merge(fa, f.eval(b));
        if (!lhs.same(rhs)) return Counterexample{a, k, b, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> monotone_parameter_check(const QuasiSpec& f, unsigned s,
                                                       uint64_t a_max, unsigned k_max) {
  if (s < f.r) fail(Errc::invalid_argument, "monotone check needs s >= r");
  return verify_identity(f, a_max, k_max, s);
}

QuasiSpec combine(const QuasiSpec& f, const QuasiSpec& g, const Rat& alpha, const Rat& beta) {
  if (f.mode != Mode::additive || g.mode != Mode::additive)
    fail(Errc::composition, "combine requires two additive functions");
  if (f.q != g.q) fail(Errc::composition, "combine requires matching bases");
  QuasiSpec out;
  out.name = f.name + "+" + g.name;
  out.q = f.q;
  out.r = std::max(f.r, g.r);
  out.mode = Mode::additive;
  Value va(alpha), vb(beta);
  auto fe = f.eval, ge = g.eval;
  out.eval = [va, vb, fe, ge](uint64_t n) { return va * fe(n) + vb * ge(n); };
  return out;
}

QuasiSpec exp_log_bridge(const QuasiSpec& f, const Rat& c) {
  if (c <= 0 || c == 1) fail(Errc::invalid_argument, "bridge constant must be positive and != 1");
  QuasiSpec out;
  out.q = f.q;
  out.r = f.r;
  auto fe = f.eval;
  if (f.mode == Mode::additive) {
    out.name = "exp[" + rat_to_string(c) + "]^" + f.name;
    out.mode = Mode::multiplicative;
    out.eval = [fe, c](uint64_t n) -> Value {
      Value v = fe(n);
      if (v.is_exact() && rat_is_integer(v.rat())) {
        const Rat& x = v.rat();
        if (x.get_num().fits_slong_p()) return Value(rat_pow(c, x.get_num().get_si()));
      }
      return Value::real(std::pow(c.get_d(), v.as_double()));
    };
  } else {
    out.name = "log[" + rat_to_string(c) + "]" + f.name;
    out.mode = Mode::additive;
    double lc = std::log(c.get_d());
    out.eval = [fe, lc](uint64_t n) -> Value {
      Value v = fe(n);
      if (!v.is_positive())
        fail(Errc::domain, "log bridge hit a nonpositive value at n=" + std::to_string(n));
      return Value::real(std::log(v.as_double()) / lc);
    };
  }
  return out;
}

SplitResult split_blocks(uint64_t n, unsigned q, unsigned r) {
  SplitResult out;
  Expansion e = to_expansion(n, q);
  if (e.digits.empty()) return out;

  auto reduce = [q](uint64_t m) {
    while (m > 0 && m % q == 0) m /= q;
    return m;
  };

  if (r == 0) {
    // Degenerate digit-wise rule: every boundary is a break, zero digits
    // form no blocks of their own.
    for (uint8_t d : e.digits)
      if (d != 0) {
        out.blocks.push_back(d);
        out.reduced.push_back(reduce(d));
      }
    return out;
  }

  uint64_t block = 0;
  bool have = false;
  unsigned zeros = 0;
  auto close = [&]() {
    if (have) {
      out.blocks.push_back(block);
      out.reduced.push_back(reduce(block));
      block = 0;
      have = false;
    }
  };
  for (uint8_t d : e.digits) {
    if (d == 0) {
      ++zeros;
    } else {
      // a maximal zero run of length >= r ends the previous block here
      if (zeros >= r) close();
      zeros = 0;
    }
    block = block * q + d;
    have = true;
  }
  close();  // trailing zeros stay inside the final block
  return out;
}

Value eval_by_splitting(const QuasiSpec& f, uint64_t n) {
  SplitResult s = split_blocks(n, f.q, f.r);
  Value acc = f.neutral();
  for (uint64_t m : s.reduced) acc = f.merge(acc, f.eval(m));
  return acc;
}

Value SplitEvaluator::eval(uint64_t n) {
  SplitResult s = split_blocks(n, f_.q, f_.r);
  Value acc = f_.neutral();
  for (uint64_t m : s.reduced) {
    auto it = memo_.find(m);
    if (it == memo_.end()) it = memo_.emplace(m, f_.eval(m)).first;
    acc = f_.merge(acc, it->second);
  }
  return acc;
}

std::vector<uint64_t> enumerate_bset(unsigned q, unsigned r, unsigned max_len) {
  struct Collector {
    std::vector<std::vector<uint64_t>> per_len;
    std::vector<uint64_t> digits_value;  // value of current prefix
    unsigned q;
    void enter(unsigned d) { digits_value.push_back(digits_value.back() * q + d); }
    void leave() { digits_value.pop_back(); }
    void member(unsigned len) { per_len[len].push_back(digits_value.back()); }
  };
  if (max_len > 63) fail(Errc::invalid_argument, "enumeration limited to lengths <= 63");
  Collector col;
  col.q = q;
  col.per_len.resize(max_len + 1);
  col.digits_value.push_back(0);
  walk_bset(q, r, max_len, col);
  std::vector<uint64_t> out;
  for (auto& v : col.per_len) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<uint64_t> bset_counts(unsigned q, unsigned r, unsigned max_len) {
  if (r < 1) fail(Errc::invalid_argument, "B-set requires r >= 1");
  // state = trailing zero count, 0..r-1; words start and end in state 0
  std::vector<uint64_t> cur(r, 0), out(max_len + 1, 0);
  cur[0] = q - 1;  // first digit nonzero
  for (unsigned len = 1; len <= max_len; ++len) {
    out[len] = cur[0];
    std::vector<uint64_t> nxt(r, 0);
    uint64_t total = 0;
    for (unsigned z = 0; z < r; ++z) total += cur[z];
    nxt[0] = total * (q - 1);
    for (unsigned z = 0; z + 1 < r; ++z) nxt[z + 1] = cur[z];
    cur = std::move(nxt);
  }
  return out;
}

}  // namespace digitfn
