#include "catalog.hpp"

#include <array>
#include <bit>

#include "digits.hpp"
#include "funcs.hpp"

namespace digitfn {

namespace {

RatMat int_mat(std::initializer_list<std::initializer_list<int>> rows) {
  RatMat m;
  for (auto& r : rows) {
    RatVec row;
    for (int x : r) row.push_back(Rat(x));
    m.push_back(std::move(row));
  }
  return m;
}

RatVec int_vec(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

}  // namespace

LinearRepresentation naf_weight_rep() {
  LinearRepresentation R;
  R.q = 2;
  R.dim = 4;
  R.M = {int_mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, 1}}),
         int_mat({{0, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 0, 1}})};
  R.u = int_vec({1, 0, 0, 0});
  R.v = int_vec({0, 1, 1, 1});
  return R;
}

LinearRepresentation opt_reps_rep() {
  LinearRepresentation R;
  R.q = 2;
  R.dim = 6;
  R.M = {int_mat({{1, 0, 0, 0, 0, 0},
                  {1, 0, 0, 0, 0, 0},
                  {0, 1, 0, 0, 0, 0},
                  {0, 1, 0, 0, 1, 0},
                  {0, 0, 0, 0, 0, 1},
                  {0, 0, 0, 0, 0, 0}}),
         int_mat({{0, 1, 0, 0, 1, 0},
                  {0, 0, 1, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0},
                  {0, 0, 0, 1, 0, 0},
                  {0, 0, 0, 1, 0, 0},
                  {0, 0, 0, 0, 1, 0}})};
  R.u = int_vec({1, 0, 0, 0, 0, 0});
  R.v = int_vec({1, 1, 1, 1, 0, 0});
  return R;
}

LinearRepresentation pow_digit_sum_rep() {
  LinearRepresentation R;
  R.q = 2;
  R.dim = 1;
  R.M = {int_mat({{1}}), int_mat({{2}})};
  R.u = int_vec({1});
  R.v = int_vec({1});
  return R;
}

LinearRepresentation remark_nonminimal_rep() {
  LinearRepresentation R;
  R.q = 2;
  R.dim = 2;
  R.M = {int_mat({{1, 13}, {0, 2}}), int_mat({{2, 27}, {0, 5}})};
  R.u = int_vec({1, 0});
  R.v = int_vec({1, 0});
  return R;
}

Transducer naf_weight_transducer() {
  // States: E = carry 0, C = carry 1, P = nonzero digit just emitted (the
  // following bit only decides the carry). Reading bits LSB first.
  Transducer T;
  T.q = 2;
  T.names = {"E", "C", "P"};
  T.initial = 0;
  T.delta = {
      {{0, Rat(0)}, {2, Rat(1)}},  // E: 0/0 -> E, 1/1 -> P
      {{2, Rat(1)}, {1, Rat(0)}},  // C: 0/1 -> P, 1/0 -> C
      {{0, Rat(0)}, {1, Rat(0)}},  // P: 0/0 -> E, 1/0 -> C
  };
  T.final_output = int_vec({0, 1, 0});
  return T;
}

LinearRepresentation block_count_rep(unsigned q, const std::vector<uint8_t>& pattern) {
  if (q < 2) fail(Errc::invalid_argument, "base must be at least 2");
  if (pattern.empty()) fail(Errc::invalid_argument, "empty digit block");
  bool all_zero = true;
  for (uint8_t d : pattern) {
    if (d >= q) fail(Errc::invalid_argument, "block digit out of range for base");
    if (d != 0) all_zero = false;
  }
  if (all_zero) fail(Errc::unsupported_block, "all-zero blocks have infinite padded count");

  const size_t plen = pattern.size();
  // Prefix-match automaton of the pattern: state = length of the longest
  // pattern prefix that is a suffix of the input read so far.
  auto delta = [&](size_t state, uint8_t digit) -> std::pair<size_t, bool> {
    // returns (next state, completed a match)
    std::vector<uint8_t> s(pattern.begin(), pattern.begin() + state);
    s.push_back(digit);
    bool match = s.size() == plen && std::equal(pattern.begin(), pattern.end(), s.begin());
    for (size_t len = std::min(s.size(), plen); len > 0; --len) {
      if (len == plen) continue;  // proper prefixes only for the state
      if (std::equal(pattern.begin(), pattern.begin() + len, s.end() - len)) return {len, match};
    }
    return {0, match};
  };

  // Initial state = stable point of reading zeros: the longest all-zero
  // proper prefix of the pattern.
  size_t lead_zeros = 0;
  while (lead_zeros < plen && pattern[lead_zeros] == 0) ++lead_zeros;
  // lead_zeros < plen because the pattern is not all zeros

  // Right padding: matches completed while appending |pattern|-1 zeros.
  auto right_pad_gain = [&](size_t state) {
    Rat gain(0);
    size_t cur = state;
    for (size_t i = 0; i + 1 < plen; ++i) {
      auto [nxt, match] = delta(cur, 0);
      if (match) gain += 1;
      cur = nxt;
    }
    return gain;
  };

  const size_t dim = 1 + plen;  // running count + state indicators
  LinearRepresentation R;
  R.q = q;
  R.dim = dim;
  R.u.assign(dim, Rat(0));
  R.u[0] = 1;
  for (size_t s = 0; s < plen; ++s) R.u[1 + s] = right_pad_gain(s);
  R.v.assign(dim, Rat(0));
  R.v[1 + lead_zeros] = 1;  // state after the left zero padding
  R.M.assign(q, zero_mat(dim, dim));
  for (unsigned d = 0; d < q; ++d) {
    R.M[d][0][0] = 1;  // count carries over
    for (size_t s = 0; s < plen; ++s) {
      auto [nxt, match] = delta(s, static_cast<uint8_t>(d));
      R.M[d][1 + nxt][1 + s] = 1;
      if (match) R.M[d][0][1 + s] += 1;
    }
  }
  return R;
}

uint64_t opt_reps_by_rep(uint64_t n) {
  // integer specialization of eval_rep over the 6-dim fixture
  static const std::array<std::array<std::array<int64_t, 6>, 6>, 2> M = {{
      {{{1, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0},
        {0, 1, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0}}},
      {{{0, 1, 0, 0, 1, 0},
        {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0}}},
  }};
  if (n == 0) return 1;
  std::array<uint64_t, 6> w = {1, 1, 1, 1, 0, 0};
  int bits = 64 - std::countl_zero(n);
  for (int i = bits - 1; i >= 0; --i) {
    unsigned d = (n >> i) & 1;
    std::array<uint64_t, 6> nw{};
    for (int r = 0; r < 6; ++r) {
      uint64_t s = 0;
      for (int c = 0; c < 6; ++c)
        if (M[d][r][c]) s += w[c];
      nw[r] = s;
    }
    w = nw;
  }
  return w[0];
}

std::vector<Value> rlt_inverse(const QuasiSpec& f, unsigned k_count, uint64_t a_max, unsigned k_max) {
  if (f.q != 2 || f.r != 1 || f.mode != Mode::multiplicative)
    fail(Errc::verification_failed, "run length transforms require q=2, r=1, multiplicative");
  if (auto cx = verify_identity(f, a_max, k_max))
    fail(Errc::verification_failed, "not 2-quasimultiplicative with r=1: counterexample at a=" +
                                        std::to_string(cx->a) + " k=" + std::to_string(cx->k) +
                                        " b=" + std::to_string(cx->b));
  std::vector<Value> s;
  s.reserve(k_count);
  for (unsigned k = 1; k <= k_count; ++k) s.push_back(f.eval((uint64_t(1) << k) - 1));
  return s;
}

namespace {

QuasiSpec make_spec(std::string name, unsigned q, unsigned r, Mode mode,
                    std::function<Value(uint64_t)> eval) {
  QuasiSpec s;
  s.name = std::move(name);
  s.q = q;
  s.r = r;
  s.mode = mode;
  s.eval = std::move(eval);
  return s;
}

}  // namespace

Builtin catalog_lookup(const std::string& name) {
  Builtin b;
  if (name.rfind("block-count:", 0) == 0) {
    std::string digits_part = name.substr(12);
    unsigned q = 2;
    if (auto at = digits_part.find('@'); at != std::string::npos) {
      q = static_cast<unsigned>(std::stoul(digits_part.substr(at + 1)));
      digits_part = digits_part.substr(0, at);
    }
    auto block = parse_block(digits_part, q);
    b.spec = make_spec(name, q, static_cast<unsigned>(block.size()), Mode::additive,
                       [q, block](uint64_t n) { return Value(count_block(n, q, block)); });
    b.rep = block_count_rep(q, block);
    b.summary = "occurrences of the block " + digits_part + " in the zero-padded base-" +
                std::to_string(q) + " expansion";
    return b;
  }
  if (name == "gray-runs") {
    b.spec = make_spec(name, 2, 1, Mode::additive,
                       [](uint64_t n) { return Value(uint64_t(gray_weight(n))); });
    b.identity_verified = false;  // not quasiadditive for any r
    b.summary = "ones in the Gray code = runs in the binary expansion";
    return b;
  }
  if (name == "adjusted-gray") {
    b.spec = make_spec(name, 2, 1, Mode::additive,
                       [](uint64_t n) { return Value(uint64_t(adjusted_gray(n))); });
    b.summary = "gray-runs plus one for odd arguments (01- and 10-block count)";
    return b;
  }
  if (name == "naf-weight") {
    b.spec = make_spec(name, 2, 2, Mode::additive,
                       [](uint64_t n) { return Value(uint64_t(naf_weight(n))); });
    b.rep = naf_weight_rep();
    b.transducer = naf_weight_transducer();
    b.summary = "Hamming weight of the nonadjacent form";
    return b;
  }
  if (name == "opt-reps") {
    b.spec = make_spec(name, 2, 3, Mode::multiplicative,
                       [](uint64_t n) { return Value(opt_reps_by_rep(n)); });
    b.rep = opt_reps_rep();
    b.summary = "number of optimal {0,1,-1}-representations";
    return b;
  }
  if (name == "rlt:jacobsthal") {
    b.spec = make_spec(name, 2, 1, Mode::multiplicative, [](uint64_t n) {
      Value t(1);
      for (unsigned len : run_lengths(n)) t *= Value(Rat(jacobsthal(len)));
      return t;
    });
    b.summary = "run length transform of the Jacobsthal numbers";
    return b;
  }
  if (name == "pow-digit-sum") {
    b.spec = make_spec(name, 2, 0, Mode::multiplicative,
                       [](uint64_t n) { return Value(Rat(pow_digit_sum(n))); });
    b.rep = pow_digit_sum_rep();
    b.summary = "2 to the binary digit sum";
    return b;
  }
  if (name == "naf-exp") {
    b.spec = make_spec(name, 2, 2, Mode::multiplicative, [](uint64_t n) {
      Int p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, naf_weight(n));
      return Value(Rat(p));
    });
    b.summary = "2 to the NAF Hamming weight";
    return b;
  }
  fail(Errc::unknown_function, "unknown function: " + name +
                                   " (try one of: block-count:<digits>, gray-runs, adjusted-gray,"
                                   " naf-weight, opt-reps, rlt:jacobsthal, pow-digit-sum, naf-exp)");
}

std::vector<std::string> catalog_names() {
  return {"block-count:0101", "gray-runs",      "adjusted-gray", "naf-weight",
          "opt-reps",         "rlt:jacobsthal", "pow-digit-sum", "naf-exp"};
}

}  // namespace digitfn
