#include "funcs.hpp"

namespace digitfn {

std::array<uint64_t, 5> OptimalRepCounter::u_vector(uint64_t n) {
  if (n == 0) return {1, 1, 1, 1, 1};
  if (n == 1) return {1, 1, 0, 0, 0};
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  uint64_t m = n / 2;
  std::array<uint64_t, 5> out;
  if (n % 2 == 0) {
    auto um = u_vector(m);
    out = {um[0], um[0], um[1], um[0], um[3]};
  } else {
    auto um = u_vector(m);
    auto um1 = u_vector(m + 1);
    out = {um[1] + um1[3], um[2], 0, um1[4], 0};
  }
  memo_.emplace(n, out);
  return out;
}

std::array<uint64_t, 5> u_vector(uint64_t n) {
  OptimalRepCounter c;
  return c.u_vector(n);
}

uint64_t optimal_rep_count(uint64_t n) {
  OptimalRepCounter c;
  return c.count(n);
}

unsigned adjusted_gray(uint64_t n) {
  return gray_weight(n) + static_cast<unsigned>(n & 1);
}

Int jacobsthal(unsigned n) {
  if (n == 0) fail(Errc::invalid_argument, "jacobsthal index starts at 1");
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n + 2);
  p += (n % 2 == 0) ? -1 : 1;
  return p / 3;
}

Value run_length_transform(const std::function<Value(unsigned)>& s, uint64_t n) {
  Value t(1);
  for (unsigned len : run_lengths(n)) t *= s(len);
  return t;
}

Int pow_digit_sum(uint64_t n) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, digit_sum(n, 2));
  return p;
}

}  // namespace digitfn
