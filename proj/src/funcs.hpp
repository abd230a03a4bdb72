#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "digits.hpp"
#include "value.hpp"

namespace digitfn {

// Grabner-Heuberger sequences u_1..u_5; u_1(n) counts the optimal
// {0,1,-1}-representations of n. The odd rules reference u_4(n+1) and
// u_5(n+1), so the memo stores full 5-vectors per argument.
class OptimalRepCounter {
 public:
  std::array<uint64_t, 5> u_vector(uint64_t n);
  uint64_t count(uint64_t n) { return u_vector(n)[0]; }

 private:
  std::unordered_map<uint64_t, std::array<uint64_t, 5>> memo_;
};

// Convenience wrappers over a per-call counter.
std::array<uint64_t, 5> u_vector(uint64_t n);
uint64_t optimal_rep_count(uint64_t n);

// hg(n) + 1 for odd n: the total number of occurrences of the blocks 01 and
// 10 in the zero-padded binary expansion; 2-quasiadditive with r = 1.
unsigned adjusted_gray(uint64_t n);

// s_n = (2^{n+2} - (-1)^n) / 3, n >= 1.
Int jacobsthal(unsigned n);

// t(n) = prod over the run-length multiset of s_i; empty product = 1.
// Throws Errc::domain if the sequence is not defined at a needed index.
Value run_length_transform(const std::function<Value(unsigned)>& s, uint64_t n);

// 2^{s_2(n)}: 2-quasimultiplicative with r = 0.
Int pow_digit_sum(uint64_t n);

}  // namespace digitfn
