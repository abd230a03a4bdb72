#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace digitfn {

// Canonical base-q expansion, most significant digit first.
// Zero is the empty digit sequence; the display layer prints "0".
struct Expansion {
  unsigned base = 2;
  std::vector<uint8_t> digits;  // MSB first, leading digit nonzero

  size_t length() const { return digits.size(); }
};

Expansion to_expansion(uint64_t n, unsigned q);
uint64_t expansion_value(const Expansion& e);
std::string expansion_str(const Expansion& e);  // "0" for the empty sequence

// Occurrences of `block` in the expansion padded with |block|-1 zeros on each
// side. The block must not be all zeros (its padded count would be infinite).
uint64_t count_block(uint64_t n, unsigned q, const std::vector<uint8_t>& block);

// Parses a digit block given as a string over '0'..'9'; digits must be < q.
std::vector<uint8_t> parse_block(const std::string& s, unsigned q);

// Lengths of maximal runs of ones in the binary expansion, in scan order
// (MSB to LSB). Treated as a multiset by all callers.
std::vector<unsigned> run_lengths(uint64_t n);

// Number of ones in the Gray code of n = number of maximal runs (of either
// symbol) in the binary expansion; 0 for n = 0.
unsigned gray_weight(uint64_t n);

// Nonadjacent form: digits over {-1,0,1}, MSB first, no two adjacent nonzero.
struct SignedExpansion {
  std::vector<int8_t> digits;

  size_t length() const { return digits.size(); }
  unsigned hamming_weight() const;
  uint64_t value() const;
};

SignedExpansion naf(uint64_t n);
std::string signed_str(const SignedExpansion& e);  // 'T' for -1, e.g. "100T0T"

// Hamming weight of the NAF, via the recursion
//   hn(2n) = hn(n), hn(4n+1) = hn(n)+1, hn(4n-1) = hn(n)+1, hn(0) = 0
// (independent of the naf() construction; the two are cross-checked in tests).
unsigned naf_weight(uint64_t n);

unsigned digit_sum(uint64_t n, unsigned q);

}  // namespace digitfn
