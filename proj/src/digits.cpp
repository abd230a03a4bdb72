#include "digits.hpp"

#include <algorithm>
#include <bit>

namespace digitfn {

static void require_base(unsigned q) {
  if (q < 2) fail(Errc::invalid_argument, "base must be at least 2");
}

Expansion to_expansion(uint64_t n, unsigned q) {
  require_base(q);
  Expansion e;
  e.base = q;
  while (n > 0) {
    e.digits.push_back(static_cast<uint8_t>(n % q));
    n /= q;
  }
  std::reverse(e.digits.begin(), e.digits.end());
  return e;
}

uint64_t expansion_value(const Expansion& e) {
  uint64_t n = 0;
  for (uint8_t d : e.digits) n = n * e.base + d;
  return n;
}

std::string expansion_str(const Expansion& e) {
  if (e.digits.empty()) return "0";
  std::string s;
  s.reserve(e.digits.size());
  for (uint8_t d : e.digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::vector<uint8_t> parse_block(const std::string& s, unsigned q) {
  require_base(q);
  if (s.empty()) fail(Errc::invalid_argument, "empty digit block");
  std::vector<uint8_t> block;
  block.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9') fail(Errc::invalid_argument, "block digits must be '0'..'9'");
    unsigned d = static_cast<unsigned>(c - '0');
    if (d >= q) fail(Errc::invalid_argument, "block digit out of range for base");
    block.push_back(static_cast<uint8_t>(d));
  }
  return block;
}

uint64_t count_block(uint64_t n, unsigned q, const std::vector<uint8_t>& block) {
  require_base(q);
  if (block.empty()) fail(Errc::invalid_argument, "empty digit block");
  if (std::all_of(block.begin(), block.end(), [](uint8_t d) { return d == 0; }))
    fail(Errc::unsupported_block, "all-zero blocks have infinite padded count");
  for (uint8_t d : block)
    if (d >= q) fail(Errc::invalid_argument, "block digit out of range for base");

  // |block|-1 zeros beyond each end of the canonical expansion; more padding
  // cannot create further occurrences of a not-all-zero block.
  const size_t pad = block.size() - 1;
  Expansion e = to_expansion(n, q);
  std::vector<uint8_t> s(pad, 0);
  s.insert(s.end(), e.digits.begin(), e.digits.end());
  s.insert(s.end(), pad, 0);

  uint64_t count = 0;
  if (s.size() < block.size()) return 0;
  for (size_t i = 0; i + block.size() <= s.size(); ++i) {
    if (std::equal(block.begin(), block.end(), s.begin() + i)) ++count;
  }
  return count;
}

std::vector<unsigned> run_lengths(uint64_t n) {
  std::vector<unsigned> runs;
  Expansion e = to_expansion(n, 2);
  unsigned cur = 0;
  for (uint8_t d : e.digits) {
    if (d == 1) {
      ++cur;
    } else if (cur > 0) {
      runs.push_back(cur);
      cur = 0;
    }
  }
  if (cur > 0) runs.push_back(cur);
  return runs;
}

unsigned gray_weight(uint64_t n) {
  return static_cast<unsigned>(std::popcount(n ^ (n >> 1)));
}

unsigned SignedExpansion::hamming_weight() const {
  unsigned w = 0;
  for (int8_t d : digits)
    if (d != 0) ++w;
  return w;
}

uint64_t SignedExpansion::value() const {
  __int128 v = 0;
  for (int8_t d : digits) v = 2 * v + d;
  return static_cast<uint64_t>(v);
}

SignedExpansion naf(uint64_t n_in) {
  std::vector<int8_t> lsb_first;
  unsigned __int128 n = n_in;  // n+1 may need 65 bits (n = 2^64 - 1)
  while (n > 0) {
    if (n & 1) {
      // digit = 2 - (n mod 4): +1 when n = 1 (mod 4), -1 when n = 3 (mod 4)
      if ((n & 3) == 1) {
        lsb_first.push_back(1);
        n -= 1;
      } else {
        lsb_first.push_back(-1);
        n += 1;
      }
    } else {
      lsb_first.push_back(0);
    }
    n >>= 1;
  }
  SignedExpansion e;
  e.digits.assign(lsb_first.rbegin(), lsb_first.rend());
  return e;
}

std::string signed_str(const SignedExpansion& e) {
  if (e.digits.empty()) return "0";
  std::string s;
  s.reserve(e.digits.size());
  for (int8_t d : e.digits) s.push_back(d == 0 ? '0' : (d == 1 ? '1' : 'T'));
  return s;
}

unsigned naf_weight(uint64_t n_in) {
  unsigned w = 0;
  unsigned __int128 n = n_in;
  while (n > 0) {
    if (n & 1) {
      ++w;
      n = (n & 3) == 1 ? n >> 2 : (n >> 2) + 1;  // 4m+1 -> m, 4m-1 -> m
    } else {
      n >>= 1;
    }
  }
  return w;
}

unsigned digit_sum(uint64_t n, unsigned q) {
  require_base(q);
  unsigned s = 0;
  while (n > 0) {
    s += static_cast<unsigned>(n % q);
    n /= q;
  }
  return s;
}

}  // namespace digitfn
