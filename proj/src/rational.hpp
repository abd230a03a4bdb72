#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace digitfn {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q". Used by the representation/transducer file formats.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

// Prints "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

// r^e for integer e (e < 0 requires r != 0).
inline Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  Rat base = r;
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  if (neg) {
    if (base == 0) throw std::domain_error("0 raised to negative power");
    base = 1 / base;
  }
  Rat out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), base.get_num_mpz_t(), k);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), base.get_den_mpz_t(), k);
  out.canonicalize();
  return out;
}

inline bool rat_is_integer(const Rat& r) {
  return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0;
}

}  // namespace digitfn
