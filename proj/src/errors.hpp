#pragma once

#include <stdexcept>
#include <string>

namespace digitfn {

// Error taxonomy mirrored by the C API status codes.
enum class Errc {
  invalid_argument = 1,   // bad base, bad digit, malformed input
  unsupported_block = 2,  // all-zero block for count_block
  domain = 3,             // nonpositive log argument, growth violation, ...
  composition = 4,        // mode/base mismatch in combine
  not_canonical = 5,      // representation fails minimal/zero-insensitive precondition
  minimization_conflict = 6,
  singular = 7,           // resolvent not invertible (spectral radius too large)
  disconnected = 8,       // transducer reachability failure
  parse = 9,              // fixture file syntax/shape problems
  unknown_function = 10,
  verification_failed = 11,  // rlt_inverse input not quasimultiplicative
  convergence = 12,          // root finder left its bracket
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace digitfn
