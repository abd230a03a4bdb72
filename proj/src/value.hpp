#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "rational.hpp"

namespace digitfn {

// Function value: exact rational while the underlying evaluator is
// integer/rational-valued, binary double once logs or real sequences enter.
// Arithmetic promotes to double as soon as one operand is inexact.
class Value {
 public:
  Value() : v_(Rat(0)) {}
  Value(int n) : v_(Rat(n)) {}
  Value(long n) : v_(Rat(n)) {}
  Value(uint64_t n) : v_(Rat(static_cast<unsigned long>(n))) {}
  Value(const Rat& r) : v_(r) {}
  Value(Rat&& r) : v_(std::move(r)) {}
  static Value real(double d) { Value v; v.v_ = d; return v; }

  bool is_exact() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  double as_double() const {
    return is_exact() ? std::get<Rat>(v_).get_d() : std::get<double>(v_);
  }

  Value operator+(const Value& o) const {
    if (is_exact() && o.is_exact()) return Value(rat() + o.rat());
    return real(as_double() + o.as_double());
  }
  Value operator-(const Value& o) const {
    if (is_exact() && o.is_exact()) return Value(rat() - o.rat());
    return real(as_double() - o.as_double());
  }
  Value operator*(const Value& o) const {
    if (is_exact() && o.is_exact()) return Value(rat() * o.rat());
    return real(as_double() * o.as_double());
  }
  Value& operator+=(const Value& o) { *this = *this + o; return *this; }
  Value& operator-=(const Value& o) { *this = *this - o; return *this; }
  Value& operator*=(const Value& o) { *this = *this * o; return *this; }

  bool is_zero() const { return is_exact() ? rat() == 0 : as_double() == 0.0; }
  bool is_positive() const { return is_exact() ? rat() > 0 : as_double() > 0.0; }

  // Exact equality when both sides are exact, tolerance comparison otherwise.
  bool same(const Value& o, double tol = 1e-9) const;

  // "p/q" for exact values, 9 significant digits otherwise.
  std::string str() const;

 private:
  std::variant<Rat, double> v_;
};

std::string format_real(double d);  // 9 significant digits, fixed form

}  // namespace digitfn
