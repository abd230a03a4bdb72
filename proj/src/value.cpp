#include "value.hpp"

#include <cmath>
#include <cstdio>

namespace digitfn {

bool Value::same(const Value& o, double tol) const {
  if (is_exact() && o.is_exact()) return rat() == o.rat();
  double a = as_double(), b = o.as_double();
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

std::string format_real(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", d);
  return buf;
}

std::string Value::str() const {
  if (is_exact()) return rat_to_string(rat());
  return format_real(as_double());
}

}  // namespace digitfn
