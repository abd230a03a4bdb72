#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace digitfn {

// Linear representation (u, M_0..M_{q-1}, v) of a q-regular sequence over
// exact rationals:  f(n) = u^t M_{n_0} M_{n_1} ... M_{n_L} v  for the q-ary
// expansion n_L ... n_0 (least significant digit's matrix leftmost, fixed by
// the recursion vec(qn+i) = M_i vec(n)); f(0) = u^t v.
struct LinearRepresentation {
  unsigned q = 2;
  size_t dim = 0;
  RatVec u;                // row vector, length dim
  std::vector<RatMat> M;   // one dim x dim matrix per digit
  RatVec v;                // column vector, length dim

  void validate() const;   // shape check; throws Errc::parse
};

Rat eval_rep(const LinearRepresentation& R, uint64_t n);

// M_0 v = v: leading zeros of the expansion do not change the value.
bool is_zero_insensitive(const LinearRepresentation& R);

// Standard rational-series reduction: restrict to the left span
// { u^t (products of M_i) }, then to the right span { (products) v }.
// The result computes the same sequence with minimal dimension.
// Throws Errc::minimization_conflict if zero-insensitivity is lost.
LinearRepresentation minimize(const LinearRepresentation& R);

// Raw outer-product test M_0^r = v u^t on R as given.
bool quasimult_condition(const LinearRepresentation& R, unsigned r);

struct QuasiMultReport {
  bool ok = false;
  unsigned r = 0;
  size_t input_dim = 0;
  size_t minimal_dim = 0;
  bool zero_insensitive_after = false;
};

// Theorem test with canonicalization: minimize first, re-verify
// zero-insensitivity (error if violated), then test M_0^r = v u^t.
QuasiMultReport check_quasimultiplicative(const LinearRepresentation& R, unsigned r);

// Smallest r <= r_max with M_0^r = v u^t on the canonical representation.
std::optional<unsigned> find_mult_parameter(const LinearRepresentation& R, unsigned r_max);

enum class Side { left, right };

// Smallest vector space U (resp. V) such that every product point
// u^t prod M (resp. prod M v) stays in the affine subspace u^t + U^t
// (resp. v + V). Worklist closure over the difference vectors.
struct AffineClosure {
  Side side;
  std::vector<RatVec> basis;

  size_t dim() const { return basis.size(); }
};

AffineClosure affine_closure(const LinearRepresentation& R, Side side);

struct QuasiAddReport {
  bool ok = false;
  unsigned r = 0;
  bool uv_zero = false;        // u^t v = 0
  bool left_orthogonal = false;   // x^t (M_0^r - I) v = 0 for x in U
  bool right_orthogonal = false;  // u^t (M_0^r - I) y = 0 for y in V
  bool cross_zero = false;        // x^t M_0^r y = 0 for x in U, y in V
  size_t dim_left = 0;
  size_t dim_right = 0;
};

// Four-condition quasiadditivity test; requires a zero-insensitive input
// (Errc::not_canonical otherwise).
QuasiAddReport check_quasiadditive(const LinearRepresentation& R, unsigned r);

}  // namespace digitfn
