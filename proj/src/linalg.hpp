#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace digitfn {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

RatMat identity_mat(size_t n);
RatMat zero_mat(size_t rows, size_t cols);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& x);
RatVec vec_mat(const RatVec& x, const RatMat& a);
Rat dot(const RatVec& a, const RatVec& b);
RatMat outer(const RatVec& col, const RatVec& row);
RatMat mat_pow(const RatMat& a, unsigned e);
bool mat_equal(const RatMat& a, const RatMat& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
bool vec_is_zero(const RatVec& a);

// Exact Gaussian elimination with the fixed structured pivot (first nonzero
// column, first nonzero row); rank decisions carry no floating tolerance.
size_t mat_rank(RatMat a);

// Solves A x = b exactly; throws Errc::singular if A is not invertible.
RatVec solve_linear(RatMat a, RatVec b);

// Incrementally built vector span that remembers how each echelon row was
// derived from the inserted vectors, so members can be re-expressed in the
// original (inserted) basis.
class Span {
 public:
  // Returns true if v enlarged the span; v is then recorded as a basis vector.
  bool insert(const RatVec& v);
  bool contains(const RatVec& v) const;
  // Coordinates of v with respect to the inserted basis vectors, or nullopt
  // if v lies outside the span.
  std::optional<RatVec> coordinates(const RatVec& v) const;

  size_t dim() const { return basis_.size(); }
  const std::vector<RatVec>& basis() const { return basis_; }

 private:
  std::vector<RatVec> basis_;    // vectors as inserted
  std::vector<RatVec> echelon_;  // reduced forms, one pivot each
  std::vector<size_t> pivots_;
  std::vector<RatVec> combo_;    // echelon_[i] = sum_j combo_[i][j] * basis_[j]
};

}  // namespace digitfn
