#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quasi.hpp"
#include "regular.hpp"

namespace digitfn {

// Tail model for the per-length contributions beyond the enumerated range:
//   w_j(l) ~ poly_j(l - center) * gamma^l,  deg poly_j = j,
// with gamma = (dominant eigenvalue of the B-set count automaton) / q.
// Counts (j = 0) are extended exactly by the automaton recurrence instead.
struct TailModel {
  double gamma = 0;
  double center = 0;
  std::array<std::vector<double>, 5> poly;  // poly[j]: coefficients, constant first
};

// Per-length moment table of the series B(x,t) = sum_{n in B} x^{l(n)} e^{t lambda(n)}:
//   w[j][l] = q^{-l} * sum over members of length l of lambda(n)^j,  j = 0..4,
// where lambda = f (additive) or log f (multiplicative). The q^{-l} scaling
// keeps entries bounded; B(x,t) = sum_l (qx)^l sum_j t^j w[j][l] / j!.
class BSeries {
 public:
  unsigned q = 2;
  unsigned r = 1;
  unsigned L = 0;                        // exact lengths 1..L
  std::array<std::vector<double>, 5> w;  // w[j][l], index 0 unused
  std::optional<TailModel> tail;
  std::vector<double> count_ext;         // scaled counts for lengths L+1.., exact recurrence

  // Truncation-order-4 evaluation in t; includes the tail extension when
  // fitted. Valid for |t| small (the Taylor window) and q*x*gamma < 1.
  double eval(double x, double t) const;
  double eval_dx(double x, double t) const;

  // Moment sums at (1/q, 0): bt = sum q^-l S1_l, btt with lambda^2,
  // btx = sum l q^{1-l} S1_l; tail included when fitted.
  double bt() const;
  double btt() const;
  double btx() const;

 private:
  double tail_w(unsigned j, unsigned l) const;  // extrapolated w_j(l), l > L
  template <class Term>
  double sum_tail(Term&& term) const;
};

// Dominant eigenvalue of the B-set per-length count automaton (states =
// trailing zero count 0..r-1), by power iteration.
double bset_count_growth(unsigned q, unsigned r);

// Enumerates the B-set, evaluating f on every member. Multiplicative
// functions must stay positive (Errc::domain).
BSeries bseries_enumerate(const QuasiSpec& f, unsigned L);

// Same walk, but the member values come from an integer linear
// representation maintained incrementally (one matrix-vector product per
// digit). Requires small nonnegative integer matrices; guarded against
// 64-bit overflow via the row-sum growth bound.
BSeries bseries_enumerate_rep(const LinearRepresentation& R, Mode mode, unsigned r, unsigned L);

// Per-length sums of f^j (j <= 4) for an additive zero-insensitive
// representation via the j-fold tensor transfer operator, in scaled doubles.
// Exact per-length values up to roundoff, any L.
BSeries bseries_transfer(const LinearRepresentation& R, unsigned r, unsigned L);

// Fits the tail model on the last 6 per-length contributions and attaches
// the exact scaled-count extension.
void fit_tail(BSeries& B);

}  // namespace digitfn
