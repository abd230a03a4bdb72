#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bseries.hpp"
#include "quasi.hpp"
#include "regular.hpp"

namespace digitfn {

// B-series partial derivatives at (1/q, 0):
//   bt  = sum q^{-l(n)} lambda(n)
//   btt = sum q^{-l(n)} lambda(n)^2
//   btx = sum l(n) q^{1-l(n)} lambda(n)
// over the B-set, with lambda = f (additive) or log f (multiplicative).
struct MomentSums {
  Value bt, btt, btx;
  bool exact = false;
  unsigned truncation = 0;   // L when truncated
  bool tail_used = false;
  double tail_gamma = 0;
  std::vector<double> tail_fit;  // first-moment tail polynomial, constant first
};

// Exact moments for an additive q-regular function with zero-insensitive
// representation R: the B-set recognizer (states = trailing zero count) is
// tensored with R and R (x) R; the per-length sums obey Y_{l+1} = T Y_l, so
//   sum q^{-l} Y_l = (qI - T)^{-1} Y_1,   sum l q^{1-l} Y_l = q^2 (qI - T)^{-2} Y_1.
// Throws Errc::singular when qI - T is not invertible (the series diverges
// at x = 1/q; the function grows too fast).
MomentSums exact_moments(const LinearRepresentation& R, unsigned r);

// Truncated moments from a per-length table; tail extrapolation is included
// when the table carries a fitted tail model.
MomentSums truncated_moments(const BSeries& B);

// mu = B_t(1/q, 0) / q^{2r}
Value mean_constant(const MomentSums& m, unsigned q, unsigned r);

// The six-term variance expression; exact rational when the moments are.
Value variance_constant(const MomentSums& m, unsigned q, unsigned r);

struct RltConstants {
  double mu = 0;
  double sigma2 = 0;
  bool growth_warning = false;  // some s_i < 1 (the CLT hypothesis needs s_i >= 1)
};

// Closed forms for run length transforms (q = 2, r = 1):
//   mu = sum (log s_i) 2^{-i-2}
//   sigma2 = sum (log s_i)^2 (2^{-i-2} - (2i-1) 2^{-2i-4})
//          - sum_{j>i} (log s_i)(log s_j) (i+j-1) 2^{-i-j-3}
// truncated at index I; terms decay like i^2 2^{-i}.
RltConstants rlt_constants(const std::function<double(unsigned)>& log_s, unsigned I);

struct GfCheckResult {
  bool ok = true;
  long t_failed = 0;
  unsigned k_failed = 0;
  std::string detail;
  unsigned k_checked = 0;
};

// Verifies [x^k] (1 + (1+x+...+x^{r-1}) B)/(1 - x - x^r B) = sum_{n<q^k} f(n)^t
// exactly for each integer t, for k <= L - r. Exact series arithmetic.
GfCheckResult gf_identity_check(const QuasiSpec& f, unsigned L, const std::vector<long>& ts);

// Real root of x + x^r B(x,t) = 1 near 1/q (safeguarded Newton from 1/q).
// Throws Errc::convergence if no bracketed root exists.
double dominant_singularity(const BSeries& B, double t);

struct ExperimentReport {
  unsigned k = 0;
  double count = 0;  // q^k
  double mean = 0;
  double variance = 0;
  double ks_distance = 0;
  bool degenerate = false;  // variance 0 (constant function)
  // value -> multiplicity of lambda over [0, q^k); lattice histogram
  std::vector<std::pair<double, uint64_t>> histogram;
};

// Exhaustive distribution of lambda(N_k) for N_k in [0, q^k). The KS field
// is the Kolmogorov distance of the standardized distribution from the
// standard Gaussian, with the jump-midpoint convention for lattice laws
// (the raw one-sided sup never vanishes for a discrete law). The normal
// distribution function is evaluated via erfc (|error| < 1e-7 is ample
// against the 1e-2 scale tolerances used on it).
ExperimentReport empirical_experiment(const QuasiSpec& f, unsigned k, unsigned jobs = 1);

double normal_cdf(double x);

}  // namespace digitfn
