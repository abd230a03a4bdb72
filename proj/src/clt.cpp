#include "clt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace digitfn {

namespace {

// Stacked transfer operator on (trailing-zero-count, rep-vector) blocks:
//   X'[0]   = sum_{dig != 0} M_dig (X[0] + ... + X[r-1])
//   X'[z+1] = M_0 X[z]
RatMat build_transfer(const std::vector<RatMat>& M, unsigned q, unsigned r, size_t d) {
  RatMat T = zero_mat(r * d, r * d);
  for (unsigned z = 0; z < r; ++z) {
    for (unsigned dig = 1; dig < q; ++dig)
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) T[i][z * d + j] += M[dig][i][j];
    if (z + 1 < r)
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) T[(z + 1) * d + i][z * d + j] += M[0][i][j];
  }
  return T;
}

// bt-style sum for one representation: (sum1, sumlx) with
// sum1 = u . block0 of (qI - T)^{-1} Y1, sumlx = q^2 u . block0 of (qI-T)^{-2} Y1.
// growth rate of T^l applied to the actual initial vector; the resolvent
// series sum q^{-l} T^{l-1} only converges when this stays below q
double transfer_growth(const RatMat& T, const RatVec& y1) {
  size_t D = T.size();
  std::vector<double> x(D), Td(D * D);
  double nx = 0;
  for (size_t i = 0; i < D; ++i) {
    x[i] = y1[i].get_d();
    nx += x[i] * x[i];
    for (size_t j = 0; j < D; ++j) Td[i * D + j] = T[i][j].get_d();
  }
  if (nx == 0) return 0;
  double rate = 0;
  for (int it = 0; it < 500; ++it) {
    std::vector<double> y(D, 0.0);
    for (size_t i = 0; i < D; ++i) {
      double s = 0;
      for (size_t j = 0; j < D; ++j) s += Td[i * D + j] * x[j];
      y[i] = s;
    }
    double ny = 0;
    for (size_t i = 0; i < D; ++i) ny += y[i] * y[i];
    if (ny == 0) return 0;  // nilpotent direction
    rate = std::sqrt(ny / nx);
    double inv = 1.0 / std::sqrt(ny);
    for (size_t i = 0; i < D; ++i) x[i] = y[i] * inv;
    nx = 1.0;
  }
  return rate;
}

std::pair<Rat, Rat> resolvent_sums(const RatVec& u, const std::vector<RatMat>& M, const RatVec& v,
                                   unsigned q, unsigned r) {
  size_t d = v.size();
  RatMat T = build_transfer(M, q, r, d);
  size_t D = r * d;
  RatMat qIT = zero_mat(D, D);
  for (size_t i = 0; i < D; ++i)
    for (size_t j = 0; j < D; ++j) qIT[i][j] = (i == j ? Rat(q) : Rat(0)) - T[i][j];
  RatVec y1(D, Rat(0));
  for (unsigned dig = 1; dig < q; ++dig) {
    RatVec mv = mat_vec(M[dig], v);
    for (size_t i = 0; i < d; ++i) y1[i] += mv[i];
  }
  if (transfer_growth(T, y1) >= q - 1e-7)
    fail(Errc::singular,
         "per-length sums grow at least like q^l: the series diverges at x = 1/q");
  RatVec x1, x2;
  try {
    x1 = solve_linear(qIT, y1);   // sum q^{-l} Y_l
    x2 = solve_linear(qIT, x1);   // (qI-T)^{-2} Y_1
  } catch (const Error& e) {
    if (e.code() == Errc::singular)
      fail(Errc::singular, "resolvent is singular: the function grows too fast for x = 1/q");
    throw;
  }
  Rat s1(0), slx(0);
  for (size_t i = 0; i < d; ++i) {
    s1 += u[i] * x1[i];
    slx += u[i] * x2[i];
  }
  slx *= Rat(q) * Rat(q);
  return {s1, slx};
}

RatMat kron(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), m = b.size();
  RatMat c = zero_mat(n * m, n * m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t k = 0; k < m; ++k)
        for (size_t l = 0; l < m; ++l)
          if (b[k][l] != 0) c[i * m + k][j * m + l] = a[i][j] * b[k][l];
    }
  return c;
}

RatVec kron_vec(const RatVec& a, const RatVec& b) {
  RatVec c(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) c[i * b.size() + k] = a[i] * b[k];
  return c;
}

}  // namespace

MomentSums exact_moments(const LinearRepresentation& R, unsigned r) {
  R.validate();
  if (r < 1) fail(Errc::invalid_argument, "exact moments need r >= 1");
  if (!is_zero_insensitive(R))
    fail(Errc::not_canonical, "exact moments require a zero-insensitive representation");
  auto [bt, btx] = resolvent_sums(R.u, R.M, R.v, R.q, r);
  std::vector<RatMat> M2;
  for (const RatMat& m : R.M) M2.push_back(kron(m, m));
  auto [btt, ignored] = resolvent_sums(kron_vec(R.u, R.u), M2, kron_vec(R.v, R.v), R.q, r);
  (void)ignored;
  MomentSums out;
  out.bt = Value(bt);
  out.btt = Value(btt);
  out.btx = Value(btx);
  out.exact = true;
  return out;
}

MomentSums truncated_moments(const BSeries& B) {
  MomentSums out;
  out.bt = Value::real(B.bt());
  out.btt = Value::real(B.btt());
  out.btx = Value::real(B.btx());
  out.exact = false;
  out.truncation = B.L;
  out.tail_used = B.tail.has_value();
  if (B.tail) {
    out.tail_gamma = B.tail->gamma;
    out.tail_fit = B.tail->poly[1];
  }
  return out;
}

Value mean_constant(const MomentSums& m, unsigned q, unsigned r) {
  if (m.bt.is_exact()) return Value(m.bt.rat() * rat_pow(Rat(q), -2L * r));
  return Value::real(m.bt.as_double() * std::pow(static_cast<double>(q), -2.0 * r));
}

Value variance_constant(const MomentSums& m, unsigned q, unsigned r) {
  if (m.bt.is_exact() && m.btt.is_exact() && m.btx.is_exact()) {
    Rat bt = m.bt.rat(), btt = m.btt.rat(), btx = m.btx.rat();
    Rat Q(q);
    Rat qm1 = Q - 1;
    Rat s2 = -bt * bt * rat_pow(Q, -4L * r + 1) / qm1
           + Rat(2) * bt * bt * rat_pow(Q, -3L * r + 1) / qm1
           - bt * bt * rat_pow(Q, -4L * r) / qm1
           - Rat(4L * r) * bt * bt * rat_pow(Q, -4L * r)
           + btt * rat_pow(Q, -2L * r)
           - Rat(2) * bt * btx * rat_pow(Q, -4L * r - 1);
    return Value(s2);
  }
  double bt = m.bt.as_double(), btt = m.btt.as_double(), btx = m.btx.as_double();
  double Q = q, R = r;
  double s2 = -bt * bt * std::pow(Q, -4 * R + 1) / (Q - 1)
            + 2 * bt * bt * std::pow(Q, -3 * R + 1) / (Q - 1)
            - bt * bt * std::pow(Q, -4 * R) / (Q - 1)
            - 4 * R * bt * bt * std::pow(Q, -4 * R)
            + btt * std::pow(Q, -2 * R)
            - 2 * bt * btx * std::pow(Q, -4 * R - 1);
  return Value::real(s2);
}

RltConstants rlt_constants(const std::function<double(unsigned)>& log_s, unsigned I) {
  RltConstants out;
  std::vector<double> L(I + 1, 0.0);
  for (unsigned i = 1; i <= I; ++i) {
    L[i] = log_s(i);
    if (L[i] < 0) out.growth_warning = true;
  }
  double mu = 0, diag = 0, cross = 0;
  for (unsigned i = I; i >= 1; --i) {
    mu += L[i] * std::pow(2.0, -static_cast<double>(i) - 2);
    diag += L[i] * L[i] *
            (std::pow(2.0, -static_cast<double>(i) - 2) -
             (2.0 * i - 1) * std::pow(2.0, -2.0 * i - 4));
  }
  for (unsigned i = 1; i <= I; ++i)
    for (unsigned j = i + 1; j <= I; ++j)
      cross += L[i] * L[j] * (i + j - 1.0) * std::pow(2.0, -static_cast<double>(i) - j - 3);
  out.mu = mu;
  out.sigma2 = diag - cross;
  return out;
}

namespace {

Value value_pow(const Value& v, long t) {
  if (t == 0) return Value(1);
  if (v.is_exact()) return Value(rat_pow(v.rat(), t));
  return Value::real(std::pow(v.as_double(), static_cast<double>(t)));
}

// truncated series product
std::vector<Value> series_mul(const std::vector<Value>& a, const std::vector<Value>& b, size_t L) {
  std::vector<Value> c(L + 1, Value(0));
  for (size_t i = 0; i <= L && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j <= L && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

GfCheckResult gf_identity_check(const QuasiSpec& f, unsigned L, const std::vector<long>& ts) {
  if (f.r < 1) fail(Errc::invalid_argument, "the generating-function identity needs r >= 1");
  if (L <= f.r) fail(Errc::invalid_argument, "truncation degree must exceed r");
  GfCheckResult res;
  const unsigned kmax = L - f.r;
  res.k_checked = kmax;

  // member values grouped by length
  struct Collect {
    const QuasiSpec* f;
    std::vector<uint64_t> vals;
    std::vector<std::vector<uint64_t>> by_len;
    void enter(unsigned d) { vals.push_back(vals.back() * f->q + d); }
    void leave() { vals.pop_back(); }
    void member(unsigned len) { by_len[len].push_back(vals.back()); }
  };
  Collect col{&f, {0}, std::vector<std::vector<uint64_t>>(L + 1)};
  walk_bset(f.q, f.r, L, col);

  for (long t : ts) {
    // B(x, t) as an exact truncated series
    std::vector<Value> B(L + 1, Value(0));
    for (unsigned l = 1; l <= L; ++l)
      for (uint64_t n : col.by_len[l]) B[l] += value_pow(f.eval(n), t);

    // numerator 1 + (1 + x + ... + x^{r-1}) B
    std::vector<Value> pre(f.r, Value(1));
    std::vector<Value> num = series_mul(pre, B, L);
    num[0] += Value(1);
    // denominator 1 - x - x^r B
    std::vector<Value> den(L + 1, Value(0));
    den[0] = Value(1);
    den[1] = Value(-1);
    for (unsigned l = 0; l + f.r <= L; ++l) den[l + f.r] -= B[l];
    // F = num / den by series inversion (den[0] = 1)
    std::vector<Value> F(L + 1, Value(0));
    for (unsigned k = 0; k <= L; ++k) {
      Value c = k < num.size() ? num[k] : Value(0);
      for (unsigned j = 1; j <= k; ++j) c = c - den[j] * F[k - j];
      F[k] = c;  // den[0] == 1
    }

    // direct side: the cumulative sums sum_{n < q^k} f(n)^t
    Value direct(0);
    uint64_t upto = 1;
    uint64_t n = 0;
    for (unsigned k = 0; k <= kmax; ++k) {
      while (n < upto) {
        direct += value_pow(f.eval(n), t);
        ++n;
      }
      if (!F[k].same(direct)) {
        res.ok = false;
        res.t_failed = t;
        res.k_failed = k;
        res.detail = "coefficient mismatch at t=" + std::to_string(t) + " k=" + std::to_string(k) +
                     ": series " + F[k].str() + " vs direct " + direct.str();
        return res;
      }
      upto *= f.q;
    }
  }
  return res;
}

double dominant_singularity(const BSeries& B, double t) {
  const double x0 = 1.0 / B.q;
  auto g = [&](double x) { return x + std::pow(x, static_cast<double>(B.r)) * B.eval(x, t) - 1.0; };
  auto gp = [&](double x) {
    double xr = std::pow(x, static_cast<double>(B.r));
    return 1.0 + B.r * xr / x * B.eval(x, t) + xr * B.eval_dx(x, t);
  };
  // bracket: g(0+) = -1; walk right until the sign flips. With a tail model
  // the series blows up at x = 1/(q*gamma); never step past that radius.
  const double radius = B.tail ? (1.0 - 1e-9) / (B.q * B.tail->gamma)
                               : std::numeric_limits<double>::infinity();
  double lo = 1e-9, hi = std::min(x0, radius);
  double glo = g(lo), ghi = g(hi);
  unsigned guard = 0;
  while (glo * ghi > 0) {
    lo = hi;
    glo = ghi;
    hi = std::min(hi * 1.25, radius);
    if (hi <= lo || ++guard > 200)
      fail(Errc::convergence, "no singularity bracket near 1/q");
    ghi = g(hi);
    if (!std::isfinite(ghi)) ghi = std::numeric_limits<double>::infinity();
  }
  double x = x0;
  if (x < lo || x > hi) x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double gx = g(x);
    if (gx == 0) return x;
    if (gx * glo < 0)
      hi = x;
    else {
      lo = x;
      glo = gx;
    }
    double step = gx / gp(x);
    double nx = x - step;
    if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);  // bisect when Newton leaves the bracket
    if (std::fabs(nx - x) < 1e-16 * std::max(1.0, std::fabs(x))) return nx;
    x = nx;
  }
  return x;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

ExperimentReport empirical_experiment(const QuasiSpec& f, unsigned k, unsigned jobs) {
  if (k > 40) fail(Errc::invalid_argument, "experiment limited to k <= 40");
  uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= f.q;

  struct Partial {
    double sum = 0, sumsq = 0, comp1 = 0, comp2 = 0;  // compensated
    std::map<double, uint64_t> hist;
    void add(double x) {
      auto kahan = [](double& s, double& c, double v) {
        double y = v - c;
        double t2 = s + y;
        c = (t2 - s) - y;
        s = t2;
      };
      kahan(sum, comp1, x);
      kahan(sumsq, comp2, x * x);
      ++hist[x];
    }
  };

  const unsigned parts = count < 64 ? 1u : 64u;
  std::vector<Partial> partials(parts);
  auto run_part = [&](unsigned p) {
    uint64_t lo = count / parts * p + std::min<uint64_t>(p, count % parts);
    uint64_t hi = lo + count / parts + (p < count % parts ? 1 : 0);
    Partial& acc = partials[p];
    for (uint64_t n = lo; n < hi; ++n) {
      Value v = f.eval(n);
      double lambda;
      if (f.mode == Mode::multiplicative) {
        if (!v.is_positive()) fail(Errc::domain, "experiment needs positive values in multiplicative mode");
        lambda = std::log(v.as_double());
      } else {
        lambda = v.as_double();
      }
      acc.add(lambda);
    }
  };

  if (jobs <= 1 || parts == 1) {
    for (unsigned p = 0; p < parts; ++p) run_part(p);
  } else {
    std::vector<std::thread> pool;
    std::atomic<unsigned> next{0};
    unsigned nthreads = std::min(jobs, parts);
    for (unsigned i = 0; i < nthreads; ++i)
      pool.emplace_back([&] {
        for (unsigned p = next.fetch_add(1); p < parts; p = next.fetch_add(1)) run_part(p);
      });
    for (auto& th : pool) th.join();
  }

  // ordered merge (identical result for any jobs value)
  double sum = 0, sumsq = 0;
  std::map<double, uint64_t> hist;
  for (const Partial& p : partials) {
    sum += p.sum;
    sumsq += p.sumsq;
    for (auto& [v, c] : p.hist) hist[v] += c;
  }

  ExperimentReport rep;
  rep.k = k;
  rep.count = static_cast<double>(count);
  rep.mean = sum / rep.count;
  rep.variance = sumsq / rep.count - rep.mean * rep.mean;
  rep.histogram.assign(hist.begin(), hist.end());
  if (!(rep.variance > 0)) {
    rep.degenerate = true;
    rep.variance = 0;
    rep.ks_distance = 1.0;
    return rep;
  }
  double sd = std::sqrt(rep.variance);
  double ks = 0;
  uint64_t cum = 0;
  for (auto& [v, c] : rep.histogram) {
    double x = (v - rep.mean) / sd;
    double before = static_cast<double>(cum) / rep.count;
    cum += c;
    double after = static_cast<double>(cum) / rep.count;
    // jump-midpoint convention for lattice distributions
    ks = std::max(ks, std::fabs(0.5 * (before + after) - normal_cdf(x)));
  }
  rep.ks_distance = ks;
  return rep;
}

}  // namespace digitfn
