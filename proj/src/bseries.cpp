#include "bseries.hpp"

#include <cmath>

namespace digitfn {

namespace {

constexpr double kTermCutoff = 1e-22;     // relative tail-term stop
constexpr unsigned kMaxTailTerms = 20000; // hard stop for the extension sums

double poly_eval(const std::vector<double>& c, double x) {
  double y = 0;
  for (size_t i = c.size(); i-- > 0;) y = y * x + c[i];
  return y;
}

}  // namespace

double BSeries::tail_w(unsigned j, unsigned l) const {
  if (j == 0) {
    size_t idx = l - L - 1;
    return idx < count_ext.size() ? count_ext[idx] : 0.0;
  }
  const TailModel& t = *tail;
  return poly_eval(t.poly[j], l - t.center) * std::pow(t.gamma, l);
}

template <class Term>
double BSeries::sum_tail(Term&& term) const {
  // term(l) for l > L; stops once terms are negligible
  double s = 0;
  for (unsigned l = L + 1; l <= L + kMaxTailTerms; ++l) {
    double v = term(l);
    s += v;
    if (std::fabs(v) < kTermCutoff * (1.0 + std::fabs(s))) break;
  }
  return s;
}

double BSeries::eval(double x, double t) const {
  const double qx = q * static_cast<double>(x);
  double s = 0;
  double p = 1;
  for (unsigned l = 1; l <= L; ++l) {
    p *= qx;
    double tl = w[0][l] + t * (w[1][l] + t * (w[2][l] / 2 + t * (w[3][l] / 6 + t * w[4][l] / 24)));
    s += p * tl;
  }
  if (tail) {
    s += sum_tail([&](unsigned l) {
      double tl = tail_w(0, l) +
                  t * (tail_w(1, l) + t * (tail_w(2, l) / 2 + t * (tail_w(3, l) / 6 + t * tail_w(4, l) / 24)));
      return std::pow(qx, l) * tl;
    });
  }
  return s;
}

double BSeries::eval_dx(double x, double t) const {
  const double qx = q * static_cast<double>(x);
  double s = 0;
  double p = 1;  // (qx)^{l-1}
  for (unsigned l = 1; l <= L; ++l) {
    double tl = w[0][l] + t * (w[1][l] + t * (w[2][l] / 2 + t * (w[3][l] / 6 + t * w[4][l] / 24)));
    s += l * p * tl * q;
    p *= qx;
  }
  if (tail) {
    s += sum_tail([&](unsigned l) {
      double tl = tail_w(0, l) +
                  t * (tail_w(1, l) + t * (tail_w(2, l) / 2 + t * (tail_w(3, l) / 6 + t * tail_w(4, l) / 24)));
      return l * std::pow(qx, l - 1) * tl * q;
    });
  }
  return s;
}

double BSeries::bt() const {
  double s = 0;
  for (unsigned l = 1; l <= L; ++l) s += w[1][l];
  if (tail) s += sum_tail([&](unsigned l) { return tail_w(1, l); });
  return s;
}

double BSeries::btt() const {
  double s = 0;
  for (unsigned l = 1; l <= L; ++l) s += w[2][l];
  if (tail) s += sum_tail([&](unsigned l) { return tail_w(2, l); });
  return s;
}

double BSeries::btx() const {
  double s = 0;
  for (unsigned l = 1; l <= L; ++l) s += static_cast<double>(l) * q * w[1][l];
  if (tail) s += sum_tail([&](unsigned l) { return static_cast<double>(l) * q * tail_w(1, l); });
  return s;
}

double bset_count_growth(unsigned q, unsigned r) {
  if (r < 1) fail(Errc::invalid_argument, "B-set requires r >= 1");
  std::vector<double> x(r, 0.0);
  x[0] = 1.0;
  double ev = static_cast<double>(q - 1);
  for (int it = 0; it < 4000; ++it) {
    std::vector<double> y(r, 0.0);
    double total = 0;
    for (unsigned z = 0; z < r; ++z) total += x[z];
    y[0] = total * (q - 1);
    for (unsigned z = 0; z + 1 < r; ++z) y[z + 1] = x[z];
    double nx = 0, ny = 0;
    for (unsigned z = 0; z < r; ++z) {
      nx += x[z] * x[z];
      ny += y[z] * y[z];
    }
    ev = std::sqrt(ny / nx);
    double inv = 1.0 / std::sqrt(ny);
    for (unsigned z = 0; z < r; ++z) x[z] = y[z] * inv;
  }
  return ev;
}

namespace {

struct MomentAccumulator {
  unsigned L;
  std::array<std::vector<double>, 5> sums;  // unscaled per-length lambda^j sums

  explicit MomentAccumulator(unsigned L_) : L(L_) {
    for (auto& v : sums) v.assign(L + 1, 0.0);
  }

  void add(unsigned len, double lambda) {
    double p = 1;
    for (unsigned j = 0; j < 5; ++j) {
      sums[j][len] += p;
      p *= lambda;
    }
  }

  void finish(BSeries& B) const {
    for (unsigned j = 0; j < 5; ++j) {
      B.w[j].assign(L + 1, 0.0);
      double scale = 1.0;
      for (unsigned l = 1; l <= L; ++l) {
        scale /= B.q;
        B.w[j][l] = sums[j][l] * scale;
      }
    }
  }
};

}  // namespace

BSeries bseries_enumerate(const QuasiSpec& f, unsigned L) {
  struct Vis {
    const QuasiSpec* f;
    MomentAccumulator* acc;
    std::vector<uint64_t> value_stack;
    void enter(unsigned d) { value_stack.push_back(value_stack.back() * f->q + d); }
    void leave() { value_stack.pop_back(); }
    void member(unsigned len) {
      Value v = f->eval(value_stack.back());
      double lambda;
      if (f->mode == Mode::multiplicative) {
        if (!v.is_positive())
          fail(Errc::domain, "multiplicative function is not positive on the B-set");
        lambda = std::log(v.as_double());
      } else {
        lambda = v.as_double();
      }
      acc->add(len, lambda);
    }
  };
  if (L > 62) fail(Errc::invalid_argument, "enumeration limited to lengths <= 62");
  BSeries B;
  B.q = f.q;
  B.r = f.r;
  B.L = L;
  MomentAccumulator acc(L);
  Vis vis{&f, &acc, {0}};
  walk_bset(f.q, f.r, L, vis);
  acc.finish(B);
  return B;
}

BSeries bseries_enumerate_rep(const LinearRepresentation& R, Mode mode, unsigned r, unsigned L) {
  R.validate();
  const size_t d = R.dim;
  // integer matrices required; bound the growth by row sums to rule out overflow
  std::vector<std::vector<int64_t>> Mi(R.q, std::vector<int64_t>(d * d));
  double max_row_sum = 1, max_v = 1;
  for (unsigned dig = 0; dig < R.q; ++dig)
    for (size_t i = 0; i < d; ++i) {
      double row = 0;
      for (size_t j = 0; j < d; ++j) {
        const Rat& x = R.M[dig][i][j];
        if (!rat_is_integer(x) || x < 0)
          fail(Errc::invalid_argument, "integer enumeration needs nonnegative integer matrices");
        long e = x.get_num().get_si();
        Mi[dig][i * d + j] = e;
        row += static_cast<double>(e);
      }
      max_row_sum = std::max(max_row_sum, row);
    }
  std::vector<int64_t> v0(d);
  for (size_t i = 0; i < d; ++i) {
    if (!rat_is_integer(R.v[i]) || R.v[i] < 0)
      fail(Errc::invalid_argument, "integer enumeration needs a nonnegative integer v");
    v0[i] = R.v[i].get_num().get_si();
    max_v = std::max(max_v, static_cast<double>(v0[i]));
  }
  if (L * std::log2(std::max(1.0, max_row_sum)) + std::log2(max_v) > 61)
    fail(Errc::invalid_argument, "representation values may overflow 64 bits at this length");
  std::vector<double> u(d);
  for (size_t i = 0; i < d; ++i) u[i] = R.u[i].get_d();

  struct Vis {
    const std::vector<std::vector<int64_t>>* M;
    const std::vector<double>* u;
    MomentAccumulator* acc;
    size_t d;
    Mode mode;
    std::vector<int64_t> stack;  // flat, d entries per level
    size_t depth = 0;
    void enter(unsigned dig) {
      const int64_t* K = (*M)[dig].data();
      const int64_t* cur = stack.data() + depth * d;
      int64_t* nxt = stack.data() + (depth + 1) * d;
      for (size_t i = 0; i < d; ++i) {
        int64_t s = 0;
        for (size_t j = 0; j < d; ++j) s += K[i * d + j] * cur[j];
        nxt[i] = s;
      }
      ++depth;
    }
    void leave() { --depth; }
    void member(unsigned len) {
      const int64_t* cur = stack.data() + depth * d;
      double val = 0;
      for (size_t i = 0; i < d; ++i) val += (*u)[i] * static_cast<double>(cur[i]);
      double lambda;
      if (mode == Mode::multiplicative) {
        if (!(val > 0)) fail(Errc::domain, "multiplicative function is not positive on the B-set");
        lambda = std::log(val);
      } else {
        lambda = val;
      }
      acc->add(len, lambda);
    }
  };

  BSeries B;
  B.q = R.q;
  B.r = r;
  B.L = L;
  MomentAccumulator acc(L);
  Vis vis{&Mi, &u, &acc, d, mode, std::vector<int64_t>((L + 1) * d, 0)};
  for (size_t i = 0; i < d; ++i) vis.stack[i] = v0[i];
  walk_bset(R.q, r, L, vis);
  acc.finish(B);
  return B;
}

BSeries bseries_transfer(const LinearRepresentation& R, unsigned r, unsigned L) {
  R.validate();
  if (r < 1) fail(Errc::invalid_argument, "B-set requires r >= 1");
  const size_t d = R.dim;
  BSeries B;
  B.q = R.q;
  B.r = r;
  B.L = L;
  for (unsigned j = 0; j < 5; ++j) {
    // j-fold tensor power of the representation; scaled by 1/q per length
    size_t dj = 1;
    for (unsigned i = 0; i < j; ++i) dj *= d;
    auto kron_pow = [&](const RatMat& m) {
      std::vector<double> K(dj * dj);
      for (size_t a = 0; a < dj; ++a)
        for (size_t b = 0; b < dj; ++b) {
          double prod = 1;
          size_t ra = a, rb = b;
          for (unsigned i = 0; i < j; ++i) {
            prod *= m[ra % d][rb % d].get_d();
            ra /= d;
            rb /= d;
          }
          K[a * dj + b] = prod;
        }
      if (j == 0) K[0] = 1;
      return K;
    };
    std::vector<std::vector<double>> K;
    for (unsigned dig = 0; dig < R.q; ++dig) K.push_back(kron_pow(R.M[dig]));
    std::vector<double> uj(dj), vj(dj);
    for (size_t a = 0; a < dj; ++a) {
      double pu = 1, pv = 1;
      size_t ra = a;
      for (unsigned i = 0; i < j; ++i) {
        pu *= R.u[ra % d].get_d();
        pv *= R.v[ra % d].get_d();
        ra /= d;
      }
      uj[a] = pu;
      vj[a] = pv;
    }

    auto matvec = [&](const std::vector<double>& M, const std::vector<double>& x) {
      std::vector<double> y(dj, 0.0);
      for (size_t i = 0; i < dj; ++i) {
        double s = 0;
        const double* row = M.data() + i * dj;
        for (size_t jj = 0; jj < dj; ++jj) s += row[jj] * x[jj];
        y[i] = s;
      }
      return y;
    };

    // X[z] = q^{-l} sum over valid prefixes of length l with trailing-zero
    // count z of the tensored product vector
    std::vector<std::vector<double>> X(r, std::vector<double>(dj, 0.0));
    const double inv_q = 1.0 / R.q;
    {
      std::vector<double> s(dj, 0.0);
      for (unsigned dig = 1; dig < R.q; ++dig) {
        auto mv = matvec(K[dig], vj);
        for (size_t i = 0; i < dj; ++i) s[i] += mv[i];
      }
      for (size_t i = 0; i < dj; ++i) X[0][i] = s[i] * inv_q;
    }
    B.w[j].assign(L + 1, 0.0);
    for (unsigned l = 1; l <= L; ++l) {
      double s = 0;
      for (size_t i = 0; i < dj; ++i) s += uj[i] * X[0][i];
      B.w[j][l] = s;
      if (l == L) break;
      std::vector<std::vector<double>> nx(r, std::vector<double>(dj, 0.0));
      std::vector<double> total(dj, 0.0);
      for (unsigned z = 0; z < r; ++z)
        for (size_t i = 0; i < dj; ++i) total[i] += X[z][i];
      for (unsigned dig = 1; dig < R.q; ++dig) {
        auto mv = matvec(K[dig], total);
        for (size_t i = 0; i < dj; ++i) nx[0][i] += mv[i] * inv_q;
      }
      for (unsigned z = 0; z + 1 < r; ++z) {
        auto mv = matvec(K[0], X[z]);
        for (size_t i = 0; i < dj; ++i) nx[z + 1][i] = mv[i] * inv_q;
      }
      X = std::move(nx);
    }
  }
  return B;
}

void fit_tail(BSeries& B) {
  if (B.L < 8) fail(Errc::invalid_argument, "tail fit needs at least 8 enumerated lengths");
  TailModel t;
  t.gamma = bset_count_growth(B.q, B.r) / B.q;
  if (!(t.gamma < 1.0)) fail(Errc::domain, "count growth reaches the base; no geometric tail");
  const unsigned npts = 6;
  t.center = B.L - 2.5;  // centered fit keeps the normal equations well conditioned

  for (unsigned j = 1; j < 5; ++j) {
    unsigned deg = j;
    unsigned m = deg + 1;
    std::vector<std::vector<double>> A(m, std::vector<double>(m, 0.0));
    std::vector<double> rhs(m, 0.0);
    for (unsigned l = B.L - npts + 1; l <= B.L; ++l) {
      double y = B.w[j][l] / std::pow(t.gamma, l);
      double x = l - t.center;
      std::vector<double> pw(m);
      pw[0] = 1;
      for (unsigned i = 1; i < m; ++i) pw[i] = pw[i - 1] * x;
      for (unsigned a = 0; a < m; ++a) {
        rhs[a] += pw[a] * y;
        for (unsigned b = 0; b < m; ++b) A[a][b] += pw[a] * pw[b];
      }
    }
    // small dense solve
    for (unsigned c = 0; c < m; ++c) {
      unsigned p = c;
      while (p < m && A[p][c] == 0) ++p;
      if (p == m) fail(Errc::singular, "degenerate tail fit");
      std::swap(A[p], A[c]);
      std::swap(rhs[p], rhs[c]);
      double pv = A[c][c];
      for (unsigned jj = 0; jj < m; ++jj) A[c][jj] /= pv;
      rhs[c] /= pv;
      for (unsigned i = 0; i < m; ++i) {
        if (i == c || A[i][c] == 0) continue;
        double f = A[i][c];
        for (unsigned jj = 0; jj < m; ++jj) A[i][jj] -= f * A[c][jj];
        rhs[i] -= f * rhs[c];
      }
    }
    t.poly[j] = rhs;
  }
  t.poly[0] = {};  // counts use the exact recurrence

  // exact scaled-count extension via the automaton
  B.count_ext.clear();
  {
    std::vector<double> cur(B.r, 0.0);
    // replay the count recurrence up to length L, scaled by 1/q per step
    cur[0] = static_cast<double>(B.q - 1) / B.q;
    for (unsigned l = 1; l < B.L + kMaxTailTerms; ++l) {
      if (l > B.L) B.count_ext.push_back(cur[0]);
      std::vector<double> nxt(B.r, 0.0);
      double total = 0;
      for (unsigned z = 0; z < B.r; ++z) total += cur[z];
      nxt[0] = total * (B.q - 1) / B.q;
      for (unsigned z = 0; z + 1 < B.r; ++z) nxt[z + 1] = cur[z] / B.q;
      cur = std::move(nxt);
      if (l > B.L && cur[0] < 1e-300) break;
    }
  }
  B.tail = t;
}

}  // namespace digitfn
