// Acceptance suite: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bseries.hpp"
#include "catalog.hpp"
#include "clt.hpp"
#include "digits.hpp"
#include "funcs.hpp"
#include "quasi.hpp"
#include "regular.hpp"
#include "serialize.hpp"

using namespace digitfn;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

std::string fx(const char* name) {
  return std::string(DIGITFN_FIXTURES_DIR) + "/" + name;
}

bool within(double x, double target, double tol) { return std::fabs(x - target) <= tol; }

// ---- 1 & 2: exact constants --------------------------------------------

bool exact_constants(const char* fn_name, unsigned r, const Rat& mu_want, const Rat& s2_want,
                     std::string& detail) {
  auto b = catalog_lookup(fn_name);
  auto m = exact_moments(*b.rep, r);
  Value mu = mean_constant(m, b.spec.q, r);
  Value s2 = variance_constant(m, b.spec.q, r);
  detail = "mu=" + mu.str() + " sigma2=" + s2.str();
  return m.exact && mu.is_exact() && s2.is_exact() && mu.rat() == mu_want && s2.rat() == s2_want;
}

// ---- 3: truncated opt-reps constants -------------------------------------

bool optreps_constants(std::string& detail) {
  auto b = catalog_lookup("opt-reps");
  BSeries B = bseries_enumerate_rep(*b.rep, Mode::multiplicative, b.spec.r, 28);
  fit_tail(B);
  auto m = truncated_moments(B);
  double mu = mean_constant(m, 2, 3).as_double();
  double s2 = variance_constant(m, 2, 3).as_double();
  std::ostringstream os;
  os << "mu=" << mu << " (want 0.060829 +- 2e-3), sigma2=" << s2
     << " (want 0.038212 +- 5e-3), L=28 tail gamma=" << m.tail_gamma;
  detail = os.str();
  return within(mu, 0.060829, 2e-3) && within(s2, 0.038212, 5e-3);
}

// ---- 4: Jacobsthal run-length-transform constants -------------------------

bool jacobsthal_constants(std::string& detail) {
  auto c = rlt_constants([](unsigned i) { return std::log(Rat(jacobsthal(i)).get_d()); }, 200);
  std::ostringstream os;
  os << "mu=" << c.mu << " sigma2=" << c.sigma2;
  detail = os.str();
  return within(c.mu, 0.429947, 1e-5) && within(c.sigma2, 0.121137, 1e-5);
}

// ---- 5: point values ------------------------------------------------------

bool point_values(std::string& detail) {
  struct Case {
    const char* fn;
    uint64_t n;
    long want;
  };
  const Case cases[] = {
      {"naf-weight", 314159265, 11}, {"opt-reps", 204280974, 10}, {"block-count:0101", 240150, 3},
      {"naf-weight", 27, 3},         {"opt-reps", 45, 5},
  };
  for (const auto& c : cases) {
    auto b = catalog_lookup(c.fn);
    Value direct = b.spec.eval(c.n);
    Value split = eval_by_splitting(b.spec, c.n);
    if (!direct.is_exact() || direct.rat() != c.want || !split.is_exact() ||
        split.rat() != c.want) {
      std::ostringstream os;
      os << c.fn << "(" << c.n << "): direct=" << direct.str() << " split=" << split.str()
         << " want=" << c.want;
      detail = os.str();
      return false;
    }
  }
  detail = "all five paper values match, direct and by splitting";
  return true;
}

// ---- 6: identity suites + splitting equivalence ---------------------------

bool identity_suites(std::string& detail) {
  const char* names[] = {"naf-weight",     "adjusted-gray", "block-count:0101",
                         "opt-reps",       "rlt:jacobsthal", "pow-digit-sum"};
  for (const char* name : names) {
    auto b = catalog_lookup(name);
    if (auto cx = verify_identity(b.spec, 64, 8)) {
      std::ostringstream os;
      os << name << ": identity failed at a=" << cx->a << " k=" << cx->k << " b=" << cx->b;
      detail = os.str();
      return false;
    }
    SplitEvaluator se(b.spec);
    for (uint64_t n = 0; n < (uint64_t(1) << 20); ++n) {
      if (!se.eval(n).same(b.spec.eval(n))) {
        detail = std::string(name) + ": splitting mismatch at n=" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "six functions, windows a<=64 k<=8, splitting equal on n < 2^20";
  return true;
}

// ---- 7: theorem checks -----------------------------------------------------

bool theorem_checks(std::string& detail) {
  auto rho = rep_from_file(fx("opt_reps_rep.json"));
  if (!check_quasimultiplicative(rho, 3).ok) {
    detail = "M0^3 = v u^t failed for the opt-reps fixture";
    return false;
  }
  auto hn = rep_from_file(fx("naf_weight_rep.json"));
  auto add = check_quasiadditive(hn, 2);
  if (!add.ok || add.dim_left != 3 || add.dim_right != 3) {
    std::ostringstream os;
    os << "hn conditions: uv=" << add.uv_zero << " left=" << add.left_orthogonal
       << " right=" << add.right_orthogonal << " cross=" << add.cross_zero
       << " dimU=" << add.dim_left << " dimV=" << add.dim_right;
    detail = os.str();
    return false;
  }
  auto rem = rep_from_file(fx("remark_nonminimal_rep.json"));
  for (unsigned r = 0; r <= 10; ++r) {
    if (quasimult_condition(rem, r)) {
      detail = "non-minimal fixture unexpectedly satisfies M0^r = v u^t at r=" + std::to_string(r);
      return false;
    }
  }
  auto minimized = minimize(rem);
  if (minimized.dim != 1) {
    detail = "remark fixture minimized to dimension " + std::to_string(minimized.dim);
    return false;
  }
  detail = "opt-reps r=3 outer product; hn four conditions, dim U = dim V = 3; remark fixture";
  return true;
}

// ---- 8: singularity oracle -------------------------------------------------

double singularity_mu(const BSeries& B) {
  const double h = 1e-4;
  return -static_cast<double>(B.q) * (dominant_singularity(B, h) - dominant_singularity(B, -h)) /
         (2 * h);
}

bool singularity_oracle(std::string& detail) {
  auto hn = catalog_lookup("naf-weight");
  auto Bh = bseries_transfer(*hn.rep, hn.spec.r, 300);
  double mu_h = singularity_mu(Bh);

  auto bc = catalog_lookup("block-count:0101");
  auto Bb = bseries_transfer(*bc.rep, bc.spec.r, 300);
  double mu_b = singularity_mu(Bb);

  auto rho = catalog_lookup("opt-reps");
  auto Br = bseries_enumerate_rep(*rho.rep, Mode::multiplicative, rho.spec.r, 28);
  fit_tail(Br);
  double mu_r = singularity_mu(Br);
  auto mr = truncated_moments(Br);
  double mu_r_formula = mean_constant(mr, 2, 3).as_double();

  std::ostringstream os;
  os << "hn " << mu_h << " vs 1/3; block-count " << mu_b << " vs 1/16; opt-reps " << mu_r
     << " vs formula " << mu_r_formula;
  detail = os.str();
  return within(mu_h, 1.0 / 3, 1e-4) && within(mu_b, 1.0 / 16, 1e-4) &&
         within(mu_r, mu_r_formula, 2e-3) && within(mu_r, 0.060829, 2e-3);
}

// ---- 9: generating function identity ---------------------------------------

bool gf_identities(std::string& detail) {
  auto rho = catalog_lookup("opt-reps").spec;
  auto r1 = gf_identity_check(rho, 12 + rho.r, {0, 1, 2});
  if (!r1.ok || r1.k_checked < 12) {
    detail = "opt-reps: " + r1.detail;
    return false;
  }
  auto nafexp = catalog_lookup("naf-exp").spec;
  auto r2 = gf_identity_check(nafexp, 12 + nafexp.r, {0, 1, 2});
  if (!r2.ok || r2.k_checked < 12) {
    detail = "naf-exp: " + r2.detail;
    return false;
  }
  detail = "exact for t in {0,1,2}, k <= 12, opt-reps and 2^hn";
  return true;
}

// ---- 10: distributional proxy ----------------------------------------------

bool distribution_proxy(std::string& detail) {
  auto hn = catalog_lookup("naf-weight").spec;
  std::vector<unsigned> ks = {12, 16, 20, 22};
  std::vector<double> dist;
  for (unsigned k : ks) dist.push_back(empirical_experiment(hn, k).ks_distance);
  bool monotone = true;
  for (size_t i = 1; i < dist.size(); ++i)
    if (dist[i] > dist[i - 1]) monotone = false;
  bool small = dist.back() < 0.05;
  double m22 = empirical_experiment(hn, 22).mean;
  double m21 = empirical_experiment(hn, 21).mean;
  bool mean_ok = within(m22 - m21, 1.0 / 3, 0.02);
  std::ostringstream os;
  os << "ks(12,16,20,22)=";
  for (size_t i = 0; i < dist.size(); ++i) os << (i ? "," : "") << dist[i];
  os << (monotone ? " monotone" : " NOT monotone") << "; ks(22)=" << dist.back()
     << (small ? " < 0.05" : " >= 0.05") << "; mean(22)-mean(21)=" << (m22 - m21)
     << (mean_ok ? " within 0.02 of 1/3" : " outside 0.02 of 1/3");
  detail = os.str();
  return monotone && small && mean_ok;
}

// ---- 11: recursion identities -----------------------------------------------

bool recursion_identities(std::string& detail) {
  OptimalRepCounter c;
  for (uint64_t n = 0; n < 10000; ++n) {
    uint64_t u1n = c.u_vector(n)[0];
    auto a = c.u_vector(8 * n);
    auto b = c.u_vector(8 * n + 1);
    bool ok = a[0] == u1n && a[1] == u1n && a[2] == u1n && a[3] == u1n && a[4] == u1n &&
              b[0] == u1n && b[1] == u1n && b[2] == 0 && b[3] == 0 && b[4] == 0;
    if (!ok) {
      detail = "u-vector 8n identities fail at n=" + std::to_string(n);
      return false;
    }
  }
  for (uint64_t n = 0; n < (1u << 16); ++n) {
    if (naf_weight(n) != naf(n).hamming_weight()) {
      detail = "naf recursion/construction mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "u identities on n < 10^4; naf recursion vs construction on n < 2^16";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "exact constants, block count 0101 (mu=1/16, sigma2=17/256)",
       [](std::string& d) { return exact_constants("block-count:0101", 4, Rat(1) / 16, Rat(17) / 256, d); }},
      {2, "exact constants, NAF weight (mu=1/3, sigma2=2/27)",
       [](std::string& d) { return exact_constants("naf-weight", 2, Rat(1) / 3, Rat(2) / 27, d); }},
      {3, "numeric constants, optimal representations (L=28 + tail)", optreps_constants},
      {4, "Jacobsthal run-length transform constants (I=200)", jacobsthal_constants},
      {5, "paper point values, direct and by splitting", point_values},
      {6, "functional equation suites and splitting equivalence (n < 2^20)", identity_suites},
      {7, "theorem checks on the paper fixtures", theorem_checks},
      {8, "singularity oracle -q alpha'(0) vs mu", singularity_oracle},
      {9, "generating function identity, exact", gf_identities},
      {10, "KS distance decay and mean increments for hn", distribution_proxy},
      {11, "recursion identities (u-vectors, NAF)", recursion_identities},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s  (%s) [%.2fs]\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures;
}
