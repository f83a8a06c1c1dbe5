// Acceptance gate: ten end-to-end checks across the kernel, the solution
// families, the independent verification audits, and the time-marching oracle.
// Each check prints one [PASS]/[FAIL] line with its measured metric and the
// tolerance pinned here; informational [WARN] sub-lines follow where a printed
// transcription is known to deviate from the adopted identity. Exit status is
// the number of failed checks.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "telheat/complexops.hpp"
#include "telheat/errors.hpp"
#include "telheat/families.hpp"
#include "telheat/pdeoracle.hpp"
#include "telheat/specfun.hpp"
#include "telheat/verify.hpp"

using namespace telheat;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, bool pass, const std::string& description, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("[%s] %2d %s (%s)\n", pass ? "PASS" : "FAIL", number, description.c_str(),
              detail.c_str());
}

void warn(const std::string& text) { std::printf("[WARN]       %s\n", text.c_str()); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Closed-form anchors F(s, 1/2; 3/2; z) against the direct series.
void check_closed_forms() {
  const auto start = Clock::now();
  std::vector<double> zs;
  for (int k = 0; k <= 18; ++k) zs.push_back(0.05 * k * 0.05 * k);
  zs.push_back(0.85);
  zs.push_back(0.9);

  double worst = 0.0;
  // Sound printed anchors, compared verbatim.
  for (HypCase c : {HypCase::Zero, HypCase::One, HypCase::ThreeHalves, HypCase::MinusOne})
    worst = std::max(worst,
                     closed_form_vs_series(c, zs, ClosedFormVariant::Printed).max_rel_residual);
  // The two transcription-damaged anchors, compared through the adopted
  // arcsin identities.
  for (HypCase c : {HypCase::Half, HypCase::MinusHalf})
    worst = std::max(worst,
                     closed_form_vs_series(c, zs, ClosedFormVariant::Adopted).max_rel_residual);

  const double printed_half =
      closed_form_vs_series(HypCase::Half, zs, ClosedFormVariant::Printed).max_rel_residual;
  const double printed_mhalf =
      closed_form_vs_series(HypCase::MinusHalf, zs, ClosedFormVariant::Printed).max_rel_residual;

  const double elapsed = seconds_since(start);
  const bool pass = worst < 1e-11 && elapsed <= 1.0;
  report(1, pass, "closed-form anchors match the direct series on |z| <= 0.9",
         "max_rel=" + fmt(worst) + ", tol=1e-11, " + fmt(elapsed) + "s, budget 1s");
  warn("printed arccos form of the s=1/2 anchor deviates by " + fmt(printed_half) +
       "; the arcsin variant above passes");
  warn("printed bracket form of the s=-1/2 anchor deviates by " + fmt(printed_mhalf) +
       "; the arcsin identity above passes");
}

// ---------------------------------------------------------------------------
// 2. Three-term contiguous relation over a 120-point deterministic sweep.
void check_contiguous() {
  const auto start = Clock::now();
  DeterministicRng rng(0x5eedc0ffee123ull);
  double worst = 0.0;
  int points = 0;
  for (int i = 0; i < 120; ++i) {
    const Complex a(rng.uniform(-2.5, 2.5), rng.uniform(-1.0, 1.0));
    const Complex b(rng.uniform(-2.5, 2.5), rng.uniform(-1.0, 1.0));
    const Complex c(rng.uniform(0.7, 3.0), rng.uniform(-1.0, 1.0));
    const Complex z(rng.uniform(-0.6, 0.6), rng.uniform(-0.3, 0.3));
    const Complex fm = specfun::gauss_2f1(a - 1.0, b, c, z);
    const Complex f0 = specfun::gauss_2f1(a, b, c, z);
    const Complex fp = specfun::gauss_2f1(a + 1.0, b, c, z);
    const Complex t1 = (c - a) * fm;
    const Complex t2 = (2.0 * a - c + (b - a) * z) * f0;
    const Complex t3 = a * (z - 1.0) * fp;
    const double denom = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
    worst = std::max(worst, std::abs(t1 + t2 + t3) / denom);
    const Complex rec = specfun::gauss_2f1_contiguous(a, b, c, z, fm, f0);
    worst = std::max(worst, std::abs(rec - fp) / std::max(std::abs(fp), 1e-300));
    ++points;
  }
  const double elapsed = seconds_since(start);
  const bool pass = worst < 1e-10 && points >= 100 && elapsed <= 1.0;
  report(2, pass, "contiguous three-term relation and solver over the parameter sweep",
         "max_rel=" + fmt(worst) + ", tol=1e-10, points=" + std::to_string(points) + ", " +
             fmt(elapsed) + "s, budget 1s");
}

// ---------------------------------------------------------------------------
// 3. All nine families satisfy their reduced equations on 1000 valid samples.
void check_ode_residuals() {
  const auto start = Clock::now();
  auto join = [](std::vector<double> a, const std::vector<double>& b,
                 const std::vector<double>& c = {}) {
    a.insert(a.end(), b.begin(), b.end());
    a.insert(a.end(), c.begin(), c.end());
    return a;
  };
  struct Case {
    Family fam;
    ModelParams p;
    std::vector<double> grid;
  };
  std::vector<Case> cases;
  cases.push_back(
      {Family::Compact1D, {.epsilon = 1, .a = 4, .alpha = 1}, linspace(-0.99, 0.99, 1000)});
  cases.push_back({Family::Hyper1D,
                   {.epsilon = 1, .a = 4, .alpha = 1},
                   join(linspace(-4.0, -1.06, 250), linspace(-0.95, 0.95, 500),
                        linspace(1.06, 4.0, 250))});
  cases.push_back(
      {Family::LegendreRegular, {.epsilon = 1, .a = -2, .alpha = -2}, linspace(1.01, 5.0, 1000)});
  cases.push_back({Family::LegendreIrregular,
                   {.epsilon = 1, .a = 4, .alpha = -2},
                   join(linspace(-0.94, 0.94, 500), linspace(1.06, 4.0, 500))});
  cases.push_back(
      {Family::TwoD_L1_beta1, {.epsilon = 1, .a = 4, .alpha = 1}, linspace(-1.31, 1.31, 1000)});
  cases.push_back({Family::TwoD_L1_beta2,
                   {.epsilon = 1, .a = 16, .alpha = -2, .beta = 2},
                   linspace(-1.31, 1.31, 1000)});
  cases.push_back({Family::TwoD_Radial,
                   {.epsilon = 1, .a = 3, .alpha = 3},
                   join(linspace(0.32, 0.95, 500), linspace(1.06, 1.35, 500))});
  cases.push_back(
      {Family::SourceHarmonic, {.epsilon = 1, .a = 1, .alpha = 2, .D = 1}, linspace(-0.9, 0.9, 1000)});
  cases.push_back({Family::SourceCoulomb,
                   {.epsilon = 1, .a = 1, .alpha = -1, .q = 1},
                   linspace(-0.92, -0.08, 1000)});

  double worst = 0.0;
  int families = 0, min_samples = 1 << 30;
  for (const Case& c : cases) {
    const ResidualReport rep = ode_residual({c.fam, c.p, Branch::Natural}, c.grid, 1e-3);
    worst = std::max(worst, rep.max_rel_residual);
    min_samples = std::min(min_samples, rep.sample_count);
    ++families;
  }
  const double elapsed = seconds_since(start);
  const bool pass = families == 9 && min_samples >= 1000 && worst < 1e-6 && elapsed <= 10.0;
  report(3, pass, "nine families satisfy their reduced equations",
         "max_rel=" + fmt(worst) + ", tol=1e-6, min_samples=" + std::to_string(min_samples) +
             ", " + fmt(elapsed) + "s, budget 10s");
}

// ---------------------------------------------------------------------------
// 4/5. Oracle march of the compact family: accuracy, convergence order, and
// mass conservation, plus the analytic conservation audits.
void check_oracle_and_conservation() {
  const auto start = Clock::now();
  const FamilySpec spec{Family::Compact1D, {.epsilon = 1, .a = 6, .alpha = 1}, Branch::Natural};
  GridSpec grid;
  grid.x_min = -2.5;
  grid.x_max = 2.5;
  grid.nx = 2048;
  grid.t0 = 1.0;
  grid.t1 = 2.0;
  grid.cfl = 0.5;
  const EvolutionResult run = evolve_family(spec, grid);

  // The support edge is only C^1 here, so coarser chains sit pre-asymptotic;
  // this chain is the first that reaches the second-order regime.
  std::vector<GridSpec> chain;
  for (int nx : {1024, 2048, 4096}) {
    GridSpec g = grid;
    g.nx = nx;
    chain.push_back(g);
  }
  const double order = convergence_order(spec, chain);

  const double elapsed4 = seconds_since(start);
  const bool pass4 = run.rel_l2_error < 1e-3 && order >= 1.8 && order <= 2.2 && elapsed4 <= 60.0;
  report(4, pass4, "oracle marches the compact family t=1..2 at second order",
         "rel_l2=" + fmt(run.rel_l2_error) + ", tol=1e-3, order=" + fmt(order) +
             " in [1.8,2.2], " + fmt(elapsed4) + "s, budget 60s");

  const double drift = mass_drift(spec, run);
  const std::vector<double> ts = {1.0, 2.0, 3.0};
  const double spread1 =
      conservation_audit({.epsilon = 1, .a = 4, .alpha = 1}, ts).max_rel_residual;
  const double spread2 =
      conservation_audit({.epsilon = 4, .a = 8, .alpha = 1}, ts).max_rel_residual;
  const bool pass5 = drift < 1e-4 && spread1 < 1e-6 && spread2 < 1e-6;
  report(5, pass5, "integral of T is conserved, numerically and analytically",
         "oracle_drift=" + fmt(drift) + ", tol=1e-4; audit_spread=" +
             fmt(std::max(spread1, spread2)) + ", tol=1e-6");
}

// ---------------------------------------------------------------------------
// 6. Scaling invariance T(lambda x, lambda t) = lambda^-alpha T(x, t).
void check_scaling() {
  const std::vector<AuditLine> lines = run_suite("scaling");
  double worst = 0.0;
  bool all_pass = lines.size() == 9;
  for (const AuditLine& line : lines) {
    worst = std::max(worst, line.value);
    if (line.status != AuditLine::Status::Pass) all_pass = false;
  }
  const bool pass = all_pass && worst < 1e-12;
  report(6, pass, "scaling invariance holds for every family at lambda in {0.5, 2, 3}",
         "max_rel=" + fmt(worst) + ", tol=1e-12, families=" + std::to_string(lines.size()));
}

// ---------------------------------------------------------------------------
// 7. Orthogonality integrals through degree 6 and the exact-zero degeneracy
// of the regular closed form at Gamma poles.
void check_legendre_structure() {
  const auto norm = [](int l, int m) {
    return 2.0 / (2.0 * l + 1.0) * std::tgamma(l + m + 1.0) / std::tgamma(l - m + 1.0);
  };
  double worst = 0.0;
  for (int m = 0; m <= 6; ++m)
    for (int l1 = m; l1 <= 6; ++l1)
      for (int l2 = l1; l2 <= 6; ++l2) {
        const double integral = specfun::legendre_orthogonality_integral(l1, l2, m);
        const double expected = (l1 == l2) ? norm(l1, m) : 0.0;
        const double scale = std::sqrt(norm(l1, m) * norm(l2, m));
        worst = std::max(worst, std::abs(integral - expected) / scale);
      }

  // Degenerate exactly when a/2eps is a nonnegative integer (the reciprocal
  // Gamma's argument -a/2eps - 1 hits a pole); a = -2eps itself is rejected
  // upstream, so the remaining pole set is a/2eps in {0, 1, 2, ...}.
  bool degeneracy_ok = true;
  const double eta = 0.37;
  struct Probe {
    double eps, a;
    bool degenerate;
  };
  const Probe probes[] = {
      {1, 0, true},  {1, 2, true},  {1, 4, true},   {1, 6, true},  {2, 4, true},
      {0.5, 3, true}, {1, 1, false}, {1, 3, false}, {1, -3, false}, {1, -5, false},
      {2, 3, false},
  };
  for (const Probe& pr : probes) {
    const RegularClosedForm cf =
        legendre_regular_closed_form(eta, {.epsilon = pr.eps, .a = pr.a, .alpha = -2});
    const bool zero = cf.value.real() == 0.0 && cf.value.imag() == 0.0;
    if (pr.degenerate != (zero && cf.degenerate)) degeneracy_ok = false;
    if (!pr.degenerate && zero) degeneracy_ok = false;
  }
  const bool pass = worst < 1e-8 && degeneracy_ok;
  report(7, pass, "orthogonality through degree 6; Gamma-pole degeneracy is an exact zero",
         "max_rel=" + fmt(worst) + ", tol=1e-8, degeneracy=" +
             (degeneracy_ok ? std::string("exact") : std::string("BROKEN")));
}

// ---------------------------------------------------------------------------
// 8. Travelling-wave factorization of the growing field at a = 4 eps.
void check_factorization() {
  double worst = 0.0;
  int min_samples = 1 << 30;
  for (double eps : {1.0, 4.0}) {
    DeterministicRng rng(eps == 1.0 ? 0xfac70123ull : 0xfac74567ull);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 100; ++i) {
      const double t = rng.uniform(2.0, 4.0);
      const double ratio = rng.uniform(0.05, 0.9);
      const double sign = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      pts.emplace_back(sign * ratio * t / std::sqrt(eps), t);
    }
    const ResidualReport rep =
        factorization_audit({.epsilon = eps, .a = 4.0 * eps, .alpha = -2}, pts);
    worst = std::max(worst, rep.max_rel_residual);
    min_samples = std::min(min_samples, rep.sample_count);
  }
  const bool pass = worst < 1e-10 && min_samples == 100;
  report(8, pass, "travelling-wave factorization on random cone-interior points, eps in {1, 4}",
         "max_rel=" + fmt(worst) + ", tol=1e-10, samples=" + std::to_string(min_samples) +
             " per eps");
}

// ---------------------------------------------------------------------------
// 9. Order formulas, their complex-order guard, and the golden-ratio boundary.
void check_order_formulas() {
  const double w = twod_l1_order({.epsilon = 1, .a = 4, .alpha = 1});
  const double dev_w = std::abs(w - (std::sqrt(12.0) - 1.0) / 2.0);
  const double o = twod_l1_beta2_order({.epsilon = 1, .a = 13});
  const double dev_o = std::abs(o - 1.0);

  // ComplexOrderError must fire exactly when the discriminant is negative.
  bool guard_ok = true;
  struct P1 {
    double eps, alpha, a;
  };
  for (const P1& p : {P1{1, 1, 1}, P1{1, 1, 3}, P1{1, 2, 2}, P1{1, 2, 6}, P1{2, 0.5, 1},
                      P1{2, 1, 1}, P1{1, 0.5, 0.1}}) {
    const double group = (-4.0 * p.alpha + 4.0 - 4.0 * p.alpha * p.alpha) * p.eps * p.eps;
    const double disc = group + 4.0 * p.a * (p.alpha - 1.0) * p.eps + p.a * p.a;
    bool threw = false;
    try {
      (void)twod_l1_order({.epsilon = p.eps, .a = p.a, .alpha = p.alpha});
    } catch (const ComplexOrderError&) {
      threw = true;
    }
    if (threw != (disc < 0.0)) guard_ok = false;
  }
  struct P2 {
    double eps, a;
  };
  for (const P2& p : {P2{1, 13}, P2{1, 6}, P2{1, -1}, P2{1, 12.5}, P2{1, 0}, P2{2, 26}}) {
    const double disc = p.a * p.a - 12.0 * p.a * p.eps - 4.0 * p.eps * p.eps;
    bool threw = false;
    try {
      (void)twod_l1_beta2_order({.epsilon = p.eps, .a = p.a});
    } catch (const ComplexOrderError&) {
      threw = true;
    }
    if (threw != (disc < 0.0)) guard_ok = false;
  }

  // At alpha = (sqrt(5)-1)/2 the identity alpha^2 + alpha = 1 zeroes the
  // first discriminant group (-4 alpha + 4 - 4 alpha^2) eps^2.
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  const double group = std::abs(-4.0 * golden + 4.0 - 4.0 * golden * golden);

  const double worst = std::max({dev_w, dev_o, group});
  const bool pass = worst <= 1e-14 && guard_ok;
  report(9, pass, "order formulas hit their closed values; complex guard fires iff disc < 0",
         "max_dev=" + fmt(worst) + ", tol=1e-14, guard=" +
             (guard_ok ? std::string("exact") : std::string("BROKEN")));
}

// ---------------------------------------------------------------------------
// 10. Series coefficients regenerated straight from the two source-term
// reduced equations match the kernel's recurrence coefficients.
std::vector<double> binom_series(double p, int count) {
  // coefficients of (1 - u)^p
  std::vector<double> b(static_cast<size_t>(count) + 1, 0.0);
  b[0] = 1.0;
  for (int m = 1; m <= count; ++m)
    b[static_cast<size_t>(m)] = b[static_cast<size_t>(m) - 1] * (m - 1.0 - p) / m;
  return b;
}

std::vector<double> convolve(const std::vector<double>& x, const std::vector<double>& y,
                             int count) {
  std::vector<double> out(static_cast<size_t>(count) + 1, 0.0);
  for (int k = 0; k <= count; ++k)
    for (int j = 0; j <= k; ++j)
      out[static_cast<size_t>(k)] += x[static_cast<size_t>(j)] * y[static_cast<size_t>(k - j)];
  return out;
}

void check_heun_recurrences() {
  const int N = 8;
  double worst = 0.0;
  auto track = [&worst](double got, double want) {
    worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
  };

  // Quadratic-source families: the reduced equation
  //   (eps eta^2 - 1) f'' + eta (6 eps - a) f' + (6 eps - 2a - D eta^2) f = 0
  // rewritten in u = eps eta^2 gives a directly derivable three-term
  // recurrence for each parity; the kernel side is the confluent recurrence's
  // coefficients multiplied by the series of the prefactor (1-u)^{s-2}.
  for (const auto& [e, a, D] : std::vector<std::array<double, 3>>{{1, 1, 1}, {2, 3, 0.7}}) {
    const double s = a / (2.0 * e);
    std::vector<double> g(N + 2, 0.0), go(N + 2, 0.0);
    g[0] = go[0] = 1.0;
    for (int k = 0; k <= N; ++k) {
      g[k + 1] = (g[k] * (4.0 * e * k * (k - 1.0) + 2.0 * e * k + 2.0 * (6.0 * e - a) * k +
                          6.0 * e - 2.0 * a) -
                  (k >= 1 ? (D / e) * g[k - 1] : 0.0)) /
                 (2.0 * e * (k + 1.0) * (2.0 * k + 1.0));
      go[k + 1] = (go[k] * (4.0 * e * k * (k - 1.0) + 6.0 * e * k + (12.0 * e - 2.0 * a) * k +
                            12.0 * e - 3.0 * a) -
                   (k >= 1 ? (D / e) * go[k - 1] : 0.0)) /
                  (2.0 * e * (k + 1.0) * (2.0 * k + 3.0));
    }
    const double delta_c = -D / (4.0 * e * e);
    const double eta_c = (10.0 * e - 3.0 * a) / (8.0 * e);
    const auto even = convolve(specfun::heun_c_coefficients({0.0, -0.5, s - 2.0, delta_c, eta_c}, N),
                               binom_series(s - 2.0, N), N);
    const auto odd = convolve(specfun::heun_c_coefficients({0.0, 0.5, s - 2.0, delta_c, eta_c}, N),
                              binom_series(s - 2.0, N), N);
    for (int k = 0; k <= N; ++k) {
      track(even[static_cast<size_t>(k)], g[static_cast<size_t>(k)]);
      track(odd[static_cast<size_t>(k)], go[static_cast<size_t>(k)]);
    }
  }

  // The eta^2 coefficient of the even confluent factor must equal eps - a/2.
  for (const auto& [e, a] : std::vector<std::array<double, 2>>{{1, 1}, {2, 3}, {1, 4}, {3, 2}}) {
    const double s = a / (2.0 * e);
    const auto c = specfun::heun_c_coefficients(
        {0.0, -0.5, s - 2.0, -0.3 / (4.0 * e * e), (10.0 * e - 3.0 * a) / (8.0 * e)}, 1);
    track(e * c[1], e - a / 2.0);
  }

  // Inverse-linear-source family: the reduced equation
  //   (eps eta^2 - 1) f'' - a eta f' + (a - q/eta) f = 0
  // in the shifted variable z = sqrt(eps) eta + 1, multiplied through by
  // (z - 1), yields a three-term recurrence the general-Heun coefficients
  // must reproduce.
  for (const auto& [e, a, q] : std::vector<std::array<double, 3>>{{1, 1, 1}, {2, 1, 0.5}}) {
    const double s = a / (2.0 * e), se = std::sqrt(e);
    std::vector<double> wcoef(N + 2, 0.0);
    wcoef[0] = 1.0;
    for (int k = 0; k <= N; ++k)
      wcoef[k + 1] =
          (wcoef[k] * (3.0 * e * k * (k - 1.0) - 2.0 * a * k + a + q * se) +
           (k >= 1 ? wcoef[k - 1] * (-e * (k - 1.0) * (k - 2.0) + a * (k - 1.0) - a) : 0.0)) /
          ((k + 1.0) * (2.0 * e * k - a));
    const auto hg = specfun::heun_g_coefficients({2.0, a / e + q / se, -1.0, -a / e, -s, 0.0}, N);
    for (int k = 0; k <= N; ++k)
      track(hg[static_cast<size_t>(k)], wcoef[static_cast<size_t>(k)]);
  }

  const bool pass = worst < 1e-12;
  report(10, pass, "source-family series regenerated from the reduced equations, order 8",
         "max_rel=" + fmt(worst) + ", tol=1e-12");
}

}  // namespace

int main() {
  check_closed_forms();
  check_contiguous();
  check_ode_residuals();
  check_oracle_and_conservation();
  check_scaling();
  check_legendre_structure();
  check_factorization();
  check_order_formulas();
  check_heun_recurrences();
  std::printf("acceptance: %d/10 checks passed\n", 10 - g_failures);
  return g_failures;
}
