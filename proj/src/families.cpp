#include "telheat/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "telheat/specfun.hpp"

namespace telheat {

using specfun::Cut;
using specfun::gauss_2f1;
using specfun::heun_c;
using specfun::heun_g;
using specfun::legendre_p;
using specfun::legendre_q;
using specfun::rgamma_fn;

namespace {

constexpr double kExponentTol = 1e-12;

void require_positive_epsilon(const ModelParams& p) {
  if (!(p.epsilon > 0.0)) throw ParameterError("epsilon must be positive");
}

void require_alpha(const ModelParams& p, double want, const char* what) {
  if (std::abs(p.alpha - want) > kExponentTol)
    throw UniversalityError(std::string(what) + ": decay exponent alpha must equal " +
                            std::to_string(want));
}

void require_beta(const ModelParams& p, double want, const char* what) {
  if (std::abs(p.beta - want) > kExponentTol)
    throw UniversalityError(std::string(what) + ": spreading exponent beta must equal " +
                            std::to_string(want));
}

// Antiderivative J_m(eta) = Integral_0^eta (1 - eps t^2)^{m/2} dt inside the
// cone, by elementary recursion in m. Bases: J_0 = eta,
// J_{-1} = asin(sqrt(eps) eta)/sqrt(eps), J_{-2} = atanh(sqrt(eps) eta)/sqrt(eps).
// Upward:   J_m = [eta u^{m/2} + m J_{m-2}] / (m + 1)
// Downward: J_{m-2} = [(m + 1) J_m - eta u^{m/2}] / m, with u = 1 - eps eta^2.
double inner_antiderivative(double eta, double eps, int m) {
  const double u = 1.0 - eps * eta * eta;
  const double se = std::sqrt(eps);
  if (m >= 0) {
    int k;
    double J;
    if (m % 2 == 0) {
      k = 0;
      J = eta;
    } else {
      k = -1;
      J = std::asin(se * eta) / se;
    }
    while (k < m) {
      k += 2;
      J = (eta * std::pow(u, 0.5 * k) + k * J) / (k + 1);
    }
    return J;
  }
  int k;
  double J;
  if (m % 2 == 0) {
    k = -2;
    J = std::atanh(se * eta) / se;
  } else {
    k = -1;
    J = std::asin(se * eta) / se;
  }
  while (k > m) {
    J = ((k + 1) * J - eta * std::pow(u, 0.5 * k)) / k;
    k -= 2;
  }
  return J;
}

// Antiderivative I_m(t) = Integral (eps s^2 - 1)^{m/2} ds outside the cone
// (t > 1/sqrt(eps)), by the matching elementary recursion with
// v = eps t^2 - 1:
// Upward:   I_m = [t v^{m/2} - m I_{m-2}] / (m + 1)
// Downward: I_{m-2} = [t v^{m/2} - (m + 1) I_m] / m.
// Integration constants: each I_m with m <= -3 is aligned to vanish at
// infinity (the downward chain additionally tracks the chain's limit there);
// I_{-2} = -atanh(1/(sqrt(eps) t))/sqrt(eps) already vanishes; the remaining
// bases are I_{-1} = acosh(sqrt(eps) t)/sqrt(eps), zero on the cone, and
// I_0 = t. The upward chains agree with the hypergeometric antiderivative
// wherever that form is defined.
double outer_antiderivative(double t, double eps, int m) {
  const double v = eps * t * t - 1.0;
  const double se = std::sqrt(eps);
  const double acosh_base = std::log(se * t + std::sqrt(v)) / se;
  if (m >= 0) {
    int k;
    double I;
    if (m % 2 == 0) {
      k = 0;
      I = t;
    } else {
      k = -1;
      I = acosh_base;
    }
    while (k < m) {
      k += 2;
      I = (t * std::pow(v, 0.5 * k) - k * I) / (k + 1);
    }
    return I;
  }
  int k;
  double I;
  double chain_limit;  // limit of the raw chain value at t -> infinity
  if (m % 2 == 0) {
    k = -2;
    I = -std::atanh(1.0 / (se * t)) / se;
    chain_limit = 0.0;
  } else {
    k = -1;
    I = acosh_base;
    chain_limit = 0.0;  // placeholder; the k = -1 step multiplies it by zero
  }
  while (k > m) {
    const double boundary_limit = (k == -1) ? 1.0 / se : 0.0;
    I = (t * std::pow(v, 0.5 * k) - (k + 1) * I) / k;
    chain_limit = (boundary_limit - (k + 1) * chain_limit) / k;
    k -= 2;
  }
  return I - chain_limit;
}

// Classification of eta against the sorted singular points, for Branch tests.
bool branch_admits(Branch b, double eta, const std::vector<double>& sp) {
  if (b == Branch::Natural || sp.empty()) return true;
  switch (b) {
    case Branch::Inner:
      return eta > sp.front() && eta < sp.back();
    case Branch::Left:
      return eta < sp.front();
    case Branch::Right:
      return eta > sp.back();
    default:
      return true;
  }
}

double adaptive_simpson_step(const std::function<double(double)>& f, double a, double fa,
                             double b, double fb, double m, double fm, double whole,
                             double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double split = left + right;
  if (depth <= 0 || std::abs(split - whole) <= 15.0 * tol)
    return split + (split - whole) / 15.0;
  return adaptive_simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int depth) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_step(f, a, fa, b, fb, m, fm, whole, tol, depth);
}

}  // namespace

double damping_ratio(const ModelParams& p) {
  require_positive_epsilon(p);
  return p.a / (2.0 * p.epsilon);
}

OdeCoefficients reduce_to_ode(const ModelParams& p, Variant variant) {
  require_positive_epsilon(p);
  const double e = p.epsilon, a = p.a;
  OdeCoefficients ode;
  switch (variant) {
    case Variant::OneD: {
      require_beta(p, 1.0, "one-dimensional reduction");
      const double al = p.alpha;
      ode.p2 = [e](double n) { return e * n * n - 1.0; };
      ode.p1 = [e, a, al](double n) { return n * (2.0 * e * al + 2.0 * e - a); };
      ode.p0 = [e, a, al](double) { return al * (e * al + e - a); };
      ode.forced_alpha = al;
      ode.singular_points = {-1.0 / std::sqrt(e), 1.0 / std::sqrt(e)};
      return ode;
    }
    case Variant::TwoD_L1: {
      double al = p.alpha;
      if (std::abs(p.beta - 2.0) <= kExponentTol) {
        require_alpha(p, -2.0, "planar diagonal reduction with quadratic spreading");
        al = -2.0;
      } else {
        require_beta(p, 1.0, "planar diagonal reduction");
      }
      ode.p2 = [e](double n) { return e * n * n - 2.0; };
      ode.p1 = [e, a](double n) { return -n * (a - 3.0 * e); };
      ode.p0 = [e, a, al](double) { return al * (al * e + e - a); };
      ode.forced_alpha = al;
      const double r = std::sqrt(2.0 / e);
      ode.singular_points = {-r, r};
      return ode;
    }
    case Variant::TwoD_Radial: {
      require_beta(p, 1.0, "planar radial reduction");
      const double al = p.alpha;
      ode.p2 = [e](double n) { return e * n * n - 1.0; };
      ode.p1 = [e, a, al](double n) { return (2.0 * e * al + 2.0 * e - a) * n - 1.0 / n; };
      ode.p0 = [e, a, al](double) { return e * al * al + e * al - al * a; };
      ode.forced_alpha = al;
      ode.singular_points = {0.0, 1.0 / std::sqrt(e)};
      return ode;
    }
    case Variant::SourceHarmonic: {
      require_beta(p, 1.0, "quadratic-source reduction");
      const double D = p.D;
      ode.p2 = [e](double n) { return e * n * n - 1.0; };
      ode.p1 = [e, a](double n) { return n * (6.0 * e - a); };
      ode.p0 = [e, a, D](double n) { return 6.0 * e - 2.0 * a - D * n * n; };
      ode.forced_alpha = 2.0;
      ode.singular_points = {-1.0 / std::sqrt(e), 1.0 / std::sqrt(e)};
      return ode;
    }
    case Variant::SourceCoulomb: {
      require_beta(p, 1.0, "inverse-linear-source reduction");
      const double q = p.q;
      ode.p2 = [e](double n) { return e * n * n - 1.0; };
      ode.p1 = [a](double n) { return -a * n; };
      ode.p0 = [a, q](double n) { return a - q / n; };
      ode.forced_alpha = -1.0;
      ode.singular_points = {-1.0 / std::sqrt(e), 0.0, 1.0 / std::sqrt(e)};
      return ode;
    }
  }
  throw ConfigError("unknown reduction variant");
}

double compact_profile(double eta, const ModelParams& p) {
  require_positive_epsilon(p);
  require_alpha(p, 1.0, "compact profile");
  const double pexp = damping_ratio(p) - 1.0;
  const double u = 1.0 - p.epsilon * eta * eta;
  if (u > 0.0) return std::pow(u, pexp);
  if (u == 0.0 && pexp < 0.0)
    throw ExponentError("compact profile unbounded at the support edge");
  return 0.0;
}

double compact_field(double x, double t, const ModelParams& p) {
  if (t < kTMin) throw PreconditionError("field time below the minimum time");
  return compact_profile(x / t, p) / t;
}

Complex hyper_profile(double eta, const ModelParams& p) {
  require_positive_epsilon(p);
  require_alpha(p, 1.0, "hypergeometric profile");
  const double s = damping_ratio(p);
  const double eps = p.epsilon;
  const double u = 1.0 - eps * eta * eta;
  const bool elementary = is_integer(2.0 * s, 1e-9);
  const int m = elementary ? -static_cast<int>(std::llround(2.0 * s)) : 0;
  if (u > 0.0) {
    const double J = elementary
                         ? inner_antiderivative(eta, eps, m)
                         : eta * gauss_2f1(0.5, s, 1.5, eps * eta * eta).real();
    Complex value = -p.c1 * J * std::pow(u, s - 1.0);
    if (p.c2 != 0.0) value += p.c2 * cpow_real(eps * eta * eta - 1.0, s - 1.0);
    return value;
  }
  if (u == 0.0) throw SingularityError("hypergeometric profile on the cone");
  const double t = std::abs(eta);
  double A;
  if (elementary) {
    A = outer_antiderivative(t, eps, m);
  } else {
    const double se = std::sqrt(eps);
    const double zeta = 1.0 / (se * t);
    A = -(1.0 / se) * std::pow(zeta, 2.0 * s - 1.0) / (2.0 * s - 1.0) *
        gauss_2f1(s, s - 0.5, s + 0.5, zeta * zeta).real();
  }
  if (eta < 0.0) A = -A;
  return (p.c1 * A + p.c2) * std::pow(eps * eta * eta - 1.0, s - 1.0);
}

Complex hyper_field(double x, double t, const ModelParams& p) {
  if (t < kTMin) throw PreconditionError("field time below the minimum time");
  return hyper_profile(x / t, p) / t;
}

RegularClosedForm legendre_regular_closed_form(double eta, const ModelParams& p) {
  require_positive_epsilon(p);
  require_alpha(p, -2.0, "regular closed form");
  require_beta(p, 1.0, "regular closed form");
  const double e = p.epsilon;
  if (std::abs(p.a + 2.0 * e) < kExponentTol || std::abs(p.a + e) < kExponentTol)
    throw ParameterError("closed form undefined: zero denominator in its reduction");
  const double s = damping_ratio(p);
  const Complex rg = rgamma_fn(Complex(-s - 1.0, 0.0));
  if (rg == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), true};
  const Complex value = 2.0 * e * cpow_real(std::sqrt(e) * eta + 1.0, s + 1.0) *
                        (1.0 + eta * eta * (e + p.a)) * rg / (2.0 * e + p.a);
  return {value, false};
}

Complex legendre_regular_profile(double eta, const ModelParams& p) {
  return legendre_regular_closed_form(eta, p).value;
}

Complex legendre_family_profile(double eta, const ModelParams& p, bool irregular) {
  require_positive_epsilon(p);
  require_alpha(p, -2.0, "Legendre-type profile");
  require_beta(p, 1.0, "Legendre-type profile");
  // Naming note: throughout this file the subscript a/2eps - 1 is called the
  // order and the superscript a/2eps + 2 the degree.
  const double s = damping_ratio(p);
  const double y = std::sqrt(p.epsilon) * eta;
  const double nu = s - 1.0;
  const double mu = s + 2.0;
  const Cut cut = std::abs(y) < 1.0 ? Cut::Ferrers : Cut::OffCut;
  const Complex leg = irregular ? legendre_q(nu, mu, y, cut) : legendre_p(nu, mu, y, cut);
  return leg * cpow_real(p.epsilon * eta * eta - 1.0, 0.5 * s + 1.0);
}

Complex legendre_irregular_profile(double eta, const ModelParams& p) {
  return legendre_family_profile(eta, p, true);
}

Complex legendre_field(double x, double t, const ModelParams& p, bool irregular) {
  if (t < kTMin) throw PreconditionError("field time below the minimum time");
  return t * t * legendre_family_profile(x / t, p, irregular);
}

WaveFactorization travelling_wave_factorization(double x, double t, const ModelParams& p) {
  require_positive_epsilon(p);
  if (std::abs(p.a - 4.0 * p.epsilon) > kExponentTol)
    throw PreconditionError("travelling-wave factorization requires a = 4 epsilon");
  if (t < kTMin) throw PreconditionError("field time below the minimum time");
  const double e = p.epsilon;
  const double c = 1.0 / std::sqrt(e);
  WaveFactorization w;
  w.u_plus = (x + c * t) * (x + c * t);
  w.u_minus = (x - c * t) * (x - c * t);
  const double y = std::sqrt(e) * x / t;
  const Cut cut = std::abs(y) < 1.0 ? Cut::Ferrers : Cut::OffCut;
  w.q_factor = t * t * legendre_q(1.0, 4.0, y, cut) * (e * e) / (t * t * t * t);
  return w;
}

double twod_l1_order(const ModelParams& p) {
  require_positive_epsilon(p);
  const double e = p.epsilon, al = p.alpha;
  const double disc =
      (-4.0 * al + 4.0 - 4.0 * al * al) * e * e + 4.0 * p.a * (al - 1.0) * e + p.a * p.a;
  if (disc < 0.0)
    throw ComplexOrderError("planar diagonal profile: negative discriminant for the degree");
  return (std::sqrt(disc) - e) / (2.0 * e);
}

double twod_l1_beta2_order(const ModelParams& p) {
  require_positive_epsilon(p);
  const double e = p.epsilon;
  const double disc = p.a * p.a - 12.0 * p.a * e - 4.0 * e * e;
  if (disc < 0.0)
    throw ComplexOrderError("planar diagonal profile: negative discriminant for the degree");
  return (std::sqrt(disc) - e) / (2.0 * e);
}

namespace {

Complex twod_l1_combination(double eta, const ModelParams& p, double order) {
  const double s = damping_ratio(p);
  const double mu = s - 0.5;
  const double x = std::sqrt(p.epsilon / 2.0) * eta;
  const Cut cut = std::abs(x) < 1.0 ? Cut::Ferrers : Cut::OffCut;
  Complex combo = 0.0;
  if (p.c1 != 0.0) combo += p.c1 * legendre_p(order, mu, x, cut);
  if (p.c2 != 0.0) combo += p.c2 * legendre_q(order, mu, x, cut);
  return cpow_real(p.epsilon * eta * eta - 2.0, 0.5 * s - 0.25) * combo;
}

}  // namespace

Complex twod_l1_profile(double eta, const ModelParams& p) {
  require_positive_epsilon(p);
  require_beta(p, 1.0, "planar diagonal profile");
  return twod_l1_combination(eta, p, twod_l1_order(p));
}

Complex twod_l1_beta2_profile(double eta, const ModelParams& p) {
  require_positive_epsilon(p);
  require_beta(p, 2.0, "planar diagonal profile with quadratic spreading");
  require_alpha(p, -2.0, "planar diagonal profile with quadratic spreading");
  return twod_l1_combination(eta, p, twod_l1_beta2_order(p));
}

Complex twod_radial_profile(double eta, const ModelParams& p) {
  require_positive_epsilon(p);
  require_beta(p, 1.0, "planar radial profile");
  if (!(eta > 0.0)) throw PreconditionError("radial coordinate must be positive");
  const double e = p.epsilon, al = p.alpha;
  const double s = damping_ratio(p);
  const double u = 1.0 - e * eta * eta;
  Complex value = 0.0;
  if (p.c1 != 0.0) value += p.c1 * gauss_2f1(0.5 * al, 0.5 * (1.0 + al) - s, al + 0.5 - s, u);
  if (p.c2 != 0.0)
    value += p.c2 * gauss_2f1(1.0 - 0.5 * al, 0.5 + s - 0.5 * al, 1.5 - al + s, u) *
             cpow_real(e * eta * eta - 1.0, s + 0.5 - al);
  return value;
}

Complex harmonic_profile(double eta, const ModelParams& p) {
  require_positive_epsilon(p);
  require_beta(p, 1.0, "quadratic-source profile");
  const double e = p.epsilon;
  const double s = damping_ratio(p);
  const double z = e * eta * eta;
  const double gamma_c = s - 2.0;
  const double delta_c = -p.D / (4.0 * e * e);
  const double eta_c = (10.0 * e - 3.0 * p.a) / (8.0 * e);
  Complex combo = 0.0;
  if (p.c1 != 0.0) combo += p.c1 * heun_c({0.0, -0.5, gamma_c, delta_c, eta_c}, z);
  if (p.c2 != 0.0) combo += p.c2 * eta * heun_c({0.0, 0.5, gamma_c, delta_c, eta_c}, z);
  return combo * cpow_real(z - 1.0, s - 2.0);
}

Complex coulomb_profile(double eta, const ModelParams& p) {
  require_positive_epsilon(p);
  require_beta(p, 1.0, "inverse-linear-source profile");
  if (eta == 0.0) throw SingularityError("inverse-linear source is singular at the origin");
  const double e = p.epsilon;
  const double s = damping_ratio(p);
  const double se = std::sqrt(e);
  const double z = se * eta + 1.0;
  Complex value = 0.0;
  if (p.c1 != 0.0) {
    value += p.c1 * heun_g({2.0, p.a / e + p.q / se, -1.0, -p.a / e, -s, 0.0}, z);
  }
  if (p.c2 != 0.0) {
    const double q_second = p.q / se + s - s * s;
    const Complex phase = std::exp(Complex(0.0, kPi * (1.0 + s)));
    value += p.c2 * phase * cpow_real(z, 1.0 + s) *
             heun_g({2.0, q_second, s, 1.0 - s, 2.0 + s, 0.0}, z);
  }
  return value;
}

Complex family_value(const FamilySpec& spec, double eta) {
  const ModelParams& p = spec.params;
  switch (spec.family) {
    case Family::Compact1D:
      if (spec.branch == Branch::Left || spec.branch == Branch::Right) {
        require_positive_epsilon(p);
        require_alpha(p, 1.0, "compact profile");
        const double w = p.epsilon * eta * eta - 1.0;
        if (w <= 0.0)
          throw PreconditionError("mirrored compact branch is defined outside the cone");
        return Complex(std::pow(w, damping_ratio(p) - 1.0), 0.0);
      }
      return Complex(compact_profile(eta, p), 0.0);
    case Family::Hyper1D:
      return hyper_profile(eta, p);
    case Family::LegendreRegular:
      return legendre_family_profile(eta, p, false);
    case Family::LegendreIrregular:
      return legendre_family_profile(eta, p, true);
    case Family::TwoD_L1_beta1:
      return twod_l1_profile(eta, p);
    case Family::TwoD_L1_beta2:
      return twod_l1_beta2_profile(eta, p);
    case Family::TwoD_Radial:
      return twod_radial_profile(eta, p);
    case Family::SourceHarmonic:
      return harmonic_profile(eta, p);
    case Family::SourceCoulomb:
      return coulomb_profile(eta, p);
  }
  throw ConfigError("unknown family");
}

std::vector<double> family_singular_points(Family family, const ModelParams& p) {
  const double e = p.epsilon;
  if (!(e > 0.0)) throw ParameterError("epsilon must be positive");
  const double cone = 1.0 / std::sqrt(e);
  switch (family) {
    case Family::Compact1D:
    case Family::Hyper1D:
    case Family::LegendreRegular:
    case Family::LegendreIrregular:
    case Family::SourceHarmonic:
      return {-cone, cone};
    case Family::SourceCoulomb:
      return {-cone, 0.0, cone};
    case Family::TwoD_L1_beta1:
    case Family::TwoD_L1_beta2: {
      const double r = std::sqrt(2.0 / e);
      return {-r, r};
    }
    case Family::TwoD_Radial:
      return {0.0, cone};
  }
  throw ConfigError("unknown family");
}

Profile evaluate_profile(const FamilySpec& spec, const std::vector<double>& etas) {
  for (std::size_t i = 1; i < etas.size(); ++i)
    if (!(etas[i] > etas[i - 1]))
      throw PreconditionError("sample grid must be strictly increasing");
  Profile profile;
  profile.spec = spec;
  profile.eta = etas;
  profile.value.assign(etas.size(), Complex(0.0, 0.0));
  profile.mask.assign(etas.size(), SampleState::Excluded);
  const std::vector<double> singular = family_singular_points(spec.family, spec.params);
  const bool compact_natural =
      spec.family == Family::Compact1D &&
      (spec.branch == Branch::Natural || spec.branch == Branch::Inner);
  for (std::size_t i = 0; i < etas.size(); ++i) {
    const double eta = etas[i];
    bool masked = false;
    for (double sp : singular)
      if (std::abs(eta - sp) < kSingularBand) masked = true;
    if (masked || !branch_admits(spec.branch, eta, singular)) continue;
    try {
      const Complex v = family_value(spec, eta);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) continue;
      profile.value[i] = v;
      if (compact_natural && 1.0 - spec.params.epsilon * eta * eta <= 0.0)
        profile.mask[i] = SampleState::ZeroExtension;
      else
        profile.mask[i] = SampleState::Valid;
    } catch (const Error&) {
      // leave the sample Excluded
    }
  }
  return profile;
}

double effective_alpha(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Compact1D:
    case Family::Hyper1D:
      return 1.0;
    case Family::LegendreRegular:
    case Family::LegendreIrregular:
    case Family::TwoD_L1_beta2:
      return -2.0;
    case Family::TwoD_L1_beta1:
    case Family::TwoD_Radial:
      return spec.params.alpha;
    case Family::SourceHarmonic:
      return 2.0;
    case Family::SourceCoulomb:
      return -1.0;
  }
  throw ConfigError("unknown family");
}

double effective_beta(const FamilySpec& spec) {
  return spec.family == Family::TwoD_L1_beta2 ? 2.0 : 1.0;
}

Complex field_value(const FamilySpec& spec, double x, double t) {
  if (t < kTMin) throw PreconditionError("field time below the minimum time");
  const double al = effective_alpha(spec);
  const double be = effective_beta(spec);
  const double eta = x / std::pow(t, be);
  return std::pow(t, -al) * family_value(spec, eta);
}

Complex field_value_2d(const FamilySpec& spec, double x, double y, double t) {
  if (t < kTMin) throw PreconditionError("field time below the minimum time");
  const double al = effective_alpha(spec);
  const double be = effective_beta(spec);
  double eta = 0.0;
  switch (spec.family) {
    case Family::TwoD_L1_beta1:
    case Family::TwoD_L1_beta2:
      eta = (x + y) / std::pow(t, be);
      break;
    case Family::TwoD_Radial:
      eta = std::hypot(x, y) / t;
      break;
    default:
      throw PreconditionError("planar field is defined for the planar families only");
  }
  return std::pow(t, -al) * family_value(spec, eta);
}

double mass_integral(const Profile& profile) {
  const FamilySpec& spec = profile.spec;
  if (profile.eta.empty()) throw EmptyDomainError("profile has no samples");
  if (spec.family == Family::Compact1D &&
      (spec.branch == Branch::Natural || spec.branch == Branch::Inner)) {
    const double s = damping_ratio(spec.params);
    if (s - 1.0 <= -1.0)
      throw NonIntegrableError("compact profile support-edge exponent is not integrable");
    const double edge = 1.0 / std::sqrt(spec.params.epsilon);
    const double lo = std::max(profile.eta.front(), -edge);
    const double hi = std::min(profile.eta.back(), edge);
    if (!(lo < hi)) return 0.0;
    const ModelParams params = spec.params;
    auto integrand = [&params](double e) {
      try {
        return compact_profile(e, params);
      } catch (const ExponentError&) {
        return 0.0;  // isolated support-edge point of an integrable singularity
      }
    };
    return adaptive_simpson(integrand, lo, hi, 1e-8, 30);
  }
  double total = 0.0;
  bool any_valid = false;
  auto integrand = [&spec](double e) { return family_value(spec, e).real(); };
  std::size_t i = 0;
  const std::size_t n = profile.eta.size();
  while (i < n) {
    if (profile.mask[i] != SampleState::Valid) {
      ++i;
      continue;
    }
    any_valid = true;
    std::size_t j = i;
    while (j + 1 < n && profile.mask[j + 1] == SampleState::Valid) ++j;
    if (j > i)
      total += adaptive_simpson(integrand, profile.eta[i], profile.eta[j], 1e-8, 30);
    i = j + 1;
  }
  if (!any_valid) throw EmptyDomainError("profile has no valid samples to integrate");
  return total;
}

}  // namespace telheat
