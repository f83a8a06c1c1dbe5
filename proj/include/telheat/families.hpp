#pragma once
// Self-similar solution families of a damped wave-type heat conduction model
// and its two-dimensional and source-term variants. Each family evaluates a
// similarity profile f(eta) built from the special functions in specfun.hpp,
// together with the reduced ordinary differential equation it satisfies, the
// corresponding space-time field, and a mass integral over the profile.

#include <functional>
#include <vector>

#include "telheat/complexops.hpp"
#include "telheat/errors.hpp"

namespace telheat {

// Width of the masked band placed around every singular point of a reduced
// equation when profiles are sampled; samples inside are never extrapolated.
inline constexpr double kSingularBand = 1e-3;

// Earliest admissible time for field evaluation; the 1/t damping of the
// underlying equation makes t = 0 a structural singularity.
inline constexpr double kTMin = 1.0;

// Physical and ansatz parameters shared by all solution families.
struct ModelParams {
  double epsilon = 1.0;  // inverse squared propagation speed; must be positive
  double a = 0.0;        // damping strength
  double alpha = 1.0;    // decay exponent of the similarity ansatz
  double beta = 1.0;     // spreading exponent of the similarity ansatz
  double D = 0.0;        // stiffness of the quadratic (oscillator) source
  double q = 0.0;        // charge of the inverse-linear source
  double c1 = 1.0;       // weight of the first fundamental solution
  double c2 = 0.0;       // weight of the second fundamental solution
};

// Half the damping-to-inertia ratio, a / (2 epsilon): the one combination of
// parameters that controls every exponent in the closed forms below.
double damping_ratio(const ModelParams& p);

enum class Family {
  Compact1D,          // compactly supported polynomial-type profile
  Hyper1D,            // odd hypergeometric profile with a cone jump
  LegendreRegular,    // growing solution built from Legendre P
  LegendreIrregular,  // second-kind solution built from Legendre Q
  TwoD_L1_beta1,      // planar diagonal profile, unit spreading exponent
  TwoD_L1_beta2,      // planar diagonal profile, quadratic spreading
  TwoD_Radial,        // planar radial profile
  SourceHarmonic,     // quadratic-potential source term
  SourceCoulomb,      // inverse-linear-potential source term
};

// Region restriction for sampling. Natural admits every region the family
// defines; Inner keeps samples between the innermost singular points; Left and
// Right keep the unbounded regions beyond the outermost singular points. For
// Compact1D, Left/Right select the mirrored exterior solution instead of the
// zero extension.
enum class Branch { Natural, Inner, Left, Right };

struct FamilySpec {
  Family family = Family::Compact1D;
  ModelParams params;
  Branch branch = Branch::Natural;
};

// Classification of one profile sample.
enum class SampleState {
  Valid,          // evaluated; the value participates in audits
  ZeroExtension,  // outside a compact support; the value is exactly zero
  Excluded,       // masked (singular band, branch restriction, or evaluation
                  // failure); carries no value
};

// A sampled similarity profile. The three arrays are index-aligned; eta is
// strictly increasing. Excluded entries hold value 0 as a placeholder.
struct Profile {
  FamilySpec spec;
  std::vector<double> eta;
  std::vector<Complex> value;
  std::vector<SampleState> mask;
};

// The distinct similarity reductions of the model equations.
enum class Variant { OneD, TwoD_L1, TwoD_Radial, SourceHarmonic, SourceCoulomb };

// Coefficients of the reduced equation p2(eta) f'' + p1(eta) f' + p0(eta) f = 0.
struct OdeCoefficients {
  std::function<double(double)> p2, p1, p0;
  double forced_alpha = 0.0;            // decay exponent actually in force
  std::vector<double> singular_points;  // zeros of p2 and coordinate poles
};

// Builds the reduced similarity equation for the given variant. Raises
// UniversalityError when the caller's (alpha, beta) pair is not admitted by
// the variant's exponent-matching relation; the source variants ignore the
// caller's alpha and report the value they force instead.
OdeCoefficients reduce_to_ode(const ModelParams& p, Variant variant);

// Compactly supported profile (1 - eps eta^2)_+^{a/2eps - 1}: the positive
// part inside the cone, exactly zero outside. Requires alpha = 1. Raises
// ExponentError exactly at the support edge when the exponent is negative.
double compact_profile(double eta, const ModelParams& p);

// t^{-1} compact_profile(x/t); requires t >= kTMin.
double compact_field(double x, double t, const ModelParams& p);

// Odd two-constant profile [c1 A(eta) + c2] (eps eta^2 - 1)^{a/2eps - 1},
// where A is the principal-branch antiderivative of (eps eta^2 - 1)^{-a/2eps}
// on each of the three cone intervals: inside it is evaluated through a
// hypergeometric (or elementary, when a/eps is an integer) antiderivative
// vanishing at 0; outside through the antiderivative vanishing at infinity
// whenever the integrand decays there. Requires alpha = 1.
Complex hyper_profile(double eta, const ModelParams& p);

// t^{-1} hyper_profile(x/t); requires t >= kTMin.
Complex hyper_field(double x, double t, const ModelParams& p);

struct RegularClosedForm {
  Complex value = 0.0;
  bool degenerate = false;  // true when the value is forced to exact zero
};

// Closed-form expression for the growing Legendre-type profile,
// 2 eps (sqrt(eps) eta + 1)^{a/2eps + 1} (1 + eta^2 (eps + a))
//   / [Gamma(-a/2eps - 1) (2 eps + a)],
// for the alpha = -2 family. Returns exact zero with the degenerate flag set
// when the Gamma factor in the denominator poles, which happens precisely at
// nonnegative integer a/2eps. Raises ParameterError at a = -2 eps and
// a = -eps, where the reduction behind the closed form divides by zero.
RegularClosedForm legendre_regular_closed_form(double eta, const ModelParams& p);

// Value part of legendre_regular_closed_form.
Complex legendre_regular_profile(double eta, const ModelParams& p);

// Second-kind profile Q_{a/2eps-1}^{a/2eps+2}(sqrt(eps) eta) multiplied by
// (eps eta^2 - 1)^{a/4eps + 1}, on principal branches.
Complex legendre_irregular_profile(double eta, const ModelParams& p);

// Product evaluator for the alpha = -2 family: P (or Q, when irregular) of
// subscript a/2eps - 1 and superscript a/2eps + 2 at sqrt(eps) eta, times the
// principal power (eps eta^2 - 1)^{a/4eps + 1}. This is the evaluator that
// satisfies the reduced equation for every admissible a; the closed form
// above reproduces it only at special parameter values.
Complex legendre_family_profile(double eta, const ModelParams& p, bool irregular);

// t^{+2} legendre_family_profile(x/t); requires t >= kTMin. Grows in time
// (the family has decay exponent -2).
Complex legendre_field(double x, double t, const ModelParams& p, bool irregular);

struct WaveFactorization {
  Complex q_factor = 0.0;  // t^2 Q_1^4(sqrt(eps) x / t) eps^2 / t^4
  double u_plus = 0.0;     // (x + c t)^2, a travelling wave moving left
  double u_minus = 0.0;    // (x - c t)^2, a travelling wave moving right
};

// Splits the irregular field at a = 4 eps into a product of two quadratic
// travelling waves with speed c = 1/sqrt(eps) and a bounded factor; the
// product of the three members equals legendre_field(x, t, irregular=true).
// Raises PreconditionError unless a = 4 eps (and t >= kTMin).
WaveFactorization travelling_wave_factorization(double x, double t, const ModelParams& p);

// Degree of the Legendre pair for the planar diagonal profile:
// [sqrt((-4 alpha + 4 - 4 alpha^2) eps^2 + 4 a (alpha - 1) eps + a^2) - eps]
//   / (2 eps).
// Raises ComplexOrderError when the discriminant is negative.
double twod_l1_order(const ModelParams& p);

// Same degree specialized to the quadratic-spreading branch (alpha = -2):
// [sqrt(a^2 - 12 a eps - 4 eps^2) - eps] / (2 eps).
double twod_l1_beta2_order(const ModelParams& p);

// Planar diagonal profile for unit spreading exponent:
// (eps eta^2 - 2)^{a/4eps - 1/4} [c1 P + c2 Q]_{order}^{a/2eps - 1/2} at
// sqrt(eps/2) eta. Requires beta = 1; alpha is free subject to a real order.
Complex twod_l1_profile(double eta, const ModelParams& p);

// Planar diagonal profile for quadratic spreading; requires beta = 2 and
// alpha = -2.
Complex twod_l1_beta2_profile(double eta, const ModelParams& p);

// Planar radial profile: c1 and c2 hypergeometric branches in the variable
// 1 - eps eta^2, the second carrying the principal power
// (eps eta^2 - 1)^{(a + (1 - 2 alpha) eps) / 2eps}. Requires beta = 1 and a
// positive radial coordinate.
Complex twod_radial_profile(double eta, const ModelParams& p);

// Profile for the quadratic-potential source: even (c1) and odd (c2)
// confluent-Heun branches in eps eta^2, sharing the principal power prefactor
// (eps eta^2 - 1)^{a/2eps - 2}. The decay exponent is forced to +2.
Complex harmonic_profile(double eta, const ModelParams& p);

// Profile for the inverse-linear-potential source, in the shifted variable
// z = sqrt(eps) eta + 1: a general-Heun branch (c1) plus a second branch (c2)
// carrying the principal power z^{1 + a/2eps} and its accompanying constant
// phase. The decay exponent is forced to -1. Raises SingularityError at
// eta = 0 where the source diverges.
Complex coulomb_profile(double eta, const ModelParams& p);

// Dispatches to the family's profile evaluator (the product evaluator for the
// Legendre families); honors Branch for Compact1D's mirrored exterior.
Complex family_value(const FamilySpec& spec, double eta);

// Singular points of the family's reduced equation, sorted ascending.
std::vector<double> family_singular_points(Family family, const ModelParams& p);

// Samples the family on the given strictly increasing grid. Points within
// kSingularBand of a singular point, outside the selected branch, or where
// evaluation raises are Excluded; points outside a compact support are
// ZeroExtension; the rest are Valid.
Profile evaluate_profile(const FamilySpec& spec, const std::vector<double>& etas);

// Decay and spreading exponents in force for the family (the forced value for
// families that fix them, the caller's value otherwise).
double effective_alpha(const FamilySpec& spec);
double effective_beta(const FamilySpec& spec);

// Space-time field t^{-alpha} f(x / t^beta) with the family's effective
// exponents; for the planar families this is the y = 0 section. Requires
// t >= kTMin.
Complex field_value(const FamilySpec& spec, double x, double t);

// Planar field: diagonal families use eta = (x + y)/t^beta, the radial family
// eta = hypot(x, y)/t. Raises PreconditionError for one-dimensional families.
Complex field_value_2d(const FamilySpec& spec, double x, double y, double t);

// Integral of the real part of the profile over its valid domain, by adaptive
// quadrature (absolute tolerance 1e-8). Compact1D integrates over the exact
// intersection of the sample range with the support and raises
// NonIntegrableError when the support-edge exponent is -1 or below; accuracy
// degrades for edge exponents in (-1, 0). Other families integrate every
// contiguous run of Valid samples. Raises EmptyDomainError when the profile
// has no integrable samples.
double mass_integral(const Profile& profile);

}  // namespace telheat
