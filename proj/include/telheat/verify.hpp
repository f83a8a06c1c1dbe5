#pragma once
// Independent correctness engine: finite-difference residuals of the reduced
// equations, closed-form versus series cross-checks, scaling and conservation
// audits, and the line-based report format consumed by the command-line tool.

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "telheat/families.hpp"

namespace telheat {

// Outcome of one audit over a sample set.
struct ResidualReport {
  FamilySpec family;               // audited family (defaulted for kernel audits)
  int sample_count = 0;            // samples that contributed to the statistics
  double max_rel_residual = 0.0;   // worst relative residual/deviation
  double l2_rel_residual = 0.0;    // root-mean-square relative residual
  double masked_fraction = 0.0;    // fraction of requested samples not evaluated
};

// Thresholds shared by the audit suites.
struct ToleranceProfile {
  double ode_tol = 1e-6;           // reduced-equation FD residual
  double series_tol = 1e-11;       // closed form versus direct series
  double conservation_tol = 1e-6;  // relative spread of conserved integrals
  double quadrature_tol = 1e-8;    // adaptive quadrature absolute tolerance
};

// The reduced equation each family satisfies.
Variant family_variant(Family family);

// Short stable display name of a family (used in reports and the CLI).
const char* family_name(Family family);

// Evaluates the family's reduced equation p2 f'' + p1 f' + p0 f at every
// sample that the family's masking policy marks valid, with derivatives by
// 5-point centered differences at step h. Each residual is normalized by the
// largest of the three term magnitudes. Samples whose FD stencil leaves the
// valid region, or where evaluation raises, are skipped and counted in
// masked_fraction. The optional perturbation is added to the profile before
// differencing (a negative control: a perturbed solution must fail).
// Raises EmptyDomainError when no sample contributes.
ResidualReport ode_residual(const FamilySpec& spec, const std::vector<double>& etas,
                            double h = 1e-4,
                            const std::function<Complex(double)>& perturbation = nullptr);

// The six closed-form anchor cases of the model's hypergeometric family
// F(s, 1/2; 3/2; z), labeled by s.
enum class HypCase { Zero, One, Half, ThreeHalves, MinusOne, MinusHalf };

// Which transcription of the closed form to compare against the series:
// Printed follows the source display verbatim; Adopted is the identity the
// implementation stands behind. They differ only for Half (arccos versus
// arcsin) and MinusHalf (miscopied bracket versus the arcsin identity).
enum class ClosedFormVariant { Printed, Adopted };

// Maximum relative deviation between the chosen closed form and the direct
// series over the z grid (|z| <= 0.9 expected).
ResidualReport closed_form_vs_series(HypCase c, const std::vector<double>& zs,
                                     ClosedFormVariant variant = ClosedFormVariant::Adopted);

// Checks T(lambda^beta x, lambda t) * lambda^alpha = T(x, t) over all scale
// factors and (x, t) points; alpha/beta are the family's effective exponents.
// alpha_override substitutes the compensation exponent (negative control:
// a wrong exponent must fail). Points must satisfy t >= kTMin and
// lambda*t >= kTMin.
ResidualReport scaling_audit(const FamilySpec& spec, const std::vector<double>& lambdas,
                             const std::vector<std::pair<double, double>>& points,
                             double alpha_override = std::numeric_limits<double>::quiet_NaN());

// Relative spread of the compactly-supported family's conserved integral
// \int T(x, t) dx across the time set. Raises PreconditionError unless
// params.alpha == 1.
ResidualReport conservation_audit(const ModelParams& params, const std::vector<double>& ts);

// Relative spread of the scaled integral t^{alpha-1} \int T dx over a fixed
// window in the similarity variable, the invariant for growing families.
ResidualReport scaled_mass_audit(const FamilySpec& spec, const std::vector<double>& ts,
                                 double eta_lo, double eta_hi);

// Relative deviation between the directly evaluated growing field at
// a = 4 eps and the product of its travelling-wave factors.
ResidualReport factorization_audit(const ModelParams& params,
                                   const std::vector<std::pair<double, double>>& points);

// One line of a verification report.
struct AuditLine {
  enum class Status { Pass, Warn, Fail };
  std::string family;  // family or kernel-operation label
  std::string params;  // rendered parameter list (comma-separated key=value)
  std::string metric;  // what was measured
  double value = 0.0;
  double threshold = 0.0;
  Status status = Status::Pass;
};

// Renders "family|params|metric|value|threshold|status" with 17 significant
// digits.
std::string to_string(const AuditLine& line);

// Runs a named suite: "specfun" (closed forms, recursion, orthogonality),
// "ode" (all nine families on their default grids), "scaling",
// "conservation", or "all" (everything above). The evolution-based oracle
// suite lives in the time-marching module. Raises ConfigError for unknown
// names. Deterministic: fixed grids, fixed seeds.
std::vector<AuditLine> run_suite(const std::string& suite, const ToleranceProfile& tol = {});

}  // namespace telheat
