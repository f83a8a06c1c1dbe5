#pragma once
// Finite-difference time-marching oracle for the one-dimensional model
// equation eps T_tt + (a/t) T_t = T_xx: evolve analytic initial data forward
// with an explicit leapfrog scheme and measure the drift from the analytic
// self-similar field. The marching loop touches no special functions, so the
// comparison is an end-to-end check independent of every closed form.

#include <functional>
#include <string>
#include <vector>

#include "telheat/families.hpp"
#include "telheat/verify.hpp"

namespace telheat {

// Uniform space-time discretization. The time step is derived, not stored:
// dt = cfl * sqrt(eps) * dx, rounded down so the march lands exactly on t1.
struct GridSpec {
  double x_min = -4.0;
  double x_max = 4.0;
  int nx = 256;      // number of nodes; at least 64
  double t0 = 1.0;   // start time; at least kTMin
  double t1 = 2.0;   // end time; greater than t0
  double cfl = 0.5;  // Courant number, in (0, 1)
};

// Analytic state at t0: the field and its time derivative, per node.
struct InitialData {
  std::vector<double> value;
  std::vector<double> rate;
};

// How the two domain-edge nodes are filled during the march.
enum class BoundaryMode {
  ZeroBeyondCone,  // homogeneous Dirichlet; the domain must contain the
                   // support cone at t1 plus a safety margin
  AnalyticTrace,   // Dirichlet data from the analytic field at each step
};

struct EvolutionResult {
  std::vector<double> x;               // node coordinates
  std::vector<double> initial_values;  // T at t0
  std::vector<double> final_values;    // T at t1
  // Relative errors against the analytic field at t1 over the comparison
  // window (5 cells around each ray |x| = t1/sqrt(eps) are excluded). NaN for
  // raw-data evolutions with no analytic reference.
  double rel_l2_error = std::numeric_limits<double>::quiet_NaN();
  double rel_max_error = std::numeric_limits<double>::quiet_NaN();
  int steps = 0;  // time advances taken
};

// Node coordinates of the grid. Raises PreconditionError when the grid is
// malformed (nx < 64, x_max <= x_min, t0 < kTMin, or t1 <= t0).
std::vector<double> grid_nodes(const GridSpec& grid);

// Analytic state of the family's field at t0 on the grid: T = t^-alpha f(x/t)
// and dT/dt = -alpha t^(-alpha-1) f - x t^(-alpha-2) f', with f' by the
// analytic formula for the compact family and 4th-order differencing in the
// similarity variable otherwise. Raises SmoothnessError when the compact
// support-edge exponent a/2eps - 1 is below 2 (the field is then not smooth
// enough at the edge for a clean second-order march), or when a cone-singular
// family's ray |x| = t/sqrt(eps) crosses the domain during [t0, t1];
// PreconditionError for planar and source families (the oracle is 1D and
// source-free).
InitialData initial_data(const FamilySpec& spec, const GridSpec& grid);

// Explicit leapfrog march of raw initial data from t0 to t1. The damping term
// is discretized time-centred, (a/t_n)(T^{n+1} - T^{n-1})/(2 dt); the first
// step is seeded by the Taylor expansion
// T^1 = T^0 + dt Tdot0 + (dt^2 / 2 eps)(T0_xx - (a/t0) Tdot0). Edge nodes are
// held at zero when no trace is given, else at trace(x_edge, t). Raises
// CFLError when cfl is outside (0, 1); BlowupError when max|T| exceeds 10^6
// times the initial maximum. Error fields of the result stay NaN.
EvolutionResult evolve(const InitialData& init, const ModelParams& params, const GridSpec& grid,
                       const std::function<double(double, double)>& trace = nullptr);

// Family-level march: builds the initial data, runs evolve with the requested
// boundary mode, and fills the error fields against the analytic field at t1.
// ZeroBeyondCone requires the compactly supported family and a domain that
// contains the cone at t1 plus a 5-cell margin (PreconditionError otherwise);
// AnalyticTrace draws boundary values from the family field.
EvolutionResult evolve_family(const FamilySpec& spec, const GridSpec& grid,
                              BoundaryMode mode = BoundaryMode::ZeroBeyondCone);

// Least-squares slope of log(rel_l2_error) against log(dx) over a refinement
// chain. Requires at least 3 grids (PreconditionError). Returns NaN when any
// chain error sits at the rounding floor (<= 1e-12): the scheme then
// reproduces the solution exactly and no order is measurable.
double convergence_order(const FamilySpec& spec, const std::vector<GridSpec>& grids,
                         BoundaryMode mode = BoundaryMode::ZeroBeyondCone);

// Relative drift of the trapezoid-rule integral of T dx between the initial
// and final states of an evolution. Raises PreconditionError unless the
// family's effective decay exponent is 1 (the conserving ansatz).
double mass_drift(const FamilySpec& spec, const EvolutionResult& result);

// Delimited text dump: one header line with the grid, then one row per node
// with x, numeric value, analytic value, and absolute error.
std::string comparison_csv(const FamilySpec& spec, const GridSpec& grid,
                           const EvolutionResult& result);

// Evolution-based audit lines (the "oracle" suite of the verification
// report): final-state accuracy, convergence order, mass conservation, the
// exactly-reproduced quadratic patch, a measured patch order, and a
// domain-of-dependence check. Deterministic.
std::vector<AuditLine> oracle_suite(const ToleranceProfile& tol = {});

}  // namespace telheat
