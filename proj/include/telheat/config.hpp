#pragma once

// Flat key=value run configuration and the command implementations behind
// the command-line front end: CSV profile/field emission, audit suites, and
// named plot-data presets. All output is deterministic and locale-independent
// (17-significant-digit values, LF line endings, fixed column order).

#include <string>

#include "telheat/pdeoracle.hpp"

namespace telheat {

// Half-open sampling description of one axis: count nodes from min to max
// inclusive. Ranges must be non-degenerate (min < max) with count >= 2.
struct RangeSpec {
    double min = 0.0;
    double max = 1.0;
    int count = 2;
};

// What the value columns carry: both parts, the real part only, or the
// magnitude (in the value_re column).
enum class Projection { Complex, RealPart, Magnitude };

// One run's worth of settings. Populated from a flat key=value file and/or
// repeated key=value overrides; unknown keys are rejected.
struct RunConfig {
    std::string family;  // canonical family name; empty until chosen
    ModelParams params;
    Branch branch = Branch::Natural;
    RangeSpec eta_range{-2.0, 2.0, 401};
    RangeSpec x_range{-2.0, 2.0, 101};
    RangeSpec t_range{1.0, 2.0, 3};
    Projection projection = Projection::Complex;
    ToleranceProfile tolerances;
    std::string suite = "all";
};

// Maps a family name (canonical or common alias, case-insensitive) to the
// family enum. Raises ConfigError for unknown names.
Family parse_family(const std::string& name);

// Applies one key=value setting. Known keys: family, branch, projection,
// suite, epsilon, a, alpha, beta, D, q, c1, c2, eta_min/eta_max/eta_count,
// x_min/x_max/x_count, t_min/t_max/t_count, tol_ode, tol_series,
// tol_conservation, tol_quadrature. Raises ConfigError for unknown keys or
// malformed values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Reads a flat key=value file ('#' comment lines and blank lines allowed)
// and applies every setting in order. Raises ConfigError on unreadable files
// or malformed lines.
void load_config_file(RunConfig& cfg, const std::string& path);

// Builds the family spec for the configured run. Raises ConfigError when no
// family was chosen.
FamilySpec spec_of(const RunConfig& cfg);

// Similarity-profile CSV: a parameter header comment, optional note
// comments, the column header eta,value_re,value_im,mask, then one row per
// sample. Masked rows carry empty value fields. The growing Legendre family
// is emitted through its closed form, with a header flag when the closed
// form is degenerate (identically zero).
std::string cmd_profile(const RunConfig& cfg);

// Space-time field CSV with columns x,t,value_re,value_im,mask; rows grouped
// by t (outer) then x (inner). Requires t_range.min >= 1.
std::string cmd_field(const RunConfig& cfg);

// Runs the named audit suite (specfun, ode, scaling, conservation, oracle,
// or all) and collects one report line per audit into `report`. Returns 0
// when no line fails (warnings allowed), 1 otherwise.
int cmd_verify(const RunConfig& cfg, std::string& report);

// Emits the plot-ready data of one named preset (fig1..fig10), reproducing
// the captioned parameter sets. Raises ConfigError for unknown names.
std::string cmd_preset(const std::string& name);

}  // namespace telheat
