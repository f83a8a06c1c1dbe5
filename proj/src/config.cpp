#include "telheat/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <utility>
#include <vector>

namespace telheat {
namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_real(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError("config: key '" + key + "' needs a real number, got '" + value + "'");
    return out;
}

int parse_count(const std::string& key, const std::string& value) {
    int out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError("config: key '" + key + "' needs an integer, got '" + value + "'");
    return out;
}

Branch parse_branch(const std::string& value) {
    const std::string v = lower(value);
    if (v == "natural") return Branch::Natural;
    if (v == "inner") return Branch::Inner;
    if (v == "left") return Branch::Left;
    if (v == "right") return Branch::Right;
    throw ConfigError("config: unknown branch '" + value + "'");
}

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Natural: return "natural";
        case Branch::Inner: return "inner";
        case Branch::Left: return "left";
        case Branch::Right: return "right";
    }
    return "natural";
}

Projection parse_projection(const std::string& value) {
    const std::string v = lower(value);
    if (v == "complex") return Projection::Complex;
    if (v == "real-part") return Projection::RealPart;
    if (v == "magnitude") return Projection::Magnitude;
    throw ConfigError("config: unknown projection '" + value + "'");
}

const char* projection_name(Projection p) {
    switch (p) {
        case Projection::Complex: return "complex";
        case Projection::RealPart: return "real-part";
        case Projection::Magnitude: return "magnitude";
    }
    return "complex";
}

void validate_range(const RangeSpec& r, const char* axis) {
    if (!(r.min < r.max))
        throw ConfigError(std::string("config: ") + axis + " range is degenerate");
    if (r.count < 2)
        throw ConfigError(std::string("config: ") + axis + " count must be at least 2");
}

std::string params_header(const RunConfig& cfg, const FamilySpec& spec) {
    const ModelParams& p = spec.params;
    std::string out = "# family=" + std::string(family_name(spec.family)) +
                      " eps=" + format_shortest(p.epsilon) + " a=" + format_shortest(p.a) +
                      " alpha=" + format_shortest(effective_alpha(spec)) +
                      " beta=" + format_shortest(effective_beta(spec)) +
                      " c1=" + format_shortest(p.c1) + " c2=" + format_shortest(p.c2);
    if (spec.family == Family::SourceHarmonic) out += " D=" + format_shortest(p.D);
    if (spec.family == Family::SourceCoulomb) out += " q=" + format_shortest(p.q);
    out += std::string(" branch=") + branch_name(spec.branch) +
           " projection=" + projection_name(cfg.projection);
    return out;
}

const char* mask_word(SampleState state) {
    switch (state) {
        case SampleState::Valid: return "valid";
        case SampleState::ZeroExtension: return "zero";
        case SampleState::Excluded: return "excluded";
    }
    return "excluded";
}

// Renders the two value columns under the chosen projection; excluded
// samples carry empty fields.
std::pair<std::string, std::string> value_fields(Complex value, SampleState state,
                                                 Projection projection) {
    if (state == SampleState::Excluded) return {"", ""};
    switch (projection) {
        case Projection::Complex:
            return {format_g17(value.real()), format_g17(value.imag())};
        case Projection::RealPart:
            return {format_g17(value.real()), ""};
        case Projection::Magnitude:
            return {format_g17(std::abs(value)), ""};
    }
    return {"", ""};
}

struct ProfileRows {
    std::vector<std::string> rows;
    bool any_valid = false;
    bool degenerate = false;  // closed-form path reported an identically-zero profile
};

ProfileRows profile_rows(const FamilySpec& spec, const RangeSpec& range,
                         Projection projection, const std::string& prefix) {
    validate_range(range, "eta");
    const std::vector<double> etas = linspace(range.min, range.max, range.count);
    ProfileRows out;
    out.rows.reserve(etas.size());

    std::vector<Complex> values(etas.size(), Complex(0.0, 0.0));
    std::vector<SampleState> states(etas.size(), SampleState::Excluded);
    if (spec.family == Family::LegendreRegular) {
        // the growing family's profile is emitted through its closed form
        const std::vector<double> sings = family_singular_points(spec.family, spec.params);
        for (size_t i = 0; i < etas.size(); ++i) {
            bool banded = false;
            for (double s : sings) banded = banded || std::abs(etas[i] - s) < kSingularBand;
            if (banded) continue;
            try {
                const RegularClosedForm cf = legendre_regular_closed_form(etas[i], spec.params);
                if (!std::isfinite(cf.value.real()) || !std::isfinite(cf.value.imag())) continue;
                values[i] = cf.value;
                states[i] = SampleState::Valid;
                out.degenerate = out.degenerate || cf.degenerate;
            } catch (const Error&) {
                // leave the sample excluded
            }
        }
    } else {
        const Profile prof = evaluate_profile(spec, etas);
        values = prof.value;
        states = prof.mask;
    }

    for (size_t i = 0; i < etas.size(); ++i) {
        const auto [re, im] = value_fields(values[i], states[i], projection);
        out.rows.push_back(prefix + format_g17(etas[i]) + "," + re + "," + im + "," +
                           mask_word(states[i]));
        out.any_valid = out.any_valid || states[i] != SampleState::Excluded;
    }
    return out;
}

struct PresetDef {
    const char* name;
    const char* family;
    bool is_field;
    std::vector<double> a_values;  // one per curve; single entry for fields
};

const std::vector<PresetDef>& preset_table() {
    static const std::vector<PresetDef> table = {
        {"fig1", "hyper", false, {0, 2, 4, 6}},
        {"fig2", "hyper", false, {-2, -4, -6, -8}},
        {"fig3", "hyper", false, {1, 3, 5, 7}},
        {"fig4", "hyper", false, {-1, -3, -5, -7}},
        {"fig5", "hyper", true, {4}},
        {"fig6", "legendre_regular", false, {3, -3}},
        {"fig7", "legendre_regular", false, {-8, -6}},
        {"fig8", "legendre_regular", true, {-2}},
        {"fig9", "legendre_irregular", false, {1, 2, 3, 4}},
        {"fig10", "legendre_irregular", true, {4}},
    };
    return table;
}

}  // namespace

Family parse_family(const std::string& name) {
    const std::string v = lower(trim(name));
    if (v == "compact" || v == "compact1d") return Family::Compact1D;
    if (v == "hyper" || v == "hyper1d") return Family::Hyper1D;
    if (v == "legendre_regular" || v == "legendreregular") return Family::LegendreRegular;
    if (v == "legendre_irregular" || v == "legendreirregular") return Family::LegendreIrregular;
    if (v == "twod_l1_beta1" || v == "2d_l1_beta1") return Family::TwoD_L1_beta1;
    if (v == "twod_l1_beta2" || v == "2d_l1_beta2") return Family::TwoD_L1_beta2;
    if (v == "twod_radial" || v == "2d_radial") return Family::TwoD_Radial;
    if (v == "source_harmonic" || v == "harmonic") return Family::SourceHarmonic;
    if (v == "source_coulomb" || v == "coulomb") return Family::SourceCoulomb;
    throw ConfigError("config: unknown family '" + name + "'");
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    const std::string k = trim(key);
    const std::string v = trim(value);
    if (k == "family") {
        cfg.family = family_name(parse_family(v));
    } else if (k == "branch") {
        cfg.branch = parse_branch(v);
    } else if (k == "projection") {
        cfg.projection = parse_projection(v);
    } else if (k == "suite") {
        cfg.suite = v;
    } else if (k == "epsilon") {
        cfg.params.epsilon = parse_real(k, v);
    } else if (k == "a") {
        cfg.params.a = parse_real(k, v);
    } else if (k == "alpha") {
        cfg.params.alpha = parse_real(k, v);
    } else if (k == "beta") {
        cfg.params.beta = parse_real(k, v);
    } else if (k == "D") {
        cfg.params.D = parse_real(k, v);
    } else if (k == "q") {
        cfg.params.q = parse_real(k, v);
    } else if (k == "c1") {
        cfg.params.c1 = parse_real(k, v);
    } else if (k == "c2") {
        cfg.params.c2 = parse_real(k, v);
    } else if (k == "eta_min") {
        cfg.eta_range.min = parse_real(k, v);
    } else if (k == "eta_max") {
        cfg.eta_range.max = parse_real(k, v);
    } else if (k == "eta_count") {
        cfg.eta_range.count = parse_count(k, v);
    } else if (k == "x_min") {
        cfg.x_range.min = parse_real(k, v);
    } else if (k == "x_max") {
        cfg.x_range.max = parse_real(k, v);
    } else if (k == "x_count") {
        cfg.x_range.count = parse_count(k, v);
    } else if (k == "t_min") {
        cfg.t_range.min = parse_real(k, v);
    } else if (k == "t_max") {
        cfg.t_range.max = parse_real(k, v);
    } else if (k == "t_count") {
        cfg.t_range.count = parse_count(k, v);
    } else if (k == "tol_ode") {
        cfg.tolerances.ode_tol = parse_real(k, v);
    } else if (k == "tol_series") {
        cfg.tolerances.series_tol = parse_real(k, v);
    } else if (k == "tol_conservation") {
        cfg.tolerances.conservation_tol = parse_real(k, v);
    } else if (k == "tol_quadrature") {
        cfg.tolerances.quadrature_tol = parse_real(k, v);
    } else {
        throw ConfigError("config: unknown key '" + k + "'");
    }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key=value at " + path + ":" +
                              std::to_string(lineno));
        apply_setting(cfg, t.substr(0, eq), t.substr(eq + 1));
    }
}

FamilySpec spec_of(const RunConfig& cfg) {
    if (cfg.family.empty()) throw ConfigError("config: no family chosen");
    FamilySpec spec{parse_family(cfg.family), cfg.params, cfg.branch};
    // families with forced exponents override whatever the config carries
    spec.params.alpha = effective_alpha(spec);
    spec.params.beta = effective_beta(spec);
    return spec;
}

std::string cmd_profile(const RunConfig& cfg) {
    const FamilySpec spec = spec_of(cfg);
    const ProfileRows rows = profile_rows(spec, cfg.eta_range, cfg.projection, "");
    std::string out = params_header(cfg, spec) + "\n";
    if (rows.degenerate) out += "# degenerate: closed form identically zero\n";
    if (!rows.any_valid) out += "# note: no admissible samples\n";
    out += "eta,value_re,value_im,mask\n";
    for (const std::string& row : rows.rows) out += row + "\n";
    return out;
}

std::string cmd_field(const RunConfig& cfg) {
    const FamilySpec spec = spec_of(cfg);
    validate_range(cfg.x_range, "x");
    validate_range(cfg.t_range, "t");
    if (cfg.t_range.min < kTMin)
        throw ConfigError("config: t range must start at 1 or later");
    const double alpha = effective_alpha(spec);
    const double beta = effective_beta(spec);
    const std::vector<double> xs = linspace(cfg.x_range.min, cfg.x_range.max, cfg.x_range.count);
    const std::vector<double> ts = linspace(cfg.t_range.min, cfg.t_range.max, cfg.t_range.count);

    std::string out = params_header(cfg, spec) + "\n";
    out += "x,t,value_re,value_im,mask\n";
    for (double t : ts) {
        const double scale = std::pow(t, -alpha);
        const double tb = std::pow(t, beta);
        std::vector<double> etas(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) etas[i] = xs[i] / tb;
        const Profile prof = evaluate_profile(spec, etas);
        for (size_t i = 0; i < xs.size(); ++i) {
            const auto [re, im] =
                value_fields(scale * prof.value[i], prof.mask[i], cfg.projection);
            out += format_g17(xs[i]) + "," + format_g17(t) + "," + re + "," + im + "," +
                   mask_word(prof.mask[i]) + "\n";
        }
    }
    return out;
}

int cmd_verify(const RunConfig& cfg, std::string& report) {
    std::vector<AuditLine> lines;
    if (cfg.suite == "oracle") {
        lines = oracle_suite(cfg.tolerances);
    } else if (cfg.suite == "all") {
        lines = run_suite("all", cfg.tolerances);
        const std::vector<AuditLine> oracle = oracle_suite(cfg.tolerances);
        lines.insert(lines.end(), oracle.begin(), oracle.end());
    } else {
        lines = run_suite(cfg.suite, cfg.tolerances);
    }
    report.clear();
    bool failed = false;
    for (const AuditLine& line : lines) {
        report += to_string(line) + "\n";
        failed = failed || line.status == AuditLine::Status::Fail;
    }
    return failed ? 1 : 0;
}

std::string cmd_preset(const std::string& name) {
    for (const PresetDef& def : preset_table()) {
        if (name != def.name) continue;
        RunConfig cfg;
        cfg.family = def.family;
        if (def.is_field) {
            cfg.params.a = def.a_values.front();
            cfg.x_range = {-3.0, 3.0, 241};
            cfg.t_range = {1.0, 3.0, 5};
            return "# preset=" + std::string(def.name) + "\n" + cmd_field(cfg);
        }
        cfg.eta_range = {-2.0, 2.0, 801};
        std::string curves;
        for (double a : def.a_values) {
            if (!curves.empty()) curves += ";";
            curves += "a=" + format_shortest(a);
        }
        std::string header = "# preset=" + std::string(def.name) + "\n# family=" +
                             std::string(def.family) + " eps=1 curves=" + curves +
                             " projection=complex\n";
        std::string body;
        for (double a : def.a_values) {
            RunConfig run = cfg;
            run.params.a = a;
            const std::string label = "a=" + format_shortest(a);
            const ProfileRows rows =
                profile_rows(spec_of(run), run.eta_range, run.projection, label + ",");
            if (rows.degenerate)
                header += "# degenerate: curve " + label + " closed form identically zero\n";
            if (!rows.any_valid)
                header += "# note: curve " + label + " has no admissible samples\n";
            for (const std::string& row : rows.rows) body += row + "\n";
        }
        return header + "curve,eta,value_re,value_im,mask\n" + body;
    }
    throw ConfigError("config: unknown preset '" + name + "'");
}

}  // namespace telheat
