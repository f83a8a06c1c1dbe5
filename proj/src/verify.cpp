#include "telheat/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "telheat/specfun.hpp"

namespace telheat {
namespace {

constexpr double kTinyDenom = 1e-300;

// Adaptive Simpson quadrature with Richardson extrapolation, used by the
// conservation audits (self-contained so the audits stay independent of the
// mass_integral implementation they cross-check).
double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double split = left + right;
    if (depth <= 0 || std::abs(split - whole) <= 15.0 * tol)
        return split + (split - whole) / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 30);
}

// Relative spread statistics of a list of nominally equal quantities.
ResidualReport spread_report(const std::vector<double>& values) {
    ResidualReport report;
    report.sample_count = static_cast<int>(values.size());
    const double mx = *std::max_element(values.begin(), values.end());
    const double mn = *std::min_element(values.begin(), values.end());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                        static_cast<double>(values.size());
    const double denom = std::max(std::abs(mean), kTinyDenom);
    report.max_rel_residual = (mx - mn) / denom;
    double sumsq = 0.0;
    for (double v : values) {
        const double d = (v - mean) / denom;
        sumsq += d * d;
    }
    report.l2_rel_residual = std::sqrt(sumsq / static_cast<double>(values.size()));
    return report;
}

double hyp_case_s(HypCase c) {
    switch (c) {
        case HypCase::Zero: return 0.0;
        case HypCase::One: return 1.0;
        case HypCase::Half: return 0.5;
        case HypCase::ThreeHalves: return 1.5;
        case HypCase::MinusOne: return -1.0;
        case HypCase::MinusHalf: return -0.5;
    }
    throw ConfigError("unknown closed-form case");
}

// Closed-form value of F(s, 1/2; 3/2; z) for the anchor cases. Sets ok=false
// where the chosen transcription has no finite value.
double closed_case_value(HypCase c, ClosedFormVariant variant, double z, bool& ok) {
    const double w = std::sqrt(std::abs(z));
    switch (c) {
        case HypCase::Zero:
            return 1.0;
        case HypCase::One:
            if (z == 0.0) return 1.0;
            return z > 0.0 ? std::atanh(w) / w : std::atan(w) / w;
        case HypCase::Half:
            if (variant == ClosedFormVariant::Printed) {
                if (z <= 0.0) { ok = false; return 0.0; }
                return std::acos(w) / w;
            }
            if (z == 0.0) return 1.0;
            return z > 0.0 ? std::asin(w) / w : std::asinh(w) / w;
        case HypCase::ThreeHalves:
            if (z >= 1.0) { ok = false; return 0.0; }
            return 1.0 / std::sqrt(1.0 - z);
        case HypCase::MinusOne:
            return 1.0 - z / 3.0;
        case HypCase::MinusHalf:
            if (variant == ClosedFormVariant::Printed) {
                if (z <= 0.0 || z >= 1.0) { ok = false; return 0.0; }
                return 0.5 * ((0.5 - z) * std::asin(w) / w -
                              (z - 1.0) / (2.0 * std::sqrt(1.0 - z)));
            }
            if (z == 0.0) return 1.0;
            {
                const double arc = z > 0.0 ? std::asin(w) / w : std::asinh(w) / w;
                return 0.5 * arc + 0.5 * std::sqrt(1.0 - z);
            }
    }
    ok = false;
    return 0.0;
}

std::string render_params(const ModelParams& p, Family f) {
    std::string s = "eps=" + format_shortest(p.epsilon) + ",a=" + format_shortest(p.a) +
                    ",alpha=" + format_shortest(p.alpha) + ",beta=" + format_shortest(p.beta);
    if (f == Family::SourceHarmonic) s += ",D=" + format_shortest(p.D);
    if (f == Family::SourceCoulomb) s += ",q=" + format_shortest(p.q);
    return s;
}

AuditLine line_of(std::string family, std::string params, std::string metric, double value,
                  double threshold, bool warn_only = false) {
    AuditLine line;
    line.family = std::move(family);
    line.params = std::move(params);
    line.metric = std::move(metric);
    line.value = value;
    line.threshold = threshold;
    line.status = value <= threshold
                      ? AuditLine::Status::Pass
                      : (warn_only ? AuditLine::Status::Warn : AuditLine::Status::Fail);
    return line;
}

// The nine families with their reference parameters and residual-audit grids.
struct SuiteCase {
    Family family;
    ModelParams params;
    std::vector<double> grid;
};

std::vector<double> join(std::vector<double> head, const std::vector<double>& mid,
                         const std::vector<double>& tail = {}) {
    head.insert(head.end(), mid.begin(), mid.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

std::vector<SuiteCase> default_cases() {
    std::vector<SuiteCase> cases;
    cases.push_back({Family::Compact1D, {.epsilon = 1, .a = 4, .alpha = 1},
                     linspace(-0.99, 0.99, 1000)});
    cases.push_back({Family::Hyper1D, {.epsilon = 1, .a = 4, .alpha = 1},
                     join(linspace(-4.0, -1.06, 250), linspace(-0.95, 0.95, 500),
                          linspace(1.06, 4.0, 250))});
    cases.push_back({Family::LegendreRegular, {.epsilon = 1, .a = -2, .alpha = -2},
                     linspace(1.01, 5.0, 1000)});
    cases.push_back({Family::LegendreIrregular, {.epsilon = 1, .a = 4, .alpha = -2},
                     join(linspace(-0.94, 0.94, 500), linspace(1.06, 4.0, 500))});
    cases.push_back({Family::TwoD_L1_beta1, {.epsilon = 1, .a = 4, .alpha = 1},
                     linspace(-1.31, 1.31, 1000)});
    cases.push_back({Family::TwoD_L1_beta2, {.epsilon = 1, .a = 16, .alpha = -2, .beta = 2},
                     linspace(-1.31, 1.31, 1000)});
    cases.push_back({Family::TwoD_Radial, {.epsilon = 1, .a = 3, .alpha = 3},
                     join(linspace(0.32, 0.95, 500), linspace(1.06, 1.35, 500))});
    cases.push_back({Family::SourceHarmonic, {.epsilon = 1, .a = 1, .alpha = 2, .D = 1},
                     linspace(-0.9, 0.9, 1000)});
    cases.push_back({Family::SourceCoulomb, {.epsilon = 1, .a = 1, .alpha = -1, .q = 1},
                     linspace(-0.92, -0.08, 1000)});
    return cases;
}

std::vector<AuditLine> specfun_suite(const ToleranceProfile& tol) {
    std::vector<AuditLine> out;

    // Closed forms against the direct series on z = (0.05 k)^2, k = 0..18.
    std::vector<double> zs;
    for (int k = 0; k <= 18; ++k) {
        const double eta = 0.05 * k;
        zs.push_back(eta * eta);
    }
    struct CaseRow {
        HypCase c;
        const char* label;
        bool printed_suspect;  // the printed transcription is known-bad: WARN, not FAIL
    };
    const CaseRow rows[] = {
        {HypCase::Zero, "s=0", false},           {HypCase::One, "s=1", false},
        {HypCase::Half, "s=1/2", true},          {HypCase::ThreeHalves, "s=3/2", false},
        {HypCase::MinusOne, "s=-1", false},      {HypCase::MinusHalf, "s=-1/2", true},
    };
    for (const CaseRow& row : rows) {
        const ResidualReport adopted = closed_form_vs_series(row.c, zs, ClosedFormVariant::Adopted);
        out.push_back(line_of("specfun", std::string(row.label) + ",variant=adopted",
                              "closed_form_vs_series_max_rel", adopted.max_rel_residual,
                              tol.series_tol));
        if (row.printed_suspect) {
            const ResidualReport printed =
                closed_form_vs_series(row.c, zs, ClosedFormVariant::Printed);
            out.push_back(line_of("specfun", std::string(row.label) + ",variant=printed",
                                  "closed_form_vs_series_max_rel", printed.max_rel_residual,
                                  tol.series_tol, /*warn_only=*/true));
        }
    }

    // Three-term contiguous relation over a deterministic parameter sweep.
    {
        DeterministicRng rng(0x5eedc0ffee123ull);
        double max_resid = 0.0;
        double max_solver = 0.0;
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
            const double denom =
                std::max({std::abs(t1), std::abs(t2), std::abs(t3), kTinyDenom});
            max_resid = std::max(max_resid, std::abs(t1 + t2 + t3) / denom);
            const Complex rec = specfun::gauss_2f1_contiguous(a, b, c, z, fm, f0);
            max_solver = std::max(max_solver,
                                  std::abs(rec - fp) / std::max(std::abs(fp), kTinyDenom));
        }
        out.push_back(line_of("specfun", "sweep=120", "contiguous_relation_max_rel", max_resid,
                              1e-10));
        out.push_back(line_of("specfun", "sweep=120", "contiguous_solver_max_rel", max_solver,
                              1e-10));
    }

    // Orthogonality of the integer-order functions through degree 6.
    {
        const auto norm = [](int l, int m) {
            return 2.0 / (2.0 * l + 1.0) * std::tgamma(l + m + 1.0) / std::tgamma(l - m + 1.0);
        };
        double max_dev = 0.0;
        for (int m = 0; m <= 6; ++m)
            for (int l1 = m; l1 <= 6; ++l1)
                for (int l2 = l1; l2 <= 6; ++l2) {
                    const double integral = specfun::legendre_orthogonality_integral(l1, l2, m);
                    const double expected = (l1 == l2) ? norm(l1, m) : 0.0;
                    const double scale = std::sqrt(norm(l1, m) * norm(l2, m));
                    max_dev = std::max(max_dev, std::abs(integral - expected) / scale);
                }
        out.push_back(
            line_of("specfun", "l<=6", "legendre_orthogonality_max_rel", max_dev,
                    tol.quadrature_tol));
    }

    // Reciprocal-Gamma degeneracy: exact zero at the poles, nonzero off them.
    {
        double worst_pole = 0.0;
        for (int k = 0; k <= 10; ++k)
            worst_pole = std::max(worst_pole,
                                  std::abs(specfun::rgamma_fn(Complex(-double(k), 0.0))));
        double min_nonpole = std::numeric_limits<double>::infinity();
        for (double x : {0.5, 1.0, 2.5, -0.5, -1.5, 3.0})
            min_nonpole = std::min(min_nonpole, std::abs(specfun::rgamma_fn(Complex(x, 0.0))));
        const double value = (min_nonpole > 0.0) ? worst_pole : 1.0;
        out.push_back(line_of("specfun", "k=0..10", "gamma_pole_exact_zero", value, 0.0));
    }

    return out;
}

std::vector<AuditLine> ode_suite(const ToleranceProfile& tol) {
    std::vector<AuditLine> out;
    for (const SuiteCase& sc : default_cases()) {
        const FamilySpec spec{sc.family, sc.params, Branch::Natural};
        // h = 1e-3: large-|eta| samples amplify rounding noise through the
        // antiderivative chains at finer steps, while truncation error at
        // this step stays orders of magnitude below the tolerance
        const ResidualReport rep = ode_residual(spec, sc.grid, 1e-3);
        out.push_back(line_of(family_name(sc.family), render_params(sc.params, sc.family),
                              "ode_residual_max_rel", rep.max_rel_residual, tol.ode_tol));
    }
    return out;
}

std::vector<AuditLine> scaling_suite(const ToleranceProfile&) {
    std::vector<AuditLine> out;
    const std::vector<double> lambdas = {0.5, 2.0, 3.0};
    int idx = 0;
    for (const SuiteCase& sc : default_cases()) {
        DeterministicRng rng(0xabcde0000ull + 97ull * static_cast<unsigned long long>(idx));
        std::vector<std::pair<double, double>> points;
        const double edge = 1.0 / std::sqrt(sc.params.epsilon);
        for (int i = 0; i < 25; ++i) {
            const double t = rng.uniform(2.0, 4.0);
            double x = 0.0;
            switch (sc.family) {
                case Family::TwoD_Radial:
                    x = rng.uniform(1.27, 1.89);
                    break;
                case Family::SourceCoulomb:
                    x = rng.uniform(-3.0, -0.3);
                    break;
                case Family::SourceHarmonic:
                    x = rng.uniform(-1.8, 1.8);
                    break;
                case Family::TwoD_L1_beta1:
                    x = rng.uniform(-3.0, 3.0);
                    // keep clear of the cone, where sensitivity to the last
                    // bit of eta is amplified
                    while (std::abs(std::abs(x / t) - std::sqrt(2.0) * edge) < 5e-3)
                        x = rng.uniform(-3.0, 3.0);
                    break;
                case Family::TwoD_L1_beta2:
                    x = rng.uniform(-3.0, 3.0);  // eta = x / t^2 stays well inside
                    break;
                default:
                    x = rng.uniform(-3.0, 3.0);
                    while (std::abs(std::abs(x / t) - edge) < 5e-3) x = rng.uniform(-3.0, 3.0);
                    break;
            }
            points.emplace_back(x, t);
        }
        const FamilySpec spec{sc.family, sc.params, Branch::Natural};
        const ResidualReport rep = scaling_audit(spec, lambdas, points);
        out.push_back(line_of(family_name(sc.family), render_params(sc.params, sc.family),
                              "scaling_invariance_max_rel", rep.max_rel_residual, 1e-12));
        ++idx;
    }
    return out;
}

std::vector<AuditLine> conservation_suite(const ToleranceProfile& tol) {
    std::vector<AuditLine> out;
    const std::vector<double> ts = {1.0, 2.0, 3.0};
    {
        const ModelParams p{.epsilon = 1, .a = 4, .alpha = 1};
        const ResidualReport rep = conservation_audit(p, ts);
        out.push_back(line_of("compact", render_params(p, Family::Compact1D),
                              "mass_spread_rel", rep.max_rel_residual, tol.conservation_tol));
    }
    {
        const ModelParams p{.epsilon = 4, .a = 8, .alpha = 1};
        const ResidualReport rep = conservation_audit(p, ts);
        out.push_back(line_of("compact", render_params(p, Family::Compact1D),
                              "mass_spread_rel", rep.max_rel_residual, tol.conservation_tol));
    }
    {
        const ModelParams p{.epsilon = 1, .a = 4, .alpha = -2};
        const FamilySpec spec{Family::LegendreIrregular, p, Branch::Natural};
        const ResidualReport rep = scaled_mass_audit(spec, ts, -0.9, 0.9);
        out.push_back(line_of("legendre_irregular", render_params(p, Family::LegendreIrregular),
                              "scaled_mass_spread_rel", rep.max_rel_residual,
                              tol.conservation_tol));
    }
    return out;
}

}  // namespace

Variant family_variant(Family family) {
    switch (family) {
        case Family::Compact1D:
        case Family::Hyper1D:
        case Family::LegendreRegular:
        case Family::LegendreIrregular:
            return Variant::OneD;
        case Family::TwoD_L1_beta1:
        case Family::TwoD_L1_beta2:
            return Variant::TwoD_L1;
        case Family::TwoD_Radial:
            return Variant::TwoD_Radial;
        case Family::SourceHarmonic:
            return Variant::SourceHarmonic;
        case Family::SourceCoulomb:
            return Variant::SourceCoulomb;
    }
    throw ConfigError("family_variant: unknown family");
}

const char* family_name(Family family) {
    switch (family) {
        case Family::Compact1D: return "compact";
        case Family::Hyper1D: return "hyper";
        case Family::LegendreRegular: return "legendre_regular";
        case Family::LegendreIrregular: return "legendre_irregular";
        case Family::TwoD_L1_beta1: return "twod_l1_beta1";
        case Family::TwoD_L1_beta2: return "twod_l1_beta2";
        case Family::TwoD_Radial: return "twod_radial";
        case Family::SourceHarmonic: return "source_harmonic";
        case Family::SourceCoulomb: return "source_coulomb";
    }
    throw ConfigError("family_name: unknown family");
}

ResidualReport ode_residual(const FamilySpec& spec, const std::vector<double>& etas, double h,
                            const std::function<Complex(double)>& perturbation) {
    if (!(h > 0.0)) throw PreconditionError("ode_residual: step h must be positive");
    FamilySpec nspec = spec;
    nspec.params.alpha = effective_alpha(spec);
    nspec.params.beta = effective_beta(spec);
    const OdeCoefficients ode = reduce_to_ode(nspec.params, family_variant(spec.family));

    ResidualReport report;
    report.family = nspec;
    int masked = 0;
    double sumsq = 0.0;
    for (double eta : etas) {
        const std::vector<double> stencil = {eta - 2.0 * h, eta - h, eta, eta + h, eta + 2.0 * h};
        Profile pr;
        try {
            pr = evaluate_profile(nspec, stencil);
        } catch (const Error&) {
            ++masked;
            continue;
        }
        bool any_excluded = false, all_zero = true, all_valid = true;
        for (SampleState s : pr.mask) {
            if (s == SampleState::Excluded) any_excluded = true;
            if (s != SampleState::ZeroExtension) all_zero = false;
            if (s != SampleState::Valid) all_valid = false;
        }
        if (any_excluded || (!all_valid && !all_zero)) {
            ++masked;
            continue;
        }
        if (all_zero && !perturbation) {
            // the zero extension satisfies the equation identically
            ++report.sample_count;
            continue;
        }
        std::array<Complex, 5> v;
        for (int i = 0; i < 5; ++i) {
            v[i] = pr.value[i];
            if (perturbation) v[i] += perturbation(stencil[i]);
        }
        const Complex d2 =
            (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * h * h);
        const Complex d1 = (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
        const Complex t2 = ode.p2(eta) * d2;
        const Complex t1 = ode.p1(eta) * d1;
        const Complex t0 = ode.p0(eta) * v[2];
        const double denom = std::max({std::abs(t2), std::abs(t1), std::abs(t0), kTinyDenom});
        const double r = std::abs(t2 + t1 + t0) / denom;
        report.max_rel_residual = std::max(report.max_rel_residual, r);
        sumsq += r * r;
        ++report.sample_count;
    }
    if (report.sample_count == 0)
        throw EmptyDomainError("ode_residual: every requested sample was masked");
    report.l2_rel_residual = std::sqrt(sumsq / static_cast<double>(report.sample_count));
    report.masked_fraction =
        etas.empty() ? 0.0 : static_cast<double>(masked) / static_cast<double>(etas.size());
    return report;
}

ResidualReport closed_form_vs_series(HypCase c, const std::vector<double>& zs,
                                     ClosedFormVariant variant) {
    const double s = hyp_case_s(c);
    ResidualReport report;
    int masked = 0;
    double sumsq = 0.0;
    for (double z : zs) {
        if (std::abs(z) > 0.9) {
            ++masked;
            continue;
        }
        bool ok = true;
        const double closed = closed_case_value(c, variant, z, ok);
        if (!ok || !std::isfinite(closed)) {
            ++masked;
            continue;
        }
        const double series =
            specfun::gauss_2f1(Complex(s, 0.0), Complex(0.5, 0.0), Complex(1.5, 0.0),
                               Complex(z, 0.0))
                .real();
        const double dev = std::abs(closed - series) / std::max(std::abs(series), kTinyDenom);
        report.max_rel_residual = std::max(report.max_rel_residual, dev);
        sumsq += dev * dev;
        ++report.sample_count;
    }
    if (report.sample_count == 0)
        throw EmptyDomainError("closed_form_vs_series: every grid point was masked");
    report.l2_rel_residual = std::sqrt(sumsq / static_cast<double>(report.sample_count));
    report.masked_fraction =
        zs.empty() ? 0.0 : static_cast<double>(masked) / static_cast<double>(zs.size());
    return report;
}

ResidualReport scaling_audit(const FamilySpec& spec, const std::vector<double>& lambdas,
                             const std::vector<std::pair<double, double>>& points,
                             double alpha_override) {
    const double alpha = std::isnan(alpha_override) ? effective_alpha(spec) : alpha_override;
    const double beta = effective_beta(spec);
    ResidualReport report;
    report.family = spec;
    int masked = 0;
    int total = 0;
    double sumsq = 0.0;
    for (double lam : lambdas)
        for (const auto& [x, t] : points) {
            ++total;
            if (t < kTMin || lam * t < kTMin) {
                ++masked;
                continue;
            }
            Complex base, scaled;
            try {
                base = field_value(spec, x, t);
                scaled = field_value(spec, std::pow(lam, beta) * x, lam * t);
            } catch (const Error&) {
                ++masked;
                continue;
            }
            if (!std::isfinite(base.real()) || !std::isfinite(base.imag()) ||
                !std::isfinite(scaled.real()) || !std::isfinite(scaled.imag())) {
                ++masked;
                continue;
            }
            const double dev = std::abs(scaled * std::pow(lam, alpha) - base) /
                               std::max(std::abs(base), kTinyDenom);
            report.max_rel_residual = std::max(report.max_rel_residual, dev);
            sumsq += dev * dev;
            ++report.sample_count;
        }
    if (report.sample_count == 0)
        throw EmptyDomainError("scaling_audit: every sample was masked");
    report.l2_rel_residual = std::sqrt(sumsq / static_cast<double>(report.sample_count));
    report.masked_fraction = total ? static_cast<double>(masked) / total : 0.0;
    return report;
}

ResidualReport conservation_audit(const ModelParams& params, const std::vector<double>& ts) {
    if (params.alpha != 1.0)
        throw PreconditionError("conservation_audit: requires decay exponent alpha = 1");
    if (ts.empty()) throw EmptyDomainError("conservation_audit: no evaluation times given");
    const double edge = 1.0 / std::sqrt(params.epsilon);
    std::vector<double> integrals;
    for (double t : ts) {
        if (t < kTMin)
            throw PreconditionError("conservation_audit: time below the admissible minimum");
        const std::function<double(double)> f = [&params, t](double x) {
            try {
                return compact_field(x, t, params);
            } catch (const ExponentError&) {
                return 0.0;  // support-edge evaluation; measure zero
            }
        };
        integrals.push_back(integrate(f, -t * edge, t * edge, 1e-10));
    }
    ResidualReport report = spread_report(integrals);
    report.family = FamilySpec{Family::Compact1D, params, Branch::Natural};
    return report;
}

ResidualReport scaled_mass_audit(const FamilySpec& spec, const std::vector<double>& ts,
                                 double eta_lo, double eta_hi) {
    if (ts.empty()) throw EmptyDomainError("scaled_mass_audit: no evaluation times given");
    if (!(eta_lo < eta_hi))
        throw PreconditionError("scaled_mass_audit: window must have positive length");
    const double alpha = effective_alpha(spec);
    const double beta = effective_beta(spec);
    std::vector<double> integrals;
    for (double t : ts) {
        if (t < kTMin)
            throw PreconditionError("scaled_mass_audit: time below the admissible minimum");
        const double stretch = std::pow(t, beta);
        const std::function<double(double)> f = [&spec, t](double x) {
            return field_value(spec, x, t).real();
        };
        integrals.push_back(std::pow(t, alpha - 1.0) *
                            integrate(f, stretch * eta_lo, stretch * eta_hi, 1e-10));
    }
    ResidualReport report = spread_report(integrals);
    report.family = spec;
    return report;
}

ResidualReport factorization_audit(const ModelParams& params,
                                   const std::vector<std::pair<double, double>>& points) {
    if (std::abs(params.a - 4.0 * params.epsilon) > 1e-12)
        throw PreconditionError("factorization_audit: requires a = 4 epsilon");
    ResidualReport report;
    report.family = FamilySpec{Family::LegendreIrregular, params, Branch::Natural};
    int masked = 0;
    double sumsq = 0.0;
    for (const auto& [x, t] : points) {
        Complex direct, product;
        try {
            const WaveFactorization w = travelling_wave_factorization(x, t, params);
            direct = legendre_field(x, t, params, /*irregular=*/true);
            product = w.q_factor * w.u_plus * w.u_minus;
        } catch (const Error&) {
            ++masked;
            continue;
        }
        if (!std::isfinite(product.real()) || !std::isfinite(product.imag()) ||
            !std::isfinite(direct.real()) || !std::isfinite(direct.imag())) {
            ++masked;
            continue;
        }
        const double dev =
            std::abs(direct - product) / std::max(std::abs(direct), kTinyDenom);
        report.max_rel_residual = std::max(report.max_rel_residual, dev);
        sumsq += dev * dev;
        ++report.sample_count;
    }
    if (report.sample_count == 0)
        throw EmptyDomainError("factorization_audit: every sample was masked");
    report.l2_rel_residual = std::sqrt(sumsq / static_cast<double>(report.sample_count));
    report.masked_fraction =
        points.empty() ? 0.0 : static_cast<double>(masked) / static_cast<double>(points.size());
    return report;
}

std::string to_string(const AuditLine& line) {
    const char* status = "PASS";
    if (line.status == AuditLine::Status::Warn) status = "WARN";
    if (line.status == AuditLine::Status::Fail) status = "FAIL";
    return line.family + "|" + line.params + "|" + line.metric + "|" + format_g17(line.value) +
           "|" + format_g17(line.threshold) + "|" + status;
}

std::vector<AuditLine> run_suite(const std::string& suite, const ToleranceProfile& tol) {
    if (suite == "specfun") return specfun_suite(tol);
    if (suite == "ode") return ode_suite(tol);
    if (suite == "scaling") return scaling_suite(tol);
    if (suite == "conservation") return conservation_suite(tol);
    if (suite == "all") {
        std::vector<AuditLine> out = specfun_suite(tol);
        for (auto&& suite_out : {ode_suite(tol), scaling_suite(tol), conservation_suite(tol)})
            out.insert(out.end(), suite_out.begin(), suite_out.end());
        return out;
    }
    throw ConfigError("run_suite: unknown suite '" + suite + "'");
}

}  // namespace telheat
