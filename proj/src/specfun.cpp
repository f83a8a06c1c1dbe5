#include "telheat/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace telheat::specfun {

namespace {

// Principal-branch power with complex exponent; real exponents delegate to
// cpow so its exact-integer and signed-zero repairs apply.
Complex cpowc(Complex base, const Complex& p) {
    if (p.imag() == 0.0) return cpow(base, p.real());
    if (base.imag() == 0.0) base = Complex(base.real(), +0.0);
    return std::pow(base, p);
}

constexpr double kIntTol = 1e-12;

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

Complex gamma_positive_half(Complex z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    Complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

Complex gamma_fn(const Complex& z) {
    if (is_nonpos_int(z)) throw PoleError("gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // Reflection formula.
        return kPi / (std::sin(kPi * z) * gamma_positive_half(1.0 - z));
    }
    return gamma_positive_half(z);
}

Complex rgamma_fn(const Complex& z) {
    if (is_nonpos_int(z)) return Complex(0.0, 0.0);
    return 1.0 / gamma_fn(z);
}

namespace {

// ---------------------------------------------------------------------------
// Gauss hypergeometric series
// ---------------------------------------------------------------------------

// Index m >= 0 when the series terminates after the z^m term, -1 otherwise.
long termination_index(const Complex& a, const Complex& b) {
    long m = -1;
    if (is_nonpos_int(a)) m = static_cast<long>(-std::llround(a.real()));
    if (is_nonpos_int(b)) {
        const long mb = static_cast<long>(-std::llround(b.real()));
        m = (m < 0) ? mb : std::min(m, mb);
    }
    return m;
}

Complex f21_series(const Complex& a, const Complex& b, const Complex& c, const Complex& z) {
    const long m = termination_index(a, b);
    if (m >= 0) {
        if (is_nonpos_int(c)) {
            const long k = static_cast<long>(-std::llround(c.real()));
            if (k < m) {
                throw ParameterError("2F1: lower-parameter pole reached before termination");
            }
        }
        Complex sum(1.0, 0.0);
        Complex term(1.0, 0.0);
        for (long k = 0; k < m; ++k) {
            const double dk = static_cast<double>(k);
            term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
            sum += term;
        }
        return sum;
    }
    if (is_nonpos_int(c)) throw ParameterError("2F1: lower-parameter pole without termination");
    if (std::abs(z) > 1.0 - kSeriesMargin + 1e-15) {
        throw DivergenceError("2F1: series argument outside convergence reach");
    }
    Complex sum(1.0, 0.0);
    Complex term(1.0, 0.0);
    int small_streak = 0;
    for (long k = 0; k < 20000; ++k) {
        const double dk = static_cast<double>(k);
        term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 1e-15 * (std::abs(sum) + 1e-300)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw DivergenceError("2F1: series failed to meet tail bound");
}

bool is_real_integer(const Complex& z) {
    return std::abs(z.imag()) <= kIntTol && is_integer(z.real());
}

// z -> z/(z-1) transformation; succeeds whenever the mapped argument is in
// reach (its series cannot hit an untriggered lower-parameter pole because c
// is unchanged).
bool try_pfaff(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
               double thresh, Complex& out) {
    const Complex w = z / (z - 1.0);
    if (std::abs(w) > thresh) return false;
    out = cpowc(1.0 - z, -a) * f21_series(a, c - b, c, w);
    return true;
}

// z -> 1-z connection formula; degenerate (logarithmic) when c-a-b is an
// integer.
bool try_one_minus_z(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
                     double thresh, Complex& out, bool& degenerate) {
    const Complex w = 1.0 - z;
    if (std::abs(w) > thresh) return false;
    const Complex cab = c - a - b;
    if (is_real_integer(cab)) {
        degenerate = true;
        return false;
    }
    const Complex coef1 = gamma_fn(cab) * rgamma_fn(c - a) * rgamma_fn(c - b);
    const Complex coef2 = gamma_fn(-cab) * rgamma_fn(a) * rgamma_fn(b);
    Complex sum(0.0, 0.0);
    if (coef1 != Complex(0.0, 0.0)) sum += coef1 * f21_series(a, b, a + b - c + 1.0, w);
    if (coef2 != Complex(0.0, 0.0)) {
        sum += coef2 * cpowc(w, cab) * f21_series(c - a, c - b, cab + 1.0, w);
    }
    out = gamma_fn(c) * sum;
    return true;
}

// z -> 1/z connection formula; degenerate when a-b is an integer. On the cut
// z > 1 the principal value below equals the limit from Im z < 0.
bool try_inverse_z(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
                   double thresh, Complex& out, bool& degenerate) {
    const Complex w = 1.0 / z;
    if (std::abs(w) > thresh) return false;
    const Complex ab = a - b;
    if (is_real_integer(ab)) {
        degenerate = true;
        return false;
    }
    const Complex coef1 = gamma_fn(-ab) * rgamma_fn(b) * rgamma_fn(c - a);
    const Complex coef2 = gamma_fn(ab) * rgamma_fn(a) * rgamma_fn(c - b);
    Complex sum(0.0, 0.0);
    if (coef1 != Complex(0.0, 0.0)) {
        sum += coef1 * cpowc(-z, -a) * f21_series(a, a - c + 1.0, ab + 1.0, w);
    }
    if (coef2 != Complex(0.0, 0.0)) {
        sum += coef2 * cpowc(-z, -b) * f21_series(b, b - c + 1.0, 1.0 - ab, w);
    }
    out = gamma_fn(c) * sum;
    return true;
}

} // namespace

Complex gauss_2f1(const Complex& a, const Complex& b, const Complex& c, const Complex& z) {
    if (termination_index(a, b) >= 0) return f21_series(a, b, c, z);
    if (is_nonpos_int(c)) throw ParameterError("2F1: lower-parameter pole without termination");
    if (std::abs(z) <= 0.9) return f21_series(a, b, c, z);

    bool degenerate = false;
    Complex out;
    for (const double thresh : {0.9, 1.0 - kSeriesMargin}) {
        if (try_pfaff(a, b, c, z, thresh, out)) return out;
        if (try_one_minus_z(a, b, c, z, thresh, out, degenerate)) return out;
        if (try_inverse_z(a, b, c, z, thresh, out, degenerate)) return out;
    }
    if (degenerate) {
        throw ParameterError("2F1: reachable connection formula is degenerate (logarithmic case)");
    }
    throw DivergenceError("2F1: no transformation brings the argument within radius");
}

Complex gauss_2f1_contiguous(const Complex& a, const Complex& b, const Complex& c,
                             const Complex& z, const Complex& f_am1, const Complex& f_a) {
    if (std::abs(a) < 1e-15 || std::abs(z - 1.0) < 1e-15) {
        throw ParameterError("2F1 contiguous: a(z-1) = 0");
    }
    return -((c - a) * f_am1 + (2.0 * a - c + (b - a) * z) * f_a) / (a * (z - 1.0));
}

namespace {

// ---------------------------------------------------------------------------
// Legendre functions
// ---------------------------------------------------------------------------

double double_factorial_odd(int m) {
    // (2m-1)!! with the empty-product convention for m = 0.
    double r = 1.0;
    for (int k = 2 * m - 1; k >= 3; k -= 2) r *= static_cast<double>(k);
    return r;
}

// P_l^m for integers 0 <= m <= l by the stable upward recurrence; shared by
// both cut conventions (the Condon-Shortley phase and the cut live in the
// starting value).
Complex legendre_p_integer(int l, int m, double y, Cut cut) {
    if (m > l) return Complex(0.0, 0.0);
    Complex pmm;
    if (cut == Cut::Ferrers) {
        const double s = (m % 2 == 0) ? 1.0 : -1.0;
        pmm = s * double_factorial_odd(m) * cpow_real(1.0 - y * y, 0.5 * m);
    } else {
        pmm = double_factorial_odd(m) * cpow_real(y * y - 1.0, 0.5 * m);
    }
    if (l == m) return pmm;
    Complex pm1 = y * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pm1;
    Complex p = pm1;
    for (int k = m + 2; k <= l; ++k) {
        p = (y * (2.0 * k - 1.0) * pm1 - (k + m - 1.0) * pmm) / static_cast<double>(k - m);
        pmm = pm1;
        pm1 = p;
    }
    return p;
}

double factorial_ratio(int num_from, int den_to) {
    // num_from! / den_to! for small nonnegative integers.
    double r = 1.0;
    if (num_from >= den_to) {
        for (int k = den_to + 1; k <= num_from; ++k) r *= static_cast<double>(k);
        return r;
    }
    for (int k = num_from + 1; k <= den_to; ++k) r *= static_cast<double>(k);
    return 1.0 / r;
}

} // namespace

Complex legendre_p(double nu, double mu, double y, Cut cut) {
    if (is_integer(nu) && is_integer(mu)) {
        int l = static_cast<int>(std::llround(nu));
        int m = static_cast<int>(std::llround(mu));
        if (l < 0) l = -l - 1; // degree reflection: same function for -l-1
        if (m >= 0) return legendre_p_integer(l, m, y, cut);
        const int ma = -m;
        if (ma > l) return Complex(0.0, 0.0);
        double scale = factorial_ratio(l - ma, l + ma);
        if (cut == Cut::Ferrers && ma % 2 != 0) scale = -scale;
        return scale * legendre_p_integer(l, ma, y, cut);
    }
    if (is_integer(mu) && std::llround(mu) >= 1) {
        throw ParameterError(
            "legendre_p: representation degenerates for integer order >= 1 with "
            "non-integer degree");
    }
    const Complex ratio = (cut == Cut::Ferrers) ? cpow_real((1.0 + y) / (1.0 - y), 0.5 * mu)
                                                : cpow_real((y + 1.0) / (y - 1.0), 0.5 * mu);
    const Complex f = gauss_2f1(Complex(-nu), Complex(nu + 1.0), Complex(1.0 - mu),
                                Complex(0.5 * (1.0 - y)));
    return ratio * f * rgamma_fn(Complex(1.0 - mu));
}

namespace {

// Q_l (order 0) and its derivative at |y| > 1 (off-cut) or |y| < 1 (on-cut),
// by the shared three-term recurrence.
void legendre_q_l_and_derivative(int l, double y, bool oncut, double& ql, double& qlp) {
    const double t = std::atanh(oncut ? y : 1.0 / y);
    double q0 = t;
    double q1 = y * t - 1.0;
    if (l == 0) {
        ql = q0;
        qlp = oncut ? 1.0 / (1.0 - y * y) : -1.0 / (y * y - 1.0);
        return;
    }
    for (int k = 2; k <= l; ++k) {
        const double qk = ((2.0 * k - 1.0) * y * q1 - (k - 1.0) * q0) / static_cast<double>(k);
        q0 = q1;
        q1 = qk;
    }
    ql = q1;
    // (1 - y^2) Q_l' = l (Q_{l-1} - y Q_l), valid on both sides of the cut.
    qlp = static_cast<double>(l) * (q0 - y * q1) / (1.0 - y * y);
}

// Integer-order ladder in mu for Q, starting from orders 0 and 1.
double legendre_q_integer(int l, int m, double y, bool oncut) {
    double ql, qlp;
    legendre_q_l_and_derivative(l, y, oncut, ql, qlp);
    if (m == 0) return ql;
    const double root = std::sqrt(std::abs(1.0 - y * y));
    // Order 1: +/- sqrt(|1-y^2|) Q_l'; the sign is the Condon-Shortley phase
    // on the cut and the standard real off-cut normalization otherwise.
    double qm0 = ql;
    double qm1 = oncut ? -root * qlp : root * qlp;
    if (m == 1) return qm1;
    const double dl = static_cast<double>(l);
    for (int k = 0; k + 2 <= m; ++k) {
        const double dk = static_cast<double>(k);
        double next;
        if (oncut) {
            next = -2.0 * (dk + 1.0) * y / root * qm1 - (dl - dk) * (dl + dk + 1.0) * qm0;
        } else {
            next = -2.0 * (dk + 1.0) * y / root * qm1 + (dl - dk) * (dl + dk + 1.0) * qm0;
        }
        qm0 = qm1;
        qm1 = next;
    }
    return qm1;
}

} // namespace

Complex legendre_q(double nu, double mu, double y, Cut cut) {
    if (nu < 0.0 && is_integer(2.0 * nu)) {
        throw UndefinedError("legendre_q: not defined for negative integer or half-integer degree");
    }
    if (cut == Cut::Ferrers) {
        if (!is_integer(nu) || !is_integer(mu)) {
            throw ParameterError("legendre_q: on-cut path requires integer degree and order");
        }
        const int l = static_cast<int>(std::llround(nu));
        const int m = static_cast<int>(std::llround(mu));
        if (l < 0 || m < 0) {
            throw ParameterError("legendre_q: on-cut path requires nonnegative degree and order");
        }
        return Complex(legendre_q_integer(l, m, y, /*oncut=*/true), 0.0);
    }
    if (is_nonpos_int(Complex(nu + mu + 1.0))) {
        throw ParameterError("legendre_q: Gamma pole at degree+order+1");
    }
    if (is_integer(nu) && is_integer(mu)) {
        const int l = static_cast<int>(std::llround(nu));
        const int m = static_cast<int>(std::llround(mu));
        if (m >= 0) return Complex(legendre_q_integer(l, m, y, /*oncut=*/false), 0.0);
        const int ma = -m;
        const double scale = factorial_ratio(l - ma, l + ma);
        return Complex(scale * legendre_q_integer(l, ma, y, /*oncut=*/false), 0.0);
    }
    const Complex phase(std::cos(kPi * mu), std::sin(kPi * mu));
    const Complex pref = phase * std::pow(2.0, -nu - 1.0) * std::sqrt(kPi) *
                         gamma_fn(Complex(nu + mu + 1.0)) * rgamma_fn(Complex(nu + 1.5));
    const Complex f = gauss_2f1(Complex(0.5 * (nu + mu + 2.0)), Complex(0.5 * (nu + mu + 1.0)),
                                Complex(nu + 1.5), Complex(1.0 / (y * y)));
    return pref * cpow_real(y, -nu - mu - 1.0) * cpow_real(y * y - 1.0, 0.5 * mu) * f;
}

namespace {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// degree-n Legendre polynomial.
QuadratureRule gauss_legendre_rule(int n) {
    QuadratureRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk =
                    ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<size_t>(i)] = -x;
        rule.weights[static_cast<size_t>(i)] = w;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return rule;
}

} // namespace

double legendre_orthogonality_integral(int l1, int l2, int m) {
    if (m < 0 || l1 < m || l2 < m) {
        throw PreconditionError("legendre_orthogonality_integral: requires l1, l2 >= m >= 0");
    }
    static const QuadratureRule rule = gauss_legendre_rule(64);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double p1 = legendre_p(static_cast<double>(l1), static_cast<double>(m), x,
                                     Cut::Ferrers)
                              .real();
        const double p2 = legendre_p(static_cast<double>(l2), static_cast<double>(m), x,
                                     Cut::Ferrers)
                              .real();
        sum += rule.weights[i] * p1 * p2;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Heun functions
// ---------------------------------------------------------------------------

std::vector<double> heun_c_coefficients(const HeunCParams& p, int count) {
    if (is_integer(p.beta) && std::llround(p.beta) <= -1) {
        throw ParameterError("heun_c: recurrence degenerates for negative integer beta");
    }
    const double mu =
        0.5 * (p.alpha - p.beta - p.gamma + p.alpha * p.beta - p.beta * p.gamma) - p.eta;
    const double nu = 0.5 * (p.alpha + p.beta + p.gamma + p.alpha * p.gamma + p.beta * p.gamma) +
                      p.delta + p.eta;
    std::vector<double> c(static_cast<size_t>(count) + 1, 0.0);
    c[0] = 1.0;
    double prev = 0.0; // c_{-1}
    for (int k = 0; k < count; ++k) {
        const double dk = static_cast<double>(k);
        const double num = c[static_cast<size_t>(k)] *
                               (dk * (dk - 1.0) + dk * (p.beta + p.gamma + 2.0 - p.alpha) - mu) +
                           prev * (p.alpha * (dk - 1.0) + mu + nu);
        prev = c[static_cast<size_t>(k)];
        c[static_cast<size_t>(k) + 1] = num / ((dk + 1.0) * (dk + p.beta + 1.0));
    }
    return c;
}

double heun_c(const HeunCParams& p, double z) {
    if (std::abs(z) >= 1.0 - kSeriesMargin) {
        throw DivergenceError("heun_c: argument outside series radius");
    }
    if (is_integer(p.beta) && std::llround(p.beta) <= -1) {
        throw ParameterError("heun_c: recurrence degenerates for negative integer beta");
    }
    const double mu =
        0.5 * (p.alpha - p.beta - p.gamma + p.alpha * p.beta - p.beta * p.gamma) - p.eta;
    const double nu = 0.5 * (p.alpha + p.beta + p.gamma + p.alpha * p.gamma + p.beta * p.gamma) +
                      p.delta + p.eta;
    double cm1 = 0.0;
    double c0 = 1.0;
    double zk = 1.0;
    double sum = 1.0;
    int small_streak = 0;
    for (int k = 0; k < 5000; ++k) {
        const double dk = static_cast<double>(k);
        const double c1 = (c0 * (dk * (dk - 1.0) + dk * (p.beta + p.gamma + 2.0 - p.alpha) - mu) +
                           cm1 * (p.alpha * (dk - 1.0) + mu + nu)) /
                          ((dk + 1.0) * (dk + p.beta + 1.0));
        cm1 = c0;
        c0 = c1;
        zk *= z;
        const double term = c1 * zk;
        sum += term;
        if (std::abs(term) <= 1e-16 * (std::abs(sum) + 1e-300)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw DivergenceError("heun_c: series failed to converge");
}

std::vector<double> heun_g_coefficients(const HeunGParams& p, int count) {
    if (p.a == 0.0) throw ParameterError("heun_g: singularity location a must be nonzero");
    if (is_nonpos_int(p.gamma)) {
        throw ParameterError("heun_g: recurrence degenerates for nonpositive integer gamma");
    }
    const double eps = p.alpha + p.beta - p.gamma - p.delta + 1.0;
    std::vector<double> c(static_cast<size_t>(count) + 1, 0.0);
    c[0] = 1.0;
    double prev = 0.0; // c_{-1}
    for (int j = 0; j < count; ++j) {
        const double dj = static_cast<double>(j);
        const double Qj = dj * ((dj - 1.0 + p.gamma) * (1.0 + p.a) + p.a * p.delta + eps);
        const double Pj = (dj - 1.0 + p.alpha) * (dj - 1.0 + p.beta);
        const double Rj = p.a * (dj + 1.0) * (dj + p.gamma);
        const double num = (Qj + p.q) * c[static_cast<size_t>(j)] - Pj * prev;
        prev = c[static_cast<size_t>(j)];
        c[static_cast<size_t>(j) + 1] = num / Rj;
    }
    return c;
}

double heun_g(const HeunGParams& p, double z) {
    if (p.a == 0.0) throw ParameterError("heun_g: singularity location a must be nonzero");
    const double radius = std::min(1.0, std::abs(p.a));
    if (std::abs(z) >= radius - kSeriesMargin) {
        throw DivergenceError("heun_g: argument outside series radius");
    }
    if (is_nonpos_int(p.gamma)) {
        throw ParameterError("heun_g: recurrence degenerates for nonpositive integer gamma");
    }
    const double eps = p.alpha + p.beta - p.gamma - p.delta + 1.0;
    double cm1 = 0.0;
    double c0 = 1.0;
    double zk = 1.0;
    double sum = 1.0;
    int small_streak = 0;
    for (int j = 0; j < 5000; ++j) {
        const double dj = static_cast<double>(j);
        const double Qj = dj * ((dj - 1.0 + p.gamma) * (1.0 + p.a) + p.a * p.delta + eps);
        const double Pj = (dj - 1.0 + p.alpha) * (dj - 1.0 + p.beta);
        const double Rj = p.a * (dj + 1.0) * (dj + p.gamma);
        const double c1 = ((Qj + p.q) * c0 - Pj * cm1) / Rj;
        cm1 = c0;
        c0 = c1;
        zk *= z;
        const double term = c1 * zk;
        sum += term;
        if (std::abs(term) <= 1e-16 * (std::abs(sum) + 1e-300)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw DivergenceError("heun_g: series failed to converge");
}

} // namespace telheat::specfun
