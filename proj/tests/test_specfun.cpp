#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "telheat/specfun.hpp"

using telheat::Complex;
using telheat::DeterministicRng;
using telheat::kPi;
using namespace telheat::specfun;

namespace {

void check_close(const Complex& got, const Complex& want, double tol) {
    const double scale = 1.0 + std::abs(want);
    CHECK(std::abs(got - want) <= tol * scale);
}

void check_close(const Complex& got, double want, double tol) {
    check_close(got, Complex(want, 0.0), tol);
}

} // namespace

TEST_CASE("gamma: classical pins") {
    check_close(gamma_fn(Complex(1.0)), 1.0, 1e-13);
    check_close(gamma_fn(Complex(0.5)), std::sqrt(kPi), 1e-13);
    check_close(gamma_fn(Complex(5.0)), 24.0, 1e-13);
    check_close(gamma_fn(Complex(20.0)), 121645100408832000.0, 1e-12);
    check_close(gamma_fn(Complex(-2.5)), -0.945308720482941881, 1e-13);
    check_close(gamma_fn(Complex(0.5, 3.0)),
                Complex(0.0214456705524306461, 0.00686536483726167791), 1e-12);
}

TEST_CASE("gamma: modulus identity on the line Re z = 1") {
    const double m2 = std::norm(gamma_fn(Complex(1.0, 1.0)));
    CHECK(m2 == doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-12));
}

TEST_CASE("gamma: functional equation on random complex points") {
    DeterministicRng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Complex z(rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0));
        const Complex lhs = gamma_fn(z + 1.0);
        const Complex rhs = z * gamma_fn(z);
        check_close(lhs, rhs, 1e-11);
    }
}

TEST_CASE("gamma: poles raise") {
    CHECK_THROWS_AS(gamma_fn(Complex(0.0)), telheat::PoleError);
    CHECK_THROWS_AS(gamma_fn(Complex(-1.0)), telheat::PoleError);
    CHECK_THROWS_AS(gamma_fn(Complex(-7.0)), telheat::PoleError);
    CHECK(rgamma_fn(Complex(-3.0)) == Complex(0.0, 0.0));
}

TEST_CASE("2F1: zero upper parameter gives the constant function") {
    check_close(gauss_2f1(Complex(0.0), Complex(0.5), Complex(1.5), Complex(0.7)), 1.0, 1e-15);
}

TEST_CASE("2F1: direct-series pins") {
    check_close(gauss_2f1(Complex(1.0), Complex(0.5), Complex(1.5), Complex(0.25)),
                std::log(3.0), 1e-13);
    check_close(gauss_2f1(Complex(1.5), Complex(0.5), Complex(1.5), Complex(0.75)), 2.0, 1e-13);
}

TEST_CASE("2F1: terminating series is an exact polynomial at any argument") {
    const double b = 0.7;
    const double c = 1.3;
    for (const double z : {0.4, -3.0, 5.5, 40.0}) {
        const double direct =
            1.0 + (-2.0) * b / c * z + (-2.0) * (-1.0) * b * (b + 1.0) / (c * (c + 1.0)) / 2.0 * z * z;
        check_close(gauss_2f1(Complex(-2.0), Complex(b), Complex(c), Complex(z)), direct, 1e-14);
    }
    check_close(gauss_2f1(Complex(-2.0), Complex(b), Complex(c), Complex(0.4)),
                0.632909698996655534, 1e-14);
    // termination on a lower-parameter pole that is never reached
    check_close(gauss_2f1(Complex(-1.0), Complex(1.0), Complex(-1.0), Complex(0.3)), 1.3, 1e-14);
}

TEST_CASE("2F1: mapped-argument pins") {
    // z/(z-1) transformation region
    check_close(gauss_2f1(Complex(0.5), Complex(0.5), Complex(1.5), Complex(-3.0)),
                std::log(2.0 + std::sqrt(3.0)) / std::sqrt(3.0), 1e-12);
    check_close(gauss_2f1(Complex(0.3), Complex(0.7), Complex(2.1), Complex(-8.0)),
                0.729130280903525612, 1e-12);
    // 1-z connection region
    check_close(gauss_2f1(Complex(0.3), Complex(0.7), Complex(2.1), Complex(0.92)),
                1.16036255050954824, 1e-12);
    const double s = std::sqrt(0.93);
    check_close(gauss_2f1(Complex(0.5), Complex(0.5), Complex(1.5), Complex(0.93)),
                std::asin(s) / s, 1e-11);
    // 1/z connection region
    check_close(gauss_2f1(Complex(1.2), Complex(0.3), Complex(2.7), Complex(40.0)),
                Complex(0.311026878179037258, -0.389692122894689575), 1e-12);
}

TEST_CASE("2F1: cut values are the limit from below") {
    const Complex got = gauss_2f1(Complex(1.0), Complex(0.5), Complex(1.5), Complex(5.0));
    const Complex want(0.215204470482002019, -0.702481473104072639);
    check_close(got, want, 1e-12);
}

TEST_CASE("2F1: error taxonomy") {
    // lower-parameter pole without termination
    CHECK_THROWS_AS(gauss_2f1(Complex(0.5), Complex(0.3), Complex(-1.0), Complex(0.2)),
                    telheat::ParameterError);
    // lower-parameter pole reached before termination
    CHECK_THROWS_AS(gauss_2f1(Complex(-3.0), Complex(1.0), Complex(-1.0), Complex(0.5)),
                    telheat::ParameterError);
    // logarithmic connection case through the 1/z route (equal upper parameters)
    CHECK_THROWS_AS(gauss_2f1(Complex(1.0), Complex(1.0), Complex(1.5), Complex(2.0)),
                    telheat::ParameterError);
    // logarithmic connection case through the 1-z route (integer c-a-b)
    CHECK_THROWS_AS(gauss_2f1(Complex(0.5), Complex(0.5), Complex(1.0), Complex(0.93)),
                    telheat::ParameterError);
    // unreachable corner |z| = |1-z| = 1
    CHECK_THROWS_AS(
        gauss_2f1(Complex(0.4), Complex(0.9), Complex(1.7), Complex(0.5, 0.5 * std::sqrt(3.0))),
        telheat::DivergenceError);
}

TEST_CASE("2F1 contiguous: degenerate arguments raise") {
    CHECK_THROWS_AS(gauss_2f1_contiguous(Complex(0.0), Complex(0.5), Complex(1.5), Complex(0.3),
                                         Complex(1.0), Complex(1.0)),
                    telheat::ParameterError);
    CHECK_THROWS_AS(gauss_2f1_contiguous(Complex(1.0), Complex(0.5), Complex(1.5), Complex(1.0),
                                         Complex(1.0), Complex(1.0)),
                    telheat::ParameterError);
}

TEST_CASE("2F1 contiguous: z=0 always yields 1") {
    const Complex got = gauss_2f1_contiguous(Complex(1.0), Complex(0.77), Complex(1.5),
                                             Complex(0.0), Complex(1.0), Complex(1.0));
    check_close(got, 1.0, 1e-15);
}

TEST_CASE("2F1 contiguous: reproduces the next function in the a-ladder") {
    const Complex a(1.0), b(0.5), c(1.5), z(0.3);
    const Complex f0 = gauss_2f1(a - 1.0, b, c, z);
    const Complex f1 = gauss_2f1(a, b, c, z);
    const Complex got = gauss_2f1_contiguous(a, b, c, z, f0, f1);
    check_close(got, 1.27581271023226579, 1e-12);
    check_close(got, gauss_2f1(a + 1.0, b, c, z), 1e-12);
}

TEST_CASE("2F1 contiguous: three-term residual over a parameter sweep") {
    DeterministicRng rng(23);
    for (int i = 0; i < 150; ++i) {
        const Complex a(rng.uniform(0.2, 2.2));
        const Complex b(rng.uniform(-1.3, 1.7));
        const Complex c(rng.uniform(1.1, 3.1));
        const Complex z(rng.uniform(-0.85, 0.85));
        const Complex f0 = gauss_2f1(a - 1.0, b, c, z);
        const Complex f1 = gauss_2f1(a, b, c, z);
        const Complex f2 = gauss_2f1(a + 1.0, b, c, z);
        const Complex t0 = (c - a) * f0;
        const Complex t1 = (2.0 * a - c + (b - a) * z) * f1;
        const Complex t2 = a * (z - 1.0) * f2;
        const double scale =
            std::max({std::abs(t0), std::abs(t1), std::abs(t2), 1e-300});
        CHECK(std::abs(t0 + t1 + t2) < 1e-10 * scale);
        check_close(gauss_2f1_contiguous(a, b, c, z, f0, f1), f2,
                    1e-10);
    }
}

TEST_CASE("legendre_p: integer pins, principal branch") {
    check_close(legendre_p(0.0, 0.0, 3.7), 1.0, 1e-15);
    check_close(legendre_p(1.0, 1.0, 2.0), std::sqrt(3.0), 1e-14);
    check_close(legendre_p(2.0, 1.0, 2.0), 10.3923048454132638, 1e-13);
    check_close(legendre_p(3.0, 2.0, 1.7), 48.1949999999999989, 1e-13);
    check_close(legendre_p(3.0, 2.0, -1.7), -48.1950000000000051, 1e-13);
    check_close(legendre_p(2.0, -1.0, 2.0), 1.73205080756887729, 1e-13);
}

TEST_CASE("legendre_p: integer pins, on-cut") {
    check_close(legendre_p(1.0, 0.0, 0.5, Cut::Ferrers), 0.5, 1e-15);
    check_close(legendre_p(1.0, 1.0, 0.5, Cut::Ferrers), -0.866025403784438647, 1e-14);
    check_close(legendre_p(2.0, 1.0, 0.5, Cut::Ferrers), -1.29903810567665797, 1e-14);
    check_close(legendre_p(3.0, 2.0, 0.4, Cut::Ferrers), 5.04, 1e-13);
    check_close(legendre_p(2.0, -1.0, 0.5, Cut::Ferrers), 0.216506350946109662, 1e-14);
}

TEST_CASE("legendre_p: order above degree vanishes, degree reflection holds") {
    CHECK(legendre_p(1.0, 2.0, 0.3, Cut::Ferrers) == Complex(0.0, 0.0));
    CHECK(legendre_p(1.0, 2.0, 1.7) == Complex(0.0, 0.0));
    check_close(legendre_p(-2.0, 1.0, 2.0), legendre_p(1.0, 1.0, 2.0), 1e-15);
    check_close(legendre_p(-3.0, 0.0, 0.4, Cut::Ferrers), legendre_p(2.0, 0.0, 0.4, Cut::Ferrers),
                1e-15);
}

TEST_CASE("legendre_p: non-integer degree and order") {
    check_close(legendre_p(0.5, 0.3, 1.5), 1.22258312997950362, 1e-12);
    check_close(legendre_p(0.5, 0.3, 0.5, Cut::Ferrers), 0.638219124366383501, 1e-12);
    check_close(legendre_p(1.232, -1.5, 0.3, Cut::Ferrers), 0.298323331550830881, 1e-12);
    check_close(legendre_p(0.5, 0.3, -1.5),
                Complex(-0.155757607004042194, 1.22258312997950362), 1e-12);
}

TEST_CASE("legendre_p: degenerate representation raises") {
    CHECK_THROWS_AS(legendre_p(0.5, 1.0, 2.0), telheat::ParameterError);
    CHECK_THROWS_AS(legendre_p(1.232, 2.0, 0.3, Cut::Ferrers), telheat::ParameterError);
}

TEST_CASE("legendre_q: integer pins, principal branch") {
    check_close(legendre_q(0.0, 0.0, 2.0), 0.5 * std::log(3.0), 1e-14);
    check_close(legendre_q(1.0, 0.0, 2.0), std::log(3.0) - 1.0, 1e-13);
    check_close(legendre_q(2.0, 0.0, 1.5), 0.0635669991240192885, 1e-13);
    check_close(legendre_q(0.0, 1.0, 2.0), -0.577350269189625765, 1e-13);
    check_close(legendre_q(0.0, 2.0, 2.0), 4.0 / 3.0, 1e-13);
    check_close(legendre_q(0.0, 3.0, 2.0), -5.00370233297675663, 1e-13);
    check_close(legendre_q(1.0, 4.0, 2.0), 56.0 / 3.0, 1e-13);
    check_close(legendre_q(1.0, 4.0, 1.2), 338.842975206611712, 1e-12);
    check_close(legendre_q(3.0, 2.0, 1.5), 0.482720643604536518, 1e-12);
    check_close(legendre_q(3.0, -2.0, 1.5), 0.00402267203003780432, 1e-12);
}

TEST_CASE("legendre_q: integer path agrees with the hypergeometric representation") {
    // Same quantity through the explicit Gamma/2F1 form used for general
    // degree and order.
    for (const double y : {1.3, 2.0, 4.0}) {
        for (int l = 0; l <= 3; ++l) {
            for (int m = 0; m <= 4; ++m) {
                const double nu = l;
                const double mu = m;
                const Complex phase(std::cos(kPi * mu), std::sin(kPi * mu));
                const Complex pref = phase * std::pow(2.0, -nu - 1.0) * std::sqrt(kPi) *
                                     gamma_fn(Complex(nu + mu + 1.0)) /
                                     gamma_fn(Complex(nu + 1.5));
                const Complex f =
                    gauss_2f1(Complex(0.5 * (nu + mu + 2.0)), Complex(0.5 * (nu + mu + 1.0)),
                              Complex(nu + 1.5), Complex(1.0 / (y * y)));
                const Complex want = pref * std::pow(y, -nu - mu - 1.0) *
                                     std::pow(y * y - 1.0, 0.5 * mu) * f;
                check_close(legendre_q(nu, mu, y), want, 1e-11);
            }
        }
    }
}

TEST_CASE("legendre_q: non-integer order pin") {
    check_close(legendre_q(0.7, 1.9, 1.7),
                Complex(1.05588453806827152, -0.343077683366165725), 1e-12);
}

TEST_CASE("legendre_q: on-cut pins") {
    check_close(legendre_q(0.0, 0.0, 0.5, Cut::Ferrers), std::atanh(0.5), 1e-14);
    check_close(legendre_q(1.0, 0.0, 0.5, Cut::Ferrers), -0.725346927832972577, 1e-14);
    check_close(legendre_q(2.0, 0.0, 0.5, Cut::Ferrers), -0.818663268041756856, 1e-13);
    check_close(legendre_q(1.0, 4.0, 0.0, Cut::Ferrers), 8.0, 1e-13);
    check_close(legendre_q(1.0, 4.0, 0.5, Cut::Ferrers), 32.0, 1e-13);
    check_close(legendre_q(3.0, 2.0, 0.3, Cut::Ferrers), -5.18471502298605993, 1e-13);
}

TEST_CASE("legendre_q: excluded and degenerate parameters raise") {
    CHECK_THROWS_AS(legendre_q(-1.0, 0.0, 2.0), telheat::UndefinedError);
    CHECK_THROWS_AS(legendre_q(-0.5, 1.0, 2.0), telheat::UndefinedError);
    CHECK_THROWS_AS(legendre_q(-2.5, 0.3, 2.0), telheat::UndefinedError);
    CHECK_THROWS_AS(legendre_q(-2.0, 1.0, 0.5, Cut::Ferrers), telheat::UndefinedError);
    CHECK_THROWS_AS(legendre_q(1.0, -4.0, 2.0), telheat::ParameterError);
    CHECK_THROWS_AS(legendre_q(0.5, 1.3, 0.4, Cut::Ferrers), telheat::ParameterError);
    CHECK_THROWS_AS(legendre_q(2.0, 0.5, 0.4, Cut::Ferrers), telheat::ParameterError);
}

TEST_CASE("legendre orthogonality: pins") {
    CHECK(std::abs(legendre_orthogonality_integral(1, 2, 1)) < 1e-10);
    CHECK(legendre_orthogonality_integral(2, 2, 1) == doctest::Approx(2.4).epsilon(1e-10));
    CHECK(legendre_orthogonality_integral(0, 0, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(legendre_orthogonality_integral(3, 3, 2) ==
          doctest::Approx(240.0 / 7.0).epsilon(1e-10));
}

TEST_CASE("legendre orthogonality: full table through degree 6") {
    for (int l1 = 0; l1 <= 6; ++l1) {
        for (int l2 = 0; l2 <= 6; ++l2) {
            const int mmax = std::min(l1, l2);
            for (int m = 0; m <= mmax; ++m) {
                const double got = legendre_orthogonality_integral(l1, l2, m);
                double want = 0.0;
                if (l1 == l2) {
                    want = 2.0 / (2.0 * l1 + 1.0);
                    for (int k = l1 - m + 1; k <= l1 + m; ++k) want *= static_cast<double>(k);
                }
                CHECK(std::abs(got - want) <= 1e-8 * (1.0 + std::abs(want)));
            }
        }
    }
}

TEST_CASE("legendre orthogonality: invalid parameter triples raise") {
    CHECK_THROWS_AS(legendre_orthogonality_integral(1, 2, -1), telheat::PreconditionError);
    CHECK_THROWS_AS(legendre_orthogonality_integral(1, 2, 2), telheat::PreconditionError);
    CHECK_THROWS_AS(legendre_orthogonality_integral(3, 1, 2), telheat::PreconditionError);
}

TEST_CASE("heun_c: normalization and leading coefficients") {
    // Parameter set of the even oscillator branch at epsilon=1, a=1, D=1.
    const HeunCParams p{0.0, -0.5, -1.5, -0.25, 0.875};
    const auto c = heun_c_coefficients(p, 4);
    CHECK(c[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c[2] == doctest::Approx(-1.0 / 24.0).epsilon(1e-13));
    CHECK(heun_c(p, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("heun_c: odd-branch leading coefficients") {
    // Companion branch with the opposite sign in the second parameter.
    const HeunCParams p{0.0, 0.5, -1.5, -0.25, 0.875};
    const auto c = heun_c_coefficients(p, 4);
    CHECK(std::abs(c[1]) < 1e-15);
    CHECK(c[2] == doctest::Approx(-0.05).epsilon(1e-13));
}

TEST_CASE("heun_c: evaluator matches its own coefficient sum") {
    const HeunCParams p{0.0, -0.5, -1.5, -0.25, 0.875};
    const auto c = heun_c_coefficients(p, 200);
    for (const double z : {0.1, 0.3, -0.5, 0.8}) {
        double sum = 0.0;
        double zk = 1.0;
        for (const double ck : c) {
            sum += ck * zk;
            zk *= z;
        }
        CHECK(heun_c(p, z) == doctest::Approx(sum).epsilon(1e-12));
    }
}

TEST_CASE("heun_c: domain and parameter errors") {
    const HeunCParams p{0.0, -0.5, -1.5, -0.25, 0.875};
    CHECK_THROWS_AS(heun_c(p, 0.96), telheat::DivergenceError);
    CHECK_THROWS_AS(heun_c(p, -0.95), telheat::DivergenceError);
    const HeunCParams bad{0.0, -1.0, -1.5, -0.25, 0.875};
    CHECK_THROWS_AS(heun_c_coefficients(bad, 4), telheat::ParameterError);
}

TEST_CASE("heun_g: normalization and leading coefficients") {
    // Parameter set of the charge family at epsilon=1, a=1, q=1.
    const HeunGParams p{2.0, 2.0, -1.0, -1.0, -0.5, 0.0};
    const auto c = heun_g_coefficients(p, 4);
    CHECK(c[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c[1] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(c[2] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(heun_g(p, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("heun_g: evaluator matches its own coefficient sum") {
    const HeunGParams p{2.0, 2.0, -1.0, -1.0, -0.5, 0.0};
    const auto c = heun_g_coefficients(p, 60);
    for (const double z : {0.2, -0.4, 0.7}) {
        double sum = 0.0;
        double zk = 1.0;
        for (const double ck : c) {
            sum += ck * zk;
            zk *= z;
        }
        CHECK(heun_g(p, z) == doctest::Approx(sum).epsilon(1e-12));
    }
}

TEST_CASE("heun_g: domain and parameter errors") {
    const HeunGParams p{2.0, 2.0, -1.0, -1.0, -0.5, 0.0};
    CHECK_THROWS_AS(heun_g(p, 0.96), telheat::DivergenceError);
    const HeunGParams half{0.5, 1.0, -1.0, -1.0, -0.5, 0.0};
    CHECK_THROWS_AS(heun_g(half, 0.46), telheat::DivergenceError);
    const HeunGParams badg{2.0, 2.0, -1.0, -1.0, 0.0, 0.0};
    CHECK_THROWS_AS(heun_g_coefficients(badg, 4), telheat::ParameterError);
    const HeunGParams bada{0.0, 2.0, -1.0, -1.0, -0.5, 0.0};
    CHECK_THROWS_AS(heun_g_coefficients(bada, 4), telheat::ParameterError);
}
