#pragma once

#include <vector>

#include "telheat/complexops.hpp"
#include "telheat/errors.hpp"

namespace telheat::specfun {

// Series evaluation refuses arguments within this margin of a singular circle.
constexpr double kSeriesMargin = 0.05;

// Gamma function on the complex plane (Lanczos approximation, reflection for
// Re z < 0.5). Throws PoleError at nonpositive real integers.
Complex gamma_fn(const Complex& z);

// 1/Gamma(z); returns exactly 0 at the poles instead of throwing.
Complex rgamma_fn(const Complex& z);

// Gauss hypergeometric function 2F1(a, b; c; z).
//  * Terminating cases (a or b a nonpositive integer) sum the exact polynomial
//    for any z.
//  * |z| <= 0.9 sums the defining series to relative tail < 1e-14.
//  * Larger |z| dispatches through the z/(z-1), 1-z and 1/z connection
//    formulas; on branch cuts the value is the limit from below in z.
// Throws ParameterError when c is a nonpositive integer that is reached before
// termination, or when the reachable connection formula is degenerate
// (logarithmic case); DivergenceError when no transformation lands inside the
// series radius.
Complex gauss_2f1(const Complex& a, const Complex& b, const Complex& c, const Complex& z);

// Solves the three-term contiguous relation
//   (c-a) F(a-1) + (2a-c+(b-a)z) F(a) + a(z-1) F(a+1) = 0
// for F(a+1) given the two lower neighbours. Throws ParameterError when
// a(z-1) = 0.
Complex gauss_2f1_contiguous(const Complex& a, const Complex& b, const Complex& c,
                             const Complex& z, const Complex& f_am1, const Complex& f_a);

// Which side of the cut [-1, 1] a Legendre evaluation lives on.
enum class Cut {
    OffCut,  // principal-branch functions of a real argument with |y| > 1
    Ferrers  // on-cut functions of x in (-1, 1), Condon-Shortley phase
};

// Associated Legendre function of the first kind, degree nu, order mu, at the
// real argument y. Integer (nu, mu) dispatches to polynomial recurrences; the
// general case uses the hypergeometric representation. Throws ParameterError
// when that representation degenerates (integer mu >= 1 with non-integer nu).
Complex legendre_p(double nu, double mu, double y, Cut cut = Cut::OffCut);

// Associated Legendre function of the second kind. The off-cut path uses the
// standard hypergeometric representation valid for |y| > 1 and carries the
// phase e^{i pi mu}; the on-cut (Ferrers) path supports integer nu >= 0,
// mu >= 0 via recurrences. Throws UndefinedError for nu < 0 with 2 nu an
// integer (the function is not defined there), ParameterError on Gamma poles
// or unsupported on-cut parameters.
Complex legendre_q(double nu, double mu, double y, Cut cut = Cut::OffCut);

// Integral over [-1, 1] of the product of two Ferrers functions of equal
// order: expected 0 for l1 != l2 and 2/(2 l1 + 1) (l1+m)!/(l1-m)! otherwise.
// Gauss-Legendre quadrature, 64 nodes. Requires l1, l2 >= m >= 0.
double legendre_orthogonality_integral(int l1, int l2, int m);

// Parameters of the confluent Heun function (computer-algebra convention):
// solutions of H'' + [alpha + (beta+1)/z + (gamma+1)/(z-1)] H'
//              + [mu/z + nu/(z-1)] H = 0  with
// mu = (alpha - beta - gamma + alpha beta - beta gamma)/2 - eta,
// nu = (alpha + beta + gamma + alpha gamma + beta gamma)/2 + delta + eta,
// normalized so H(0) = 1.
struct HeunCParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double eta = 0.0;
};

// First count+1 Frobenius coefficients c_0..c_count of the local series at
// z = 0. Throws ParameterError when beta is a negative integer (the
// recurrence divides by k + beta + 1).
std::vector<double> heun_c_coefficients(const HeunCParams& p, int count);

// Confluent Heun function by its local series; requires |z| < 1 - margin
// (regular singular point at z = 1), else DivergenceError.
double heun_c(const HeunCParams& p, double z);

// Parameters of the general Heun function (computer-algebra convention):
// w'' + [gamma/z + delta/(z-1) + eps/(z-a)] w'
//    + (alpha beta z - q) / (z (z-1) (z-a)) w = 0,
// eps = alpha + beta - gamma - delta + 1, normalized so w(0) = 1.
struct HeunGParams {
    double a = 2.0;
    double q = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

// First count+1 Frobenius coefficients of the local series at z = 0. Throws
// ParameterError when gamma is a nonpositive integer (zero denominator) or
// a = 0 (singularities collide).
std::vector<double> heun_g_coefficients(const HeunGParams& p, int count);

// General Heun function by its local series; requires
// |z| < min(1, |a|) - margin, else DivergenceError.
double heun_g(const HeunGParams& p, double z);

} // namespace telheat::specfun
