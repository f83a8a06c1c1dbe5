#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace telheat {

using Complex = std::complex<double>;

// Locale-independent 17-significant-digit rendering: enough digits to
// round-trip any double, identical output on every platform.
inline std::string format_g17(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

// Locale-independent shortest round-trip rendering (labels, parameter lists).
inline std::string format_shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

constexpr double kPi = 3.141592653589793238462643383279502884;

inline bool is_integer(double x, double tol = 1e-12) {
    return std::abs(x - std::round(x)) <= tol;
}

inline bool is_nonpos_int(double x, double tol = 1e-12) {
    return x <= tol && is_integer(x, tol);
}

inline bool is_nonpos_int(const Complex& z, double tol = 1e-12) {
    return std::abs(z.imag()) <= tol && is_nonpos_int(z.real(), tol);
}

// Principal-branch complex power base^p with two repairs over std::pow:
//  * a real base with a negative-zero imaginary part is pulled back onto the
//    upper side of the cut, so arg(base) ∈ (-pi, pi] deterministically;
//  * integer exponents of real bases go through an exact real path, so
//    (-2)^2 is 4 + 0i rather than carrying a stray 1e-16 imaginary part.
inline Complex cpow(Complex base, double p) {
    if (base.imag() == 0.0) {
        base = Complex(base.real(), +0.0); // normalize signed zero
        if (is_integer(p) && std::abs(p) < 1e9) {
            const double r = std::pow(base.real(), std::round(p));
            if (std::isfinite(r)) return Complex(r, 0.0);
        }
        if (base.real() >= 0.0) {
            return Complex(std::pow(base.real(), p), 0.0);
        }
    }
    return std::pow(base, Complex(p, 0.0));
}

// Real power of a possibly negative base under the same principal-branch
// convention, returned as a complex number.
inline Complex cpow_real(double base, double p) { return cpow(Complex(base, 0.0), p); }

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    if (n <= 0) return out;
    out.reserve(static_cast<size_t>(n));
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) out.push_back(lo + step * static_cast<double>(i));
    out.back() = hi;
    return out;
}

// Small deterministic generator for sample points: identical sequences on
// every platform, unlike distribution wrappers around std::mt19937.
class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed = 0x243f6a8885a308d3ull) : state_(seed | 1ull) {}

    std::uint64_t next_u64() {
        // xorshift64*
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  private:
    std::uint64_t state_;
};

} // namespace telheat
