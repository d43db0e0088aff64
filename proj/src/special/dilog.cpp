#include "partosc/special/dilog.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace partosc::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// zeta(s) for even integer s >= 4 by a truncated sum with the first
// Euler-Maclaurin tail corrections; absolute error far below 1e-20.
double zeta_even(int s) {
    const int cutoff = 2000;
    double sum = 0.0;
    for (int j = cutoff; j >= 1; --j) sum += std::pow(static_cast<double>(j), -s);
    const double J = cutoff;
    sum += std::pow(J, 1.0 - s) / (s - 1.0) - std::pow(J, -static_cast<double>(s)) / 2.0 +
           s * std::pow(J, -s - 1.0) / 12.0;
    return sum;
}

// Coefficients c_m = zeta(2m) / (m (2m+1) (2pi)^{2m}) of the expansion
//   Cl2(t) = t - t log t + sum_{m>=1} c_m t^{2m+1},   0 <= t <= pi,
// obtained by integrating the product form of log(2 sin(t/2)).
const std::array<double, 32>& clausen_coefficients() {
    static const std::array<double, 32> table = [] {
        std::array<double, 32> c{};
        for (int m = 1; m <= static_cast<int>(c.size()); ++m) {
            const double z = (m == 1) ? kPi * kPi / 6.0 : zeta_even(2 * m);
            c[static_cast<std::size_t>(m - 1)] =
                z / (m * (2.0 * m + 1.0) * std::pow(kTwoPi, 2.0 * m));
        }
        return c;
    }();
    return table;
}

double clausen_principal(double t) {
    // t in [0, pi]
    if (t == 0.0) return 0.0;
    const auto& c = clausen_coefficients();
    double sum = t - t * std::log(t);
    const double t2 = t * t;
    double p = t;
    for (std::size_t m = 0; m < c.size(); ++m) {
        p *= t2;
        const double term = c[m] * p;
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

std::complex<double> principal_sqrt(std::complex<double> z) { return std::sqrt(z); }

std::complex<double> principal_pow(std::complex<double> z, double p) {
    if (z == std::complex<double>(0.0, 0.0)) {
        if (p > 0.0) return 0.0;
        if (p == 0.0) return 1.0;
        throw std::domain_error("principal_pow: zero base with negative exponent");
    }
    return std::exp(p * std::log(z));
}

double clausen(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (std::fabs(t - kPi) < 1e-15) return 0.0;  // Cl2(pi) = 0 exactly
    if (t > kPi) return -clausen_principal(kTwoPi - t);
    return clausen_principal(t);
}

std::complex<double> dilog_unit(double theta) {
    if (!(theta >= 0.0 && theta < 1.0))
        throw std::invalid_argument("dilog_unit: theta must lie in [0,1)");
    const double t = kTwoPi * theta;
    const double re = kPi * kPi / 6.0 - kPi * t / 2.0 + t * t / 4.0;
    return {re, clausen(t)};
}

}  // namespace partosc::special
