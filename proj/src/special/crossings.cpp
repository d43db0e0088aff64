#include "partosc/special/crossings.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "partosc/errors.hpp"
#include "partosc/special/dilog.hpp"

namespace partosc::special {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Li2(e^{i phi}) for any real phi, reduced to the [0,1) circle coordinate.
std::complex<double> dilog_angle(double phi) {
    double u = std::fmod(phi / kTwoPi, 1.0);
    if (u < 0.0) u += 1.0;
    if (u >= 1.0) u = 0.0;  // guard against fmod rounding to 1.0
    return dilog_unit(u);
}
}  // namespace

double psi_k(double theta, int k) {
    if (k < 1) throw std::invalid_argument("psi_k: k must be >= 1");
    return principal_sqrt(dilog_angle(k * theta)).real() / k;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa * fb > 0.0) {
        std::ostringstream msg;
        msg << "find_root: no sign change on bracket [" << a << ", " << b << "]: f(a)=" << fa
            << " f(b)=" << fb;
        throw bracket_error(msg.str());
    }
    double c = b, fc = fb;
    double d = b - a, e = d;
    constexpr int max_iter = 200;
    constexpr double eps = 1e-16;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (fb * fc > 0.0) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::fabs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? std::fabs(tol1) : -std::fabs(tol1));
        fb = f(b);
    }
    return b;
}

CrossingPair find_crossings() {
    CrossingPair c{};
    c.theta13 = find_root([](double t) { return psi_k(t, 1) - psi_k(t, 3); }, 1.8, kTwoPi / 3.0);
    c.theta23 = find_root([](double t) { return psi_k(t, 2) - psi_k(t, 3); }, kTwoPi / 3.0, 2.9);
    return c;
}

const CrossingPair& crossings() {
    static const CrossingPair cached = find_crossings();
    return cached;
}

std::complex<double> L_function(double theta) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw std::invalid_argument("L_function: theta must lie in [0, pi]");
    const CrossingPair& c = crossings();
    if (std::fabs(theta - c.theta13) < 1e-12 || std::fabs(theta - c.theta23) < 1e-12)
        throw boundary_error("L_function: theta coincides with a crossing angle");
    if (theta < c.theta13) return principal_sqrt(dilog_angle(theta));
    if (theta < c.theta23) return principal_sqrt(dilog_angle(3.0 * theta)) / 3.0;
    return principal_sqrt(dilog_angle(2.0 * theta)) / 2.0;
}

}  // namespace partosc::special
