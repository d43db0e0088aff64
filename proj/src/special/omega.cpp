#include "partosc/special/omega.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "partosc/errors.hpp"
#include "partosc/special/dilog.hpp"

namespace partosc::special {

std::complex<double> omega(int h, int k, std::complex<double> z) {
    if (k < 1) throw std::invalid_argument("omega: k must be >= 1");
    std::complex<double> prod = 1.0;
    for (int j = 1; j <= k; ++j) {
        const double ang = -2.0 * std::numbers::pi * j * h / k;
        const std::complex<double> root(std::cos(ang), std::sin(ang));
        const std::complex<double> base = 1.0 - z * root;
        const double expo = static_cast<double>(j) / k - 0.5;
        if (std::abs(base) < 1e-12) {
            if (expo < 0.0) {
                std::ostringstream msg;
                msg << "omega: factor j=" << j << " is singular (1 - z zeta^{-jh} = 0 with "
                    << "exponent " << expo << ")";
                throw singular_factor_error(msg.str(), j);
            }
            // 0^0 = 1 (j/k = 1/2), 0^positive = 0.
            if (expo == 0.0) continue;
            return 0.0;
        }
        prod *= principal_pow(base, expo);
    }
    return prod;
}

}  // namespace partosc::special
