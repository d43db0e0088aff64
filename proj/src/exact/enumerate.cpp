#include "partosc/exact/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace partosc::exact {

namespace {

void enumerate(int remaining, int max_part, int length,
               const std::vector<std::complex<double>>& zeta_pow, std::complex<double>& acc) {
    if (remaining == 0) {
        acc += zeta_pow[static_cast<std::size_t>(length)];
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part)
        enumerate(remaining - part, part, length + 1, zeta_pow, acc);
}

}  // namespace

std::complex<double> brute_force_qn(int n, std::complex<double> zeta) {
    if (n < 0) throw std::invalid_argument("brute_force_qn: n < 0");
    if (n > 50) throw std::invalid_argument("brute_force_qn: n > 50 enumeration guard");
    if (n == 0) return 1.0;  // the empty partition
    std::vector<std::complex<double>> zeta_pow(static_cast<std::size_t>(n) + 1);
    zeta_pow[0] = 1.0;
    for (int k = 1; k <= n; ++k) zeta_pow[k] = zeta_pow[k - 1] * zeta;
    std::complex<double> acc = 0.0;
    enumerate(n, n, 0, zeta_pow, acc);
    return acc;
}

}  // namespace partosc::exact
