#pragma once

#include <complex>

namespace partosc::special {

// omega_{h,k}(z) = prod_{j=1}^{k} (1 - z zeta_k^{-jh})^{j/k - 1/2} with
// principal-branch powers.  Throws singular_factor_error when a factor with
// negative exponent vanishes.
std::complex<double> omega(int h, int k, std::complex<double> z);

}  // namespace partosc::special
