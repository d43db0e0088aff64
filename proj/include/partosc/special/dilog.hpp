#pragma once

#include <complex>

namespace partosc::special {

// Principal-branch square root and power, Arg in (-pi, pi].
std::complex<double> principal_sqrt(std::complex<double> z);
std::complex<double> principal_pow(std::complex<double> z, double p);

// Clausen function Cl2(theta) = sum_{n >= 1} sin(n theta)/n^2, any real theta.
double clausen(double theta);

// Li2(e^{2 pi i theta}) for theta in [0,1).  With t = 2 pi theta, the real
// part is the closed form pi^2/6 - pi t/2 + t^2/4 and the imaginary part is
// Cl2(t); the raw series sum_{n} e^{2 pi i n theta}/n^2 converges too slowly
// near theta = 0 to be usable directly.
std::complex<double> dilog_unit(double theta);

}  // namespace partosc::special
