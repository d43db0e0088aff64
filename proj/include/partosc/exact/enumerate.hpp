#pragma once

#include <complex>

namespace partosc::exact {

// Q_n(zeta) = sum over all partitions lambda of n of zeta^{#parts(lambda)},
// by direct enumeration.  Exists as an independent check of the table route;
// guarded to n <= 50 where enumeration is cheap.
std::complex<double> brute_force_qn(int n, std::complex<double> zeta);

}  // namespace partosc::exact
