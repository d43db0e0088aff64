#pragma once

#include <complex>
#include <functional>

namespace partosc::special {

// Psi_k(theta) = Re(sqrt(Li2(e^{i k theta}))) / k for theta in [0, pi].
double psi_k(double theta, int k);

// Angles where Psi_1 = Psi_3 and Psi_2 = Psi_3; they separate the regimes in
// which the k = 1, 3 or 2 arc dominates.
struct CrossingPair {
    double theta13;  // in (0, 2 pi / 3)
    double theta23;  // in (2 pi / 3, pi)
};

// Brent's method; throws bracket_error if f(lo) and f(hi) have the same sign.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-13);

// Solves Psi_1 - Psi_3 on (1.8, 2 pi / 3) and Psi_2 - Psi_3 on (2 pi / 3, 2.9).
CrossingPair find_crossings();

// Cached crossings (computed once).
const CrossingPair& crossings();

// Dominant-branch square root of the dilogarithm:
//   sqrt(Li2(e^{i theta}))        for 0 <= theta < theta13,
//   sqrt(Li2(e^{3 i theta})) / 3  for theta13 < theta < theta23,
//   sqrt(Li2(e^{2 i theta})) / 2  for theta23 < theta <= pi.
// Throws boundary_error within 1e-12 of a crossing angle.
std::complex<double> L_function(double theta);

}  // namespace partosc::special
