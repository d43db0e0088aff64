#pragma once

#include <gmpxx.h>

#include <vector>

namespace partosc::exact {

// p(0), ..., p(n_max) by Euler's pentagonal-number recurrence
//
//   p(n) = sum_{k >= 1} (-1)^{k+1} ( p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ).
//
// Deliberately shares no code with PartCountTable so the two routes stay
// independent cross-checks of each other.
std::vector<mpz_class> pentagonal_partition_series(int n_max);

}  // namespace partosc::exact
