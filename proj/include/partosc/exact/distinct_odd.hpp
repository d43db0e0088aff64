#pragma once

#include <gmpxx.h>

#include <vector>

namespace partosc::exact {

// Number of partitions into distinct odd parts, p_DO(0..n_max), via the
// product DP for prod_{k odd} (1 + q^k).
std::vector<mpz_class> distinct_odd_series(int n_max);

// Single value p_DO(n).
mpz_class distinct_odd_count(int n);

}  // namespace partosc::exact
