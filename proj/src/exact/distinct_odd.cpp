#include "partosc/exact/distinct_odd.hpp"

#include <stdexcept>

namespace partosc::exact {

std::vector<mpz_class> distinct_odd_series(int n_max) {
    if (n_max < 0) throw std::invalid_argument("distinct_odd_series: n_max < 0");
    std::vector<mpz_class> f(static_cast<std::size_t>(n_max) + 1);
    f[0] = 1;
    for (int part = 1; part <= n_max; part += 2)
        for (int n = n_max; n >= part; --n) f[n] += f[n - part];
    return f;
}

mpz_class distinct_odd_count(int n) {
    if (n < 0) throw std::invalid_argument("distinct_odd_count: n < 0");
    return distinct_odd_series(n).back();
}

}  // namespace partosc::exact
