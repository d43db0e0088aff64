#include "partosc/exact/pentagonal.hpp"

#include <stdexcept>

namespace partosc::exact {

std::vector<mpz_class> pentagonal_partition_series(int n_max) {
    if (n_max < 0) throw std::invalid_argument("pentagonal_partition_series: n_max < 0");
    std::vector<mpz_class> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (int k = 1;; ++k) {
            const long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
            const long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
            if (g1 > n) break;
            if (k % 2 == 1) {
                acc += p[n - g1];
                if (g2 <= n) acc += p[n - g2];
            } else {
                acc -= p[n - g1];
                if (g2 <= n) acc -= p[n - g2];
            }
        }
        p[n] = acc;
    }
    return p;
}

}  // namespace partosc::exact
