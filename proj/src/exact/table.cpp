#include "partosc/exact/table.hpp"

#include <stdexcept>
#include <string>

#include "partosc/errors.hpp"

namespace partosc::exact {

const mpz_class& PartCountTable::count(int n, int m) const {
    if (n < 0 || n > n_max_ || m < 0 || m > n)
        throw std::out_of_range("PartCountTable::count: (n,m) outside the table");
    return flat_[index(n, m)];
}

mpz_class PartCountTable::row_sum(int n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("PartCountTable::row_sum: n outside the table");
    mpz_class s = 0;
    for (int m = 0; m <= n; ++m) s += flat_[index(n, m)];
    return s;
}

PartCountTable build_table(int n_max, int budget) {
    if (n_max < 0) throw std::invalid_argument("build_table: n_max < 0");
    if (n_max > budget)
        throw capacity_error("build_table: n_max " + std::to_string(n_max) +
                             " exceeds the table budget " + std::to_string(budget));
    PartCountTable t;
    t.n_max_ = n_max;
    t.flat_.resize((static_cast<std::size_t>(n_max) + 1) * (n_max + 2) / 2);
    t.flat_[0] = 1;  // p(0,0)
    for (int n = 1; n <= n_max; ++n) {
        // p(n,0) = 0 and p(n,m) = p(n-1,m-1) + p(n-m,m).
        for (int m = 1; m <= n; ++m) {
            mpz_class& dst = t.flat_[t.index(n, m)];
            dst = t.flat_[t.index(n - 1, m - 1)];
            if (n - m >= m) dst += t.flat_[t.index(n - m, m)];
        }
    }
    return t;
}

mpz_class ResidueVector::total() const {
    mpz_class s = 0;
    for (const auto& e : entries) s += e;
    return s;
}

ResidueVector residue_counts(const PartCountTable& table, int b, int n) {
    if (b < 2) throw std::invalid_argument("residue_counts: modulus must be >= 2");
    if (n < 0 || n > table.n_max())
        throw std::out_of_range("residue_counts: n outside the built table");
    ResidueVector r;
    r.b = b;
    r.n = n;
    r.entries.assign(static_cast<std::size_t>(b), mpz_class(0));
    for (int m = 0; m <= n; ++m) r.entries[m % b] += table.count(n, m);
    return r;
}

mpq_class weighted_combination(const std::vector<mpq_class>& v, int b, int n,
                               const PartCountTable& table) {
    if (static_cast<int>(v.size()) != b)
        throw std::invalid_argument("weighted_combination: weight vector length differs from b");
    const ResidueVector r = residue_counts(table, b, n);
    mpq_class acc = 0;
    for (int a = 0; a < b; ++a) acc += v[a] * mpq_class(r.entries[a]);
    return acc;
}

}  // namespace partosc::exact
