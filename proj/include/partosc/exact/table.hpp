#pragma once

#include <gmpxx.h>

#include <vector>

namespace partosc::exact {

// Triangular table of p(n,m), the number of partitions of n with exactly m
// parts, for 0 <= m <= n <= n_max.  Row n = 0 holds the single entry
// p(0,0) = 1.  Immutable after construction; concurrent reads are safe.
class PartCountTable {
public:
    // Default memory budget: ~2e6 big integers, enough for every sweep the
    // tool performs (the examples need n <= 1600).
    static constexpr int default_budget = 2000;

    int n_max() const { return n_max_; }

    // p(n,m); requires 0 <= m <= n <= n_max.
    const mpz_class& count(int n, int m) const;

    // sum_m p(n,m) = p(n).
    mpz_class row_sum(int n) const;

private:
    friend PartCountTable build_table(int n_max, int budget);
    int n_max_ = 0;
    std::vector<mpz_class> flat_;  // row n starts at n(n+1)/2

    std::size_t index(int n, int m) const {
        return static_cast<std::size_t>(n) * (n + 1) / 2 + static_cast<std::size_t>(m);
    }
};

// Builds the table with the recurrence p(n,m) = p(n-1,m-1) + p(n-m,m),
// O(n_max^2) big-integer additions.  Throws capacity_error when n_max
// exceeds the budget.
PartCountTable build_table(int n_max, int budget = PartCountTable::default_budget);

// Counts of partitions of n grouped by residue of the number of parts mod b;
// entries[a] = p(a,b,n).  The empty partition of n = 0 counts toward
// residue 0.
struct ResidueVector {
    int b = 0;
    int n = 0;
    std::vector<mpz_class> entries;

    mpz_class total() const;  // = p(n)
};

ResidueVector residue_counts(const PartCountTable& table, int b, int n);

// Exact rational value of sum_a v[a] * p(a,b,n); requires v.size() == b.
mpq_class weighted_combination(const std::vector<mpq_class>& v, int b, int n,
                               const PartCountTable& table);

}  // namespace partosc::exact
