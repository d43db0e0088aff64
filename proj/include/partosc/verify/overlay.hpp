#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "partosc/asym/profile.hpp"
#include "partosc/exact/table.hpp"

namespace partosc::verify {

// One n of an exact-vs-prediction comparison.  The exact combination is
// formed in rational arithmetic and converted to binary64 only afterwards,
// so no cancellation is lost to rounding.
struct ComparisonRow {
    int n = 0;
    double exact = 0.0;
    double envelope = 0.0;    // > 0
    double normalized = 0.0;  // exact / envelope
    double predicted = 0.0;   // cosine or discrete-factor prediction
    double residual = 0.0;    // normalized - predicted
};

// Rows for n in [n_lo, n_hi].  For profiles backed by exact series a backdrop
// is built on demand when none is supplied.  Rows with a vanishing exact
// envelope (p_DO(2) = 0) are skipped.
std::vector<ComparisonRow> overlay(const exact::PartCountTable& table,
                                   const std::vector<mpq_class>& weights,
                                   const asym::AsymptoticProfile& profile, int n_lo, int n_hi,
                                   const asym::ExactBackdrop* backdrop = nullptr);

// Convenience overlay for p(a1,b,n) - p(a2,b,n).
std::vector<ComparisonRow> overlay_difference(const exact::PartCountTable& table, int a1, int a2,
                                              int b, int n_lo, int n_hi);

// Indices n with sign(values(n)) != sign(values(n+1)); zeros inherit the
// previous nonzero sign, and the reported index is the highest one before
// the change.  n_first is the index of values[0].  Throws on an all-zero
// sequence.
std::vector<long> exact_sign_changes(const std::vector<mpq_class>& values, long n_first);
std::vector<long> exact_sign_changes(const std::vector<mpz_class>& values, long n_first);

// Exact difference sequence p(a1,b,n) - p(a2,b,n) for n in [n_lo, n_hi].
std::vector<mpz_class> difference_sequence(const exact::PartCountTable& table, int a1, int a2,
                                           int b, int n_lo, int n_hi);

struct WindowSummary {
    long lo = 0, hi = 0;  // window [lo, hi)
    std::size_t count = 0;
    double max_abs_residual = 0.0;
    double median_abs_residual = 0.0;
};

// Per-window residual summaries; windows are [lo, hi) index ranges on n.
std::vector<WindowSummary> convergence_report(const std::vector<ComparisonRow>& rows,
                                              const std::vector<std::pair<long, long>>& windows);

// Dyadic windows [N, 2N) covering [lo, hi).
std::vector<std::pair<long, long>> dyadic_windows(long lo, long hi);

}  // namespace partosc::verify
