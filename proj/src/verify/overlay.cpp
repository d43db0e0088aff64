#include "partosc/verify/overlay.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace partosc::verify {

namespace {

bool needs_backdrop(const asym::AsymptoticProfile& p) {
    return p.kind == asym::ProfileKind::equidistribution_main ||
           p.kind == asym::ProfileKind::qn_minus_one;
}

template <typename T>
std::vector<long> sign_changes_impl(const std::vector<T>& values, long n_first) {
    std::vector<long> out;
    int running = 0;
    bool any_nonzero = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int s = sgn(values[i]);
        if (s == 0) continue;  // zeros are transparent
        any_nonzero = true;
        if (running != 0 && s != running) out.push_back(n_first + static_cast<long>(i) - 1);
        running = s;
    }
    if (!any_nonzero) throw std::domain_error("exact_sign_changes: all-zero sequence");
    return out;
}

}  // namespace

std::vector<ComparisonRow> overlay(const exact::PartCountTable& table,
                                   const std::vector<mpq_class>& weights,
                                   const asym::AsymptoticProfile& profile, int n_lo, int n_hi,
                                   const asym::ExactBackdrop* backdrop) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("overlay: bad n range");
    if (n_hi > table.n_max()) throw std::out_of_range("overlay: table too small for the range");
    std::unique_ptr<asym::ExactBackdrop> local;
    if (needs_backdrop(profile) && backdrop == nullptr) {
        local = std::make_unique<asym::ExactBackdrop>(n_hi);
        backdrop = local.get();
    }
    std::vector<ComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) {
        ComparisonRow row;
        row.n = n;
        row.exact = exact::weighted_combination(weights, profile.b, n, table).get_d();
        row.envelope = backdrop ? asym::envelope(profile, n, *backdrop) : asym::envelope(profile, n);
        if (!(row.envelope > 0.0)) continue;  // p_DO vanishes at n = 2
        row.normalized = row.exact / row.envelope;
        row.predicted = asym::predicted_oscillation(profile, n);
        row.residual = row.normalized - row.predicted;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ComparisonRow> overlay_difference(const exact::PartCountTable& table, int a1, int a2,
                                              int b, int n_lo, int n_hi) {
    std::vector<mpq_class> v(static_cast<std::size_t>(b), mpq_class(0));
    v.at(static_cast<std::size_t>(a1)) = 1;
    v.at(static_cast<std::size_t>(a2)) = -1;
    return overlay(table, v, asym::difference_profile(a1, a2, b), n_lo, n_hi);
}

std::vector<long> exact_sign_changes(const std::vector<mpq_class>& values, long n_first) {
    return sign_changes_impl(values, n_first);
}

std::vector<long> exact_sign_changes(const std::vector<mpz_class>& values, long n_first) {
    return sign_changes_impl(values, n_first);
}

std::vector<mpz_class> difference_sequence(const exact::PartCountTable& table, int a1, int a2,
                                           int b, int n_lo, int n_hi) {
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("difference_sequence: bad n range");
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) {
        const exact::ResidueVector r = exact::residue_counts(table, b, n);
        out.push_back(r.entries.at(static_cast<std::size_t>(a1)) -
                      r.entries.at(static_cast<std::size_t>(a2)));
    }
    return out;
}

std::vector<WindowSummary> convergence_report(const std::vector<ComparisonRow>& rows,
                                              const std::vector<std::pair<long, long>>& windows) {
    if (windows.size() < 2) throw std::invalid_argument("convergence_report: need >= 2 windows");
    std::vector<WindowSummary> out;
    out.reserve(windows.size());
    for (const auto& [lo, hi] : windows) {
        WindowSummary w;
        w.lo = lo;
        w.hi = hi;
        std::vector<double> abs_res;
        for (const auto& row : rows) {
            if (row.n < lo || row.n >= hi) continue;
            abs_res.push_back(std::fabs(row.residual));
        }
        w.count = abs_res.size();
        if (!abs_res.empty()) {
            std::sort(abs_res.begin(), abs_res.end());
            w.max_abs_residual = abs_res.back();
            const std::size_t mid = abs_res.size() / 2;
            w.median_abs_residual = (abs_res.size() % 2 == 1)
                                        ? abs_res[mid]
                                        : 0.5 * (abs_res[mid - 1] + abs_res[mid]);
        }
        out.push_back(w);
    }
    return out;
}

std::vector<std::pair<long, long>> dyadic_windows(long lo, long hi) {
    if (lo < 1 || hi <= lo) throw std::invalid_argument("dyadic_windows: bad range");
    std::vector<std::pair<long, long>> out;
    for (long n = lo; n < hi; n *= 2) out.emplace_back(n, std::min(2 * n, hi));
    return out;
}

}  // namespace partosc::verify
