#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "partosc/asym/profile.hpp"
#include "partosc/exact/cyclotomic.hpp"
#include "partosc/exact/pentagonal.hpp"
#include "partosc/exact/table.hpp"
#include "partosc/verify/overlay.hpp"

using namespace partosc;

TEST_CASE("sign change scanning conventions") {
    auto seq = [](std::initializer_list<long> xs) {
        std::vector<mpz_class> v;
        for (long x : xs) v.emplace_back(x);
        return v;
    };

    // Plain alternation: change reported at the last index of the old sign.
    CHECK(verify::exact_sign_changes(seq({1, 2, -1, -3, 4}), 1) == std::vector<long>{2, 4});
    // Zeros inherit the previous nonzero sign.
    CHECK(verify::exact_sign_changes(seq({1, 0, 0, -1}), 1) == std::vector<long>{3});
    // Leading zeros are skipped entirely.
    CHECK(verify::exact_sign_changes(seq({0, 0, 1, -1}), 1) == std::vector<long>{3});
    // Constant sign: no changes.
    CHECK(verify::exact_sign_changes(seq({2, 0, 5, 1}), 1).empty());
    // Offset start index.
    CHECK(verify::exact_sign_changes(seq({1, -1}), 10) == std::vector<long>{10});
    CHECK_THROWS_AS(verify::exact_sign_changes(seq({0, 0, 0}), 1), std::domain_error);
    // Rational-valued sequences scan the same way.
    std::vector<mpq_class> rational = {mpq_class(1, 3), mpq_class(0), mpq_class(-2, 7)};
    CHECK(verify::exact_sign_changes(rational, 1) == std::vector<long>{2});
}

TEST_CASE("sign changes of the mod 6 difference, small prefix") {
    const auto table = exact::build_table(120);
    const auto seq = verify::difference_sequence(table, 1, 5, 6, 1, 120);
    const auto idx = verify::exact_sign_changes(seq, 1);
    CHECK(idx == std::vector<long>{7, 26, 59, 104});
}

TEST_CASE("sign changes of the mod 5 difference around the reference windows") {
    const auto table = exact::build_table(140);
    const auto seq = verify::difference_sequence(table, 1, 4, 5, 1, 140);
    const auto idx = verify::exact_sign_changes(seq, 1);
    CHECK(idx == std::vector<long>{6, 21, 48, 85, 133});
}

TEST_CASE("oracle chain: pentagonal series, row sums, residue totals agree") {
    const auto table = exact::build_table(100);
    const auto pent = exact::pentagonal_partition_series(100);
    for (int n = 0; n <= 100; ++n) {
        CHECK(table.row_sum(n) == pent[n]);
        for (int b : {2, 5, 12})
            CHECK(exact::residue_counts(table, b, n).total() == pent[n]);
    }
}

TEST_CASE("overlay of the trivial all-ones combination has zero residual") {
    const auto table = exact::build_table(80);
    std::vector<mpq_class> ones(5, mpq_class(1));
    const auto profile = asym::generic_profile(ones, 5);
    const auto rows = verify::overlay(table, ones, profile, 1, 80);
    REQUIRE(rows.size() == 80);
    for (const auto& r : rows) {
        CHECK(r.normalized == 1.0);
        CHECK(r.predicted == 1.0);
        CHECK(r.residual == 0.0);
        CHECK(r.envelope > 0.0);
    }
}

TEST_CASE("single residue class normalizes to 1/b") {
    const auto table = exact::build_table(400);
    std::vector<mpq_class> v(5, mpq_class(0));
    v[2] = 1;
    const auto profile = asym::generic_profile(v, 5);
    REQUIRE(profile.kind == asym::ProfileKind::equidistribution_main);
    CHECK(profile.main_coeff == mpq_class(1, 5));
    const auto rows = verify::overlay(table, v, profile, 1, 400);
    CHECK(std::fabs(rows.back().residual) < 1e-3);
    CHECK(std::fabs(rows.back().normalized - 0.2) < 1e-3);
}

TEST_CASE("overlay of the b = 2 difference is exactly reproduced") {
    const auto table = exact::build_table(100);
    std::vector<mpq_class> v = {mpq_class(1), mpq_class(-1)};
    const auto profile = asym::difference_profile(0, 1, 2);
    const auto rows = verify::overlay(table, v, profile, 1, 100);
    for (const auto& r : rows) {
        CHECK(r.n != 2);  // p_DO(2) = 0: the row has no positive envelope
        CHECK(r.residual == 0.0);
        CHECK(std::fabs(r.predicted) == 1.0);
    }
}

TEST_CASE("overlay rows are deterministic") {
    const auto table = exact::build_table(200);
    std::vector<mpq_class> v(6, mpq_class(0));
    v[1] = 1;
    v[5] = -1;
    const auto profile = asym::difference_profile(1, 5, 6);
    const auto rows1 = verify::overlay(table, v, profile, 1, 200);
    const auto rows2 = verify::overlay(table, v, profile, 1, 200);
    REQUIRE(rows1.size() == rows2.size());
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        CHECK(rows1[i].exact == rows2[i].exact);
        CHECK(rows1[i].envelope == rows2[i].envelope);
        CHECK(rows1[i].normalized == rows2[i].normalized);
        CHECK(rows1[i].predicted == rows2[i].predicted);
        CHECK(rows1[i].residual == rows2[i].residual);
        CHECK(rows1[i].residual == rows1[i].normalized - rows1[i].predicted);
    }
}

TEST_CASE("dyadic windows") {
    const auto w = verify::dyadic_windows(100, 801);
    REQUIRE(w.size() == 4);
    CHECK(w[0] == std::pair<long, long>{100, 200});
    CHECK(w[1] == std::pair<long, long>{200, 400});
    CHECK(w[2] == std::pair<long, long>{400, 800});
    CHECK(w[3] == std::pair<long, long>{800, 801});
    CHECK_THROWS_AS(verify::dyadic_windows(0, 100), std::invalid_argument);
}

TEST_CASE("convergence report needs two windows and summarizes correctly") {
    std::vector<verify::ComparisonRow> rows;
    for (int n = 1; n <= 20; ++n) {
        verify::ComparisonRow r;
        r.n = n;
        r.residual = (n <= 10) ? 1.0 / n : 0.001 * n;
        rows.push_back(r);
    }
    CHECK_THROWS_AS(verify::convergence_report(rows, {{1, 21}}), std::invalid_argument);
    const auto rep = verify::convergence_report(rows, {{1, 11}, {11, 21}});
    REQUIRE(rep.size() == 2);
    CHECK(rep[0].count == 10);
    CHECK(rep[0].max_abs_residual == 1.0);
    CHECK(rep[0].median_abs_residual == doctest::Approx(0.5 * (1.0 / 5 + 1.0 / 6)));
    CHECK(rep[1].max_abs_residual == doctest::Approx(0.02));
}

TEST_CASE("residual medians shrink for the mod 5 difference") {
    const auto table = exact::build_table(800);
    const auto rows = verify::overlay_difference(table, 1, 4, 5, 1, 800);
    const auto rep = verify::convergence_report(rows, {{100, 200}, {400, 800}});
    CHECK(rep[1].median_abs_residual < rep[0].median_abs_residual);
}

TEST_CASE("envelope stays positive and finite deep into the table") {
    const auto p = asym::difference_profile(1, 5, 6);
    for (int n : {1, 10, 900, 1500}) {
        const double env = asym::envelope(p, n);
        CHECK(env > 0.0);
        CHECK(std::isfinite(env));
    }
}

TEST_CASE("the omega pair tracks Q_n(zeta_20^7)") {
    // Regime-three main term: two rotating terms, omega_{2,3} on zeta_3^{-n}
    // and omega_{1,3} on zeta_3^{-2n}.  The oscillation passes close to
    // zero, so the comparison uses the envelope-normalized error averaged
    // over windows, which is what the o(1) controls.  (2 pi 7/20 sits well
    // inside the middle regime; angles close to a crossing separate from
    // the neighbouring arc only at much larger n.)
    const auto table = exact::build_table(1600);
    const auto profile = asym::qn_profile(20, 7);
    auto window_error = [&](int lo, int hi) {
        double acc = 0.0;
        for (int n = lo; n < hi; ++n) {
            const std::complex<double> exact_val = exact::qn_exact(table, 20, 7, n).evaluate();
            const std::complex<double> predicted = asym::evaluate_profile(profile, n);
            acc += std::abs(exact_val - predicted) / asym::envelope(profile, n);
        }
        return acc / (hi - lo);
    };
    const double early = window_error(150, 250);
    const double mid = window_error(700, 800);
    const double late = window_error(1500, 1600);
    CHECK(mid < early);
    CHECK(late < mid);
    CHECK(late < 0.8);
}

TEST_CASE("the zeta_3 difference oscillation tracks the data") {
    const auto table = exact::build_table(1500);
    const auto rows = verify::overlay_difference(table, 1, 2, 3, 1, 1500);
    const auto rep = verify::convergence_report(rows, {{100, 200}, {700, 1500}});
    CHECK(rep[1].median_abs_residual < rep[0].median_abs_residual);
}

TEST_CASE("Q_n(zeta_5) approaches its main term") {
    const auto table = exact::build_table(1600);
    const auto profile = asym::qn_profile(5, 1);
    auto ratio_gap = [&](int n) {
        const std::complex<double> exact_val = exact::qn_exact(table, 5, 1, n).evaluate();
        const std::complex<double> predicted = asym::evaluate_profile(profile, n);
        return std::abs(exact_val / predicted - 1.0);
    };
    CHECK(ratio_gap(1600) < ratio_gap(400));
    CHECK(ratio_gap(1600) < 0.05);
}
