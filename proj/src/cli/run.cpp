#include "partosc/cli/run.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "partosc/asym/profile.hpp"
#include "partosc/errors.hpp"
#include "partosc/exact/cyclotomic.hpp"
#include "partosc/exact/distinct_odd.hpp"
#include "partosc/exact/pentagonal.hpp"
#include "partosc/exact/table.hpp"
#include "partosc/special/crossings.hpp"
#include "partosc/verify/overlay.hpp"

namespace partosc::cli {

namespace {

std::string fmt(double x, int digits) {
    std::ostringstream o;
    o << std::setprecision(digits) << x;
    return o.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<mpq_class> parse_weight_list(const std::string& text) {
    std::vector<mpq_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        mpq_class q(item, 10);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

const char* parity_name(asym::ParityFactor p) {
    switch (p) {
        case asym::ParityFactor::none: return "none";
        case asym::ParityFactor::alternating: return "(-1)^n";
        case asym::ParityFactor::zeta3: return "zeta_3^{-2n}";
    }
    return "unknown";
}

void print_profile(std::ostream& out, const asym::AsymptoticProfile& p, int digits) {
    out << "kind = " << asym::kind_name(p.kind) << "\n";
    out << "b = " << p.b << "\n";
    out << "dominant = " << p.dominant << " (order " << p.dominant_order() << ")\n";
    if (p.conjugated) out << "conjugated = true\n";
    out << "lambda1 = " << fmt(p.lambda1, digits) << "\n";
    out << "lambda2 = " << fmt(p.lambda2, digits) << "\n";
    out << "amplitude = " << fmt(p.amplitude, digits) << "\n";
    out << "phase = " << fmt(p.phase, digits) << "\n";
    out << "envelope_power = " << fmt(p.envelope_power, digits) << "\n";
    out << "parity = " << parity_name(p.parity) << "\n";
    if (p.omega_terms) {
        out << "pair term 1 (zeta_3^{-n}): amplitude = "
            << fmt(p.omega_terms->rot1.amplitude, digits)
            << ", phase = " << fmt(p.omega_terms->rot1.phase, digits) << "\n";
        out << "pair term 2 (zeta_3^{-2n}): amplitude = "
            << fmt(p.omega_terms->rot2.amplitude, digits)
            << ", phase = " << fmt(p.omega_terms->rot2.phase, digits) << "\n";
    }
    if (p.kind == asym::ProfileKind::equidistribution_main ||
        p.kind == asym::ProfileKind::qn_minus_one)
        out << "coeff = " << p.main_coeff.get_str() << "\n";
}

struct Selector {
    std::optional<int> a;
    std::optional<int> a1, a2;
    std::string s1_text, s2_text;
    std::string weights_text;

    int count_groups() const {
        int groups = 0;
        if (a) ++groups;
        if (a1 || a2) ++groups;
        if (!s1_text.empty() || !s2_text.empty()) ++groups;
        if (!weights_text.empty()) ++groups;
        return groups;
    }
};

// Builds the (weights, profile, description) triple of one selector group.
struct Selection {
    std::vector<mpq_class> weights;
    asym::AsymptoticProfile profile;
    std::string description;
    std::optional<int> d0;  // set selectors only
};

Selection make_selection(const Selector& sel, int b) {
    Selection s;
    if (sel.a1 && sel.a2) {
        s.profile = asym::difference_profile(*sel.a1, *sel.a2, b);
        s.weights.assign(static_cast<std::size_t>(b), mpq_class(0));
        s.weights.at(static_cast<std::size_t>(*sel.a1)) = 1;
        s.weights.at(static_cast<std::size_t>(*sel.a2)) = -1;
        s.description = "difference a1=" + std::to_string(*sel.a1) + " a2=" + std::to_string(*sel.a2);
        return s;
    }
    if (!sel.s1_text.empty() || !sel.s2_text.empty()) {
        asym::SetDifferenceSpec spec;
        spec.b = b;
        spec.s1 = parse_int_list(sel.s1_text);
        spec.s2 = parse_int_list(sel.s2_text);
        s.weights = spec.weights();
        s.profile = asym::set_difference_profile(spec);
        s.d0 = asym::largest_unkilled_divisor(s.weights, b);
        s.description = "sets S1={" + sel.s1_text + "} S2={" + sel.s2_text + "}";
        return s;
    }
    if (!sel.weights_text.empty()) {
        s.weights = parse_weight_list(sel.weights_text);
        s.profile = asym::generic_profile(s.weights, b);
        s.description = "weights " + sel.weights_text;
        return s;
    }
    if (sel.a) {
        s.profile = asym::qn_profile(b, *sel.a);
        s.description = "qn twist a=" + std::to_string(*sel.a);
        return s;  // no real weight vector: Q_n profile is complex
    }
    throw CLI::ValidationError("selector", "one of --a, --a1/--a2, --s1/--s2, --weights is required");
}

void write_rows_csv(std::ostream& out, const std::vector<verify::ComparisonRow>& rows, int digits) {
    out << "n,exact,envelope,normalized,predicted,residual\n";
    for (const auto& r : rows)
        out << r.n << ',' << fmt(r.exact, digits) << ',' << fmt(r.envelope, digits) << ','
            << fmt(r.normalized, digits) << ',' << fmt(r.predicted, digits) << ','
            << fmt(r.residual, digits) << '\n';
}

template <typename T>
void print_list(std::ostream& out, const std::string& label, const std::vector<T>& xs) {
    out << label;
    for (const auto& x : xs) out << ' ' << x;
    out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"partition residue statistics and oscillating asymptotics"};
    app.require_subcommand(1);
    int digits = 12;
    app.add_option("--digits", digits, "significant digits for floating output");

    // crossings
    auto* cmd_crossings = app.add_subcommand("crossings", "print the regime boundary angles");

    // compute
    auto* cmd_compute = app.add_subcommand("compute", "exact values from the partition table");
    int c_b = 0, c_n = -1, c_j = -1, c_budget = exact::PartCountTable::default_budget;
    std::string c_what = "residues";
    cmd_compute->add_option("--b", c_b, "modulus");
    cmd_compute->add_option("--n", c_n, "index n")->required();
    cmd_compute->add_option("--what", c_what, "residues|qn|pn|pdo")
        ->check(CLI::IsMember({"residues", "qn", "pn", "pdo"}));
    cmd_compute->add_option("--j", c_j, "twist index for --what qn");
    cmd_compute->add_option("--budget", c_budget, "table memory budget");

    // constants
    auto* cmd_constants = app.add_subcommand("constants", "profile constants for a selector");
    int k_b = 0;
    Selector k_sel;
    int k_a = -1, k_a1 = -1, k_a2 = -1;
    cmd_constants->add_option("--b", k_b, "modulus")->required();
    cmd_constants->add_option("--a", k_a, "twist index (Q_n profile)");
    cmd_constants->add_option("--a1", k_a1, "first residue");
    cmd_constants->add_option("--a2", k_a2, "second residue");
    cmd_constants->add_option("--s1", k_sel.s1_text, "comma list of residues (positive side)");
    cmd_constants->add_option("--s2", k_sel.s2_text, "comma list of residues (negative side)");
    cmd_constants->add_option("--weights", k_sel.weights_text, "comma list of rational weights");
    int k_shift = 0;
    cmd_constants->add_option("--shift", k_shift, "report the profile shifted by r");

    // signchanges
    auto* cmd_signs = app.add_subcommand("signchanges", "exact vs predicted sign-change indices");
    int s_b = 0, s_a1 = -1, s_a2 = -1, s_nmax = 900, s_budget = exact::PartCountTable::default_budget;
    cmd_signs->add_option("--b", s_b, "modulus")->required();
    cmd_signs->add_option("--a1", s_a1, "first residue")->required();
    cmd_signs->add_option("--a2", s_a2, "second residue")->required();
    cmd_signs->add_option("--nmax", s_nmax, "largest n");
    cmd_signs->add_option("--budget", s_budget, "table memory budget");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "overlay prediction and report residuals");
    int v_b = 0, v_a1 = -1, v_a2 = -1, v_nmax = 900, v_budget = exact::PartCountTable::default_budget;
    int v_window_lo = 100;
    Selector v_sel;
    cmd_verify->add_option("--b", v_b, "modulus")->required();
    cmd_verify->add_option("--a1", v_a1, "first residue");
    cmd_verify->add_option("--a2", v_a2, "second residue");
    cmd_verify->add_option("--s1", v_sel.s1_text, "comma list of residues (positive side)");
    cmd_verify->add_option("--s2", v_sel.s2_text, "comma list of residues (negative side)");
    cmd_verify->add_option("--weights", v_sel.weights_text, "comma list of rational weights");
    cmd_verify->add_option("--nmax", v_nmax, "largest n");
    cmd_verify->add_option("--window-lo", v_window_lo, "first dyadic window start");
    cmd_verify->add_option("--budget", v_budget, "table memory budget");

    // export-figure
    auto* cmd_figure = app.add_subcommand("export-figure", "CSV data for one figure");
    int f_figure = 0, f_b = 0, f_a1 = -1, f_a2 = -1, f_nmax = 900;
    int f_budget = exact::PartCountTable::default_budget;
    double f_step = 1e-3;
    std::string f_output;
    cmd_figure->add_option("--figure", f_figure, "figure number 1-4")->required()
        ->check(CLI::Range(1, 4));
    cmd_figure->add_option("--b", f_b, "modulus");
    cmd_figure->add_option("--a1", f_a1, "first residue");
    cmd_figure->add_option("--a2", f_a2, "second residue");
    cmd_figure->add_option("--nmax", f_nmax, "largest n");
    cmd_figure->add_option("--step", f_step, "theta grid step (figure 3)");
    cmd_figure->add_option("--output", f_output, "output path (default stdout)");
    cmd_figure->add_option("--budget", f_budget, "table memory budget");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_crossings->parsed()) {
            const special::CrossingPair c = special::find_crossings();
            out << "theta13 = " << fmt(c.theta13, digits) << "\n";
            out << "theta23 = " << fmt(c.theta23, digits) << "\n";
            return 0;
        }

        if (cmd_compute->parsed()) {
            if (c_n < 0) {
                err << "usage error: --n must be >= 0\n";
                return 2;
            }
            if (c_what == "pn") {
                out << "p(" << c_n << ") = "
                    << exact::pentagonal_partition_series(c_n).back().get_str() << "\n";
                return 0;
            }
            if (c_what == "pdo") {
                out << "p_DO(" << c_n << ") = " << exact::distinct_odd_count(c_n).get_str() << "\n";
                return 0;
            }
            if (c_b < 2) {
                err << "usage error: --b >= 2 is required for --what " << c_what << "\n";
                return 2;
            }
            const exact::PartCountTable table = exact::build_table(c_n, c_budget);
            if (c_what == "residues") {
                const exact::ResidueVector r = exact::residue_counts(table, c_b, c_n);
                for (int a = 0; a < c_b; ++a)
                    out << "p(" << a << "," << c_b << "," << c_n << ") = "
                        << r.entries[static_cast<std::size_t>(a)].get_str() << "\n";
                return 0;
            }
            // qn
            if (c_j < 0 || c_j >= c_b) {
                err << "usage error: --what qn requires --j in [0, b)\n";
                return 2;
            }
            const exact::CyclotomicInteger q = exact::qn_exact(table, c_b, c_j, c_n);
            for (int c = 0; c < c_b; ++c)
                out << "coeff[" << c << "] = " << q.coeff(c).get_str() << "\n";
            const std::complex<double> val = q.evaluate();
            out << "value = " << fmt(val.real(), digits) << " + " << fmt(val.imag(), digits)
                << "i\n";
            return 0;
        }

        if (cmd_constants->parsed()) {
            if (k_a >= 0) k_sel.a = k_a;
            if (k_a1 >= 0) k_sel.a1 = k_a1;
            if (k_a2 >= 0) k_sel.a2 = k_a2;
            if ((k_sel.a1.has_value()) != (k_sel.a2.has_value())) {
                err << "usage error: --a1 and --a2 must be given together\n";
                return 2;
            }
            if (k_sel.count_groups() != 1) {
                err << "usage error: exactly one of --a, --a1/--a2, --s1/--s2, --weights\n";
                return 2;
            }
            Selection s = make_selection(k_sel, k_b);
            if (k_shift != 0) s.profile = asym::shift_profile(s.profile, k_shift);
            out << "input: b=" << k_b << " " << s.description;
            if (k_shift != 0) out << " shift=" << k_shift;
            out << "\n";
            print_profile(out, s.profile, digits);
            if (s.d0) out << "d0 = " << *s.d0 << "\n";
            return 0;
        }

        if (cmd_signs->parsed()) {
            const exact::PartCountTable table = exact::build_table(s_nmax, s_budget);
            const auto seq = verify::difference_sequence(table, s_a1, s_a2, s_b, 1, s_nmax);
            const auto exact_idx = verify::exact_sign_changes(seq, 1);
            const auto prof = asym::difference_profile(s_a1, s_a2, s_b);
            const auto pred_idx = asym::predict_sign_changes(prof, s_nmax);
            print_list(out, "exact:", exact_idx);
            print_list(out, "predicted:", pred_idx);
            std::set<long> se(exact_idx.begin(), exact_idx.end());
            std::set<long> sp(pred_idx.begin(), pred_idx.end());
            std::vector<long> sym;
            std::set_symmetric_difference(se.begin(), se.end(), sp.begin(), sp.end(),
                                          std::back_inserter(sym));
            print_list(out, "symmetric_difference:", sym);
            return 0;
        }

        if (cmd_verify->parsed()) {
            if (v_a1 >= 0) v_sel.a1 = v_a1;
            if (v_a2 >= 0) v_sel.a2 = v_a2;
            if (v_sel.count_groups() != 1) {
                err << "usage error: exactly one of --a1/--a2, --s1/--s2, --weights\n";
                return 2;
            }
            Selection s = make_selection(v_sel, v_b);
            const exact::PartCountTable table = exact::build_table(v_nmax, v_budget);
            const auto rows = verify::overlay(table, s.weights, s.profile, 1, v_nmax);
            if (v_nmax <= 2 * v_window_lo) {
                err << "usage error: --nmax must exceed twice --window-lo\n";
                return 2;
            }
            const auto windows = verify::dyadic_windows(v_window_lo, v_nmax + 1);
            const auto report = verify::convergence_report(rows, windows);
            out << "input: b=" << v_b << " " << s.description << "\n";
            for (const auto& w : report)
                out << "window [" << w.lo << "," << w.hi << "): count=" << w.count
                    << " max|residual|=" << fmt(w.max_abs_residual, digits)
                    << " median|residual|=" << fmt(w.median_abs_residual, digits) << "\n";
            return 0;
        }

        if (cmd_figure->parsed()) {
            std::ofstream file;
            std::ostream* sink = &out;
            if (!f_output.empty()) {
                file.open(f_output, std::ios::binary);  // LF line endings
                if (!file) {
                    err << "error: cannot open output file " << f_output << "\n";
                    return 3;
                }
                sink = &file;
            }
            if (f_figure == 3) {
                *sink << "theta,reL\n";
                for (double theta = 0.0; theta <= std::numbers::pi + 1e-12; theta += f_step) {
                    const double t = std::min(theta, std::numbers::pi);
                    try {
                        *sink << fmt(t, digits) << ',' << fmt(special::L_function(t).real(), digits)
                              << '\n';
                    } catch (const boundary_error&) {
                        // crossing angles are excluded points
                    }
                }
                return 0;
            }
            int b = f_b, a1 = f_a1, a2 = f_a2;
            if (b == 0) {
                b = (f_figure == 4) ? 6 : 5;
                a1 = 1;
                a2 = (f_figure == 4) ? 5 : 4;
            }
            if (a1 < 0 || a2 < 0) {
                err << "usage error: --a1/--a2 required with --b\n";
                return 2;
            }
            const exact::PartCountTable table = exact::build_table(f_nmax, f_budget);
            if (f_figure == 1) {
                const auto seq = verify::difference_sequence(table, a1, a2, b, 1, f_nmax);
                *sink << "n,log10_abs_exact,sign\n";
                for (int n = 1; n <= f_nmax; ++n) {
                    const mpz_class& d = seq[static_cast<std::size_t>(n - 1)];
                    const int s = sgn(d);
                    const double mag = std::fabs(d.get_d());
                    *sink << n << ',' << (s == 0 ? std::string("-inf") : fmt(std::log10(mag), digits))
                          << ',' << s << '\n';
                }
                return 0;
            }
            // figures 2 and 4: overlay CSV
            const auto rows = verify::overlay_difference(table, a1, a2, b, 1, f_nmax);
            write_rows_csv(*sink, rows, digits);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace partosc::cli
