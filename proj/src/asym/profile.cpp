#include "partosc/asym/profile.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "partosc/errors.hpp"
#include "partosc/exact/cyclotomic.hpp"
#include "partosc/exact/distinct_odd.hpp"
#include "partosc/exact/pentagonal.hpp"
#include "partosc/special/crossings.hpp"
#include "partosc/special/dilog.hpp"
#include "partosc/special/omega.hpp"

namespace partosc::asym {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

std::complex<double> unit_root(int b, long a) {
    const double ang = kTwoPi * static_cast<double>(((a % b) + b) % b) / b;
    return {std::cos(ang), std::sin(ang)};
}

// Li2(e^{2 pi i a / b}).
std::complex<double> dilog_at(int b, long a) {
    long r = ((a % b) + b) % b;
    return special::dilog_unit(static_cast<double>(r) / b);
}

// Prefactor of the zeta_3 arc: (1 - zeta_3^2)^{1/6} (1 - zeta_3)^{1/2}
// Gamma(1/3) / (2 (6 pi)^{2/3}).
std::complex<double> zeta3_prefactor() {
    const std::complex<double> z3 = unit_root(3, 1);
    return special::principal_pow(1.0 - z3 * z3, 1.0 / 6.0) *
           special::principal_sqrt(1.0 - z3) * std::tgamma(1.0 / 3.0) /
           (2.0 * std::pow(6.0 * kPi, 2.0 / 3.0));
}

double lambda1_zeta3() { return kPi / (3.0 * std::sqrt(6.0)); }

void set_polar(AsymptoticProfile& p, std::complex<double> w) {
    p.amplitude = std::abs(w);
    p.phase = wrap_2pi(std::arg(w));
}

// Complex coefficient K with Q_n(zeta_b^a) ~ (discrete factor) * K * n^p *
// exp(2 (l1 + i l2) sqrt n), per regime.  Fills everything except kind
// bookkeeping for the exact cases, which the callers handle.
struct MainTermParts {
    std::complex<double> coefficient;
    double lambda1, lambda2;
    double envelope_power;
    ParityFactor parity;
    std::optional<OmegaPair> omega_terms;
};

MainTermParts qn_main_term(int b, int a) {
    // 0 < a <= b/2 here.
    const double theta = kTwoPi * a / b;
    MainTermParts parts{};
    if (3 * a == b) {
        parts.coefficient = zeta3_prefactor();
        parts.lambda1 = lambda1_zeta3();
        parts.lambda2 = 0.0;
        parts.envelope_power = -2.0 / 3.0;
        parts.parity = ParityFactor::zeta3;
        return parts;
    }
    const std::complex<double> zeta = unit_root(b, a);
    const AngleRegime regime = classify_angle(theta);
    switch (regime) {
        case AngleRegime::one: {
            const std::complex<double> li2 = dilog_at(b, a);
            const std::complex<double> lambda = special::principal_sqrt(li2);
            parts.coefficient = special::principal_sqrt(1.0 - zeta) *
                                special::principal_pow(li2, 0.25) / (2.0 * std::sqrt(kPi));
            parts.lambda1 = lambda.real();
            parts.lambda2 = lambda.imag();
            parts.envelope_power = -0.75;
            parts.parity = ParityFactor::none;
            return parts;
        }
        case AngleRegime::two: {
            const std::complex<double> li2 = dilog_at(b, 2L * a);
            const std::complex<double> lambda = special::principal_sqrt(li2) / 2.0;
            parts.coefficient = special::principal_sqrt(1.0 - zeta) *
                                special::principal_pow(li2, 0.25) /
                                (2.0 * std::sqrt(2.0 * kPi));
            parts.lambda1 = lambda.real();
            parts.lambda2 = lambda.imag();
            parts.envelope_power = -0.75;
            parts.parity = ParityFactor::alternating;
            return parts;
        }
        case AngleRegime::pair: {
            const std::complex<double> li2 = dilog_at(b, 3L * a);
            const std::complex<double> lambda = special::principal_sqrt(li2) / 3.0;
            parts.coefficient =
                special::principal_pow(li2, 0.25) / (2.0 * std::sqrt(3.0 * kPi));
            parts.lambda1 = lambda.real();
            parts.lambda2 = lambda.imag();
            parts.envelope_power = -0.75;
            parts.parity = ParityFactor::none;  // carried by the omega pair
            // zeta_3^{-n} carries omega_{2,3}, zeta_3^{-2n} carries
            // omega_{1,3}; the pairing is fixed by the exact coefficients
            // (sweeps of Q_n(zeta_20^7) converge only this way around).
            const std::complex<double> w23 = special::omega(2, 3, zeta);
            const std::complex<double> w13 = special::omega(1, 3, zeta);
            OmegaPair pair;
            pair.rot1 = {std::abs(w23), wrap_2pi(std::arg(w23))};
            pair.rot2 = {std::abs(w13), wrap_2pi(std::arg(w13))};
            parts.omega_terms = pair;
            return parts;
        }
    }
    throw std::logic_error("qn_main_term: unreachable");
}

ProfileKind kind_from_parts(const MainTermParts& parts, int b, int a) {
    if (3 * a == b) return ProfileKind::zeta3_special;
    if (parts.omega_terms) return ProfileKind::cosine_pair_omega;
    return ProfileKind::cosine_single;
}

// Eligibility of a = 0..floor(b/2): true when zeta_b^a is not a root of the
// weight polynomial.
std::vector<bool> eligible_exact(const std::vector<mpq_class>& v, int b) {
    mpz_class lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> coeffs(v.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpq_class scaled = v[i] * mpq_class(lcm);
        coeffs[i] = scaled.get_num();
        if (coeffs[i] != 0) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("generic_profile: zero weight vector");
    const exact::IntPolynomial poly{std::move(coeffs)};
    std::vector<bool> eligible(static_cast<std::size_t>(b / 2) + 1);
    for (int a = 0; a <= b / 2; ++a) {
        const int d = b / std::gcd(a, b);
        eligible[static_cast<std::size_t>(a)] =
            !poly.remainder_by_monic(exact::cyclotomic_polynomial(d)).is_zero();
    }
    return eligible;
}

std::vector<bool> eligible_numeric(const std::vector<double>& v, int b) {
    constexpr double tol = 1e-9;
    std::cerr << "partosc: floating weight vector; root-of-P detection uses |P| < " << tol
              << " numerically\n";
    std::vector<bool> eligible(static_cast<std::size_t>(b / 2) + 1);
    bool any = false;
    for (int a = 0; a <= b / 2; ++a) {
        std::complex<double> val = 0.0;
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            val = val * unit_root(b, a) + v[static_cast<std::size_t>(i)];
        eligible[static_cast<std::size_t>(a)] = std::abs(val) >= tol;
        any = any || eligible[static_cast<std::size_t>(a)];
    }
    if (!any) throw std::domain_error("generic_profile: every root of unity rejected numerically");
    return eligible;
}

int pick_dominant(const std::vector<bool>& eligible, int b) {
    int a0 = -1;
    double best = 0.0;
    for (int a = 0; a <= b / 2; ++a) {
        if (!eligible[static_cast<std::size_t>(a)]) continue;
        const double re_l = special::L_function(kTwoPi * a / b).real();
        if (a0 < 0 || re_l > best) {
            a0 = a;
            best = re_l;
        }
    }
    if (a0 < 0) throw std::domain_error("generic_profile: every root of unity rejected");
    for (int a = 0; a <= b / 2; ++a) {
        if (a == a0 || !eligible[static_cast<std::size_t>(a)]) continue;
        const double re_l = special::L_function(kTwoPi * a / b).real();
        if (std::fabs(re_l - best) < 1e-12)
            throw boundary_error("generic_profile: two dominant candidates tie in Re L");
    }
    return a0;
}

template <typename T>
std::complex<double> poly_value_at(const std::vector<T>& v, int b, long power) {
    // P_v(zeta_b^power) by direct summation.
    std::complex<double> acc = 0.0;
    for (int a = 0; a < static_cast<int>(v.size()); ++a) {
        double coeff;
        if constexpr (std::is_same_v<T, mpq_class>)
            coeff = v[static_cast<std::size_t>(a)].get_d();
        else
            coeff = v[static_cast<std::size_t>(a)];
        if (coeff == 0.0) continue;
        acc += coeff * unit_root(b, power * a);
    }
    return acc;
}

template <typename T>
AsymptoticProfile real_profile_from_weights(const std::vector<T>& v, int b,
                                            const std::vector<bool>& eligible) {
    const int a0 = pick_dominant(eligible, b);
    AsymptoticProfile p;
    p.b = b;
    p.dominant = a0;
    p.complex_valued = false;

    auto rational_sum = [&](int sign_base) {
        mpq_class acc = 0;
        int s = 1;
        for (std::size_t a = 0; a < v.size(); ++a) {
            if constexpr (std::is_same_v<T, mpq_class>)
                acc += (s > 0) ? v[a] : mpq_class(-v[a]);
            else
                acc += (s > 0) ? mpq_class(v[a]) : mpq_class(-v[a]);
            if (sign_base < 0) s = -s;
        }
        return acc;
    };

    if (a0 == 0) {
        p.kind = ProfileKind::equidistribution_main;
        p.main_coeff = rational_sum(+1) / b;
        p.main_coeff.canonicalize();
        p.amplitude = std::fabs(p.main_coeff.get_d());
        p.phase = (p.main_coeff < 0) ? kPi : 0.0;
        p.lambda1 = special::L_function(0.0).real();
        p.lambda2 = 0.0;
        p.envelope_power = 0.0;
        return p;
    }
    if (2 * a0 == b) {
        p.kind = ProfileKind::qn_minus_one;
        p.main_coeff = rational_sum(-1) / b;
        p.main_coeff.canonicalize();
        p.amplitude = std::fabs(p.main_coeff.get_d());
        p.phase = (p.main_coeff < 0) ? kPi : 0.0;
        p.lambda1 = kPi / (2.0 * std::sqrt(6.0));  // growth of Q_n(-1)
        p.lambda2 = 0.0;
        p.envelope_power = -0.75;
        p.parity = ParityFactor::alternating;
        return p;
    }

    const MainTermParts parts = qn_main_term(b, a0);
    p.kind = kind_from_parts(parts, b, a0);
    p.lambda1 = parts.lambda1;
    p.lambda2 = parts.lambda2;
    p.envelope_power = parts.envelope_power;
    p.parity = parts.parity;
    p.omega_terms = parts.omega_terms;
    // The conjugate pair zeta_b^{a0}, zeta_b^{-a0} contributes
    // (2/b) Re(P_v(zeta_b^{-a0}) Q_n(zeta_b^{a0})).
    const std::complex<double> pval = poly_value_at(v, b, -a0);
    set_polar(p, (2.0 / b) * pval * parts.coefficient);
    return p;
}

}  // namespace

const char* kind_name(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::equidistribution_main: return "equidistribution-main";
        case ProfileKind::cosine_single: return "cosine-single";
        case ProfileKind::cosine_pair_omega: return "cosine-pair-omega";
        case ProfileKind::zeta3_special: return "zeta3-special";
        case ProfileKind::qn_minus_one: return "qn-minus-one";
    }
    return "unknown";
}

int AsymptoticProfile::dominant_order() const {
    if (b == 0) return 1;
    return b / std::gcd(dominant == 0 ? b : dominant, b);
}

ExactBackdrop::ExactBackdrop(int n_max)
    : partitions_(exact::pentagonal_partition_series(n_max)),
      distinct_odd_(exact::distinct_odd_series(n_max)) {}

AngleRegime classify_angle(double theta) {
    if (!(theta > 0.0 && theta < kPi))
        throw std::invalid_argument("classify_angle: theta must lie in (0, pi)");
    const special::CrossingPair& c = special::crossings();
    if (std::fabs(theta - c.theta13) < 1e-12 || std::fabs(theta - c.theta23) < 1e-12)
        throw boundary_error("classify_angle: theta coincides with a crossing angle");
    if (theta < c.theta13) return AngleRegime::one;
    if (theta < c.theta23) return AngleRegime::pair;
    return AngleRegime::two;
}

AsymptoticProfile qn_profile(int b, int a) {
    if (b < 2) throw std::invalid_argument("qn_profile: b must be >= 2");
    if (a < 0 || a >= b) throw std::invalid_argument("qn_profile: a must lie in [0, b)");
    AsymptoticProfile p;
    p.b = b;
    p.complex_valued = true;
    if (a == 0) {
        p.kind = ProfileKind::equidistribution_main;
        p.dominant = 0;
        p.main_coeff = 1;
        p.amplitude = 1.0;
        p.lambda1 = special::L_function(0.0).real();
        p.envelope_power = 0.0;
        return p;
    }
    if (2 * a == b) {
        p.kind = ProfileKind::qn_minus_one;
        p.dominant = a;
        p.main_coeff = 1;
        p.amplitude = 1.0;
        p.lambda1 = kPi / (2.0 * std::sqrt(6.0));
        p.envelope_power = -0.75;
        p.parity = ParityFactor::alternating;
        return p;
    }
    int ar = a;
    if (2 * a > b) {
        ar = b - a;
        p.conjugated = true;
    }
    p.dominant = ar;
    const MainTermParts parts = qn_main_term(b, ar);
    p.kind = kind_from_parts(parts, b, ar);
    p.lambda1 = parts.lambda1;
    p.lambda2 = parts.lambda2;
    p.envelope_power = parts.envelope_power;
    p.parity = parts.parity;
    p.omega_terms = parts.omega_terms;
    set_polar(p, parts.coefficient);
    return p;
}

AsymptoticProfile difference_profile(int a1, int a2, int b) {
    if (b < 2) throw std::invalid_argument("difference_profile: b must be >= 2");
    if (a1 == a2) throw std::invalid_argument("difference_profile: a1 == a2");
    if (a1 < 0 || a1 >= b || a2 < 0 || a2 >= b)
        throw std::invalid_argument("difference_profile: residues must lie in [0, b)");
    std::vector<mpq_class> v(static_cast<std::size_t>(b), mpq_class(0));
    v[static_cast<std::size_t>(a1)] = 1;
    v[static_cast<std::size_t>(a2)] = -1;
    return generic_profile(v, b);
}

AsymptoticProfile generic_profile(const std::vector<mpq_class>& v, int b) {
    if (b < 2) throw std::invalid_argument("generic_profile: b must be >= 2");
    if (static_cast<int>(v.size()) != b)
        throw std::invalid_argument("generic_profile: weight vector length differs from b");
    return real_profile_from_weights(v, b, eligible_exact(v, b));
}

AsymptoticProfile generic_profile(const std::vector<double>& v, int b) {
    if (b < 2) throw std::invalid_argument("generic_profile: b must be >= 2");
    if (static_cast<int>(v.size()) != b)
        throw std::invalid_argument("generic_profile: weight vector length differs from b");
    return real_profile_from_weights(v, b, eligible_numeric(v, b));
}

std::vector<mpq_class> SetDifferenceSpec::weights() const {
    if (b < 2) throw std::invalid_argument("SetDifferenceSpec: b must be >= 2");
    std::vector<mpq_class> v(static_cast<std::size_t>(b), mpq_class(0));
    std::set<int> seen;
    for (int a : s1) {
        if (a < 0 || a >= b) throw std::invalid_argument("SetDifferenceSpec: residue outside [0, b)");
        if (!seen.insert(a).second) throw std::invalid_argument("SetDifferenceSpec: repeated residue");
        v[static_cast<std::size_t>(a)] = 1;
    }
    for (int a : s2) {
        if (a < 0 || a >= b) throw std::invalid_argument("SetDifferenceSpec: residue outside [0, b)");
        if (!seen.insert(a).second)
            throw std::invalid_argument("SetDifferenceSpec: S1 and S2 must be disjoint");
        v[static_cast<std::size_t>(a)] = -1;
    }
    return v;
}

AsymptoticProfile set_difference_profile(const SetDifferenceSpec& spec) {
    return generic_profile(spec.weights(), spec.b);
}

int largest_unkilled_divisor(const std::vector<mpq_class>& v, int b) {
    if (b < 2) throw std::invalid_argument("largest_unkilled_divisor: b must be >= 2");
    if (static_cast<int>(v.size()) != b)
        throw std::invalid_argument("largest_unkilled_divisor: weight vector length differs from b");
    mpz_class lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> coeffs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) coeffs[i] = mpq_class(v[i] * mpq_class(lcm)).get_num();
    const exact::IntPolynomial poly{std::move(coeffs)};
    if (poly.is_zero()) throw std::invalid_argument("largest_unkilled_divisor: zero weight vector");
    for (int d = b; d >= 1; --d) {
        if (b % d != 0) continue;
        if (!poly.remainder_by_monic(exact::cyclotomic_polynomial(d)).is_zero()) return d;
    }
    throw std::logic_error("largest_unkilled_divisor: polynomial divisible by x^b - 1");
}

AsymptoticProfile shift_profile(const AsymptoticProfile& profile, int r) {
    if (profile.kind != ProfileKind::cosine_single || profile.parity != ParityFactor::none)
        throw std::invalid_argument("shift_profile: requires a plain cosine-single profile");
    AsymptoticProfile shifted = profile;
    shifted.phase = wrap_2pi(profile.phase - kTwoPi * r / profile.dominant_order());
    return shifted;
}

namespace {

double log_envelope(const AsymptoticProfile& p, int n) {
    return std::log(p.amplitude) + p.envelope_power * std::log(static_cast<double>(n)) +
           2.0 * p.lambda1 * std::sqrt(static_cast<double>(n));
}

bool exact_backed(ProfileKind k) {
    return k == ProfileKind::equidistribution_main || k == ProfileKind::qn_minus_one;
}

double discrete_phase(const AsymptoticProfile& p, int n) {
    switch (p.parity) {
        case ParityFactor::none: return 0.0;
        case ParityFactor::alternating: return kPi * (n % 2);
        case ParityFactor::zeta3: return -4.0 * kPi * (n % 3) / 3.0;
    }
    return 0.0;
}

}  // namespace

double envelope(const AsymptoticProfile& profile, int n) {
    if (n < 1) throw std::invalid_argument("envelope: n must be >= 1");
    if (exact_backed(profile.kind))
        throw std::invalid_argument("envelope: profile needs the exact backdrop overload");
    return std::exp(log_envelope(profile, n));
}

double envelope(const AsymptoticProfile& profile, int n, const ExactBackdrop& exact) {
    if (n < 1) throw std::invalid_argument("envelope: n must be >= 1");
    switch (profile.kind) {
        case ProfileKind::equidistribution_main: return exact.partitions(n).get_d();
        case ProfileKind::qn_minus_one: return exact.distinct_odd(n).get_d();
        default: return std::exp(log_envelope(profile, n));
    }
}

double predicted_oscillation(const AsymptoticProfile& profile, int n) {
    if (profile.complex_valued)
        throw std::invalid_argument("predicted_oscillation: complex-valued profile");
    const double coeff = profile.main_coeff.get_d();
    switch (profile.kind) {
        case ProfileKind::equidistribution_main: return coeff;
        case ProfileKind::qn_minus_one: return (n % 2 == 0) ? coeff : -coeff;
        case ProfileKind::cosine_single:
            return std::cos(profile.phase + discrete_phase(profile, n) +
                            2.0 * profile.lambda2 * std::sqrt(static_cast<double>(n)));
        case ProfileKind::zeta3_special:
            return std::cos(profile.phase - 4.0 * kPi * (n % 3) / 3.0);
        case ProfileKind::cosine_pair_omega: {
            const auto& pair = *profile.omega_terms;
            const double drift = 2.0 * profile.lambda2 * std::sqrt(static_cast<double>(n));
            return pair.rot1.amplitude *
                       std::cos(profile.phase + pair.rot1.phase - 2.0 * kPi * (n % 3) / 3.0 +
                                drift) +
                   pair.rot2.amplitude *
                       std::cos(profile.phase + pair.rot2.phase - 4.0 * kPi * (n % 3) / 3.0 +
                                drift);
        }
    }
    throw std::logic_error("predicted_oscillation: unreachable");
}

std::complex<double> evaluate_profile(const AsymptoticProfile& profile, int n) {
    if (n < 1) throw std::invalid_argument("evaluate_profile: n must be >= 1");
    if (exact_backed(profile.kind))
        throw std::invalid_argument("evaluate_profile: profile needs the exact backdrop overload");
    if (!profile.complex_valued)
        return {envelope(profile, n) * predicted_oscillation(profile, n), 0.0};

    const double env = std::exp(log_envelope(profile, n));
    const double drift = 2.0 * profile.lambda2 * std::sqrt(static_cast<double>(n));
    std::complex<double> osc;
    if (profile.kind == ProfileKind::cosine_pair_omega) {
        const auto& pair = *profile.omega_terms;
        osc = pair.rot1.amplitude *
                  std::polar(1.0,
                             profile.phase + pair.rot1.phase - 2.0 * kPi * (n % 3) / 3.0 + drift) +
              pair.rot2.amplitude *
                  std::polar(1.0,
                             profile.phase + pair.rot2.phase - 4.0 * kPi * (n % 3) / 3.0 + drift);
    } else {
        osc = std::polar(1.0, profile.phase + discrete_phase(profile, n) + drift);
    }
    std::complex<double> value = env * osc;
    return profile.conjugated ? std::conj(value) : value;
}

std::complex<double> evaluate_profile(const AsymptoticProfile& profile, int n,
                                      const ExactBackdrop& exact) {
    if (n < 1) throw std::invalid_argument("evaluate_profile: n must be >= 1");
    switch (profile.kind) {
        case ProfileKind::equidistribution_main:
            return {mpq_class(profile.main_coeff * exact.partitions(n)).get_d(), 0.0};
        case ProfileKind::qn_minus_one: {
            mpq_class val = profile.main_coeff * exact.distinct_odd(n);
            if (n % 2 == 1) val = -val;
            return {val.get_d(), 0.0};
        }
        default: return evaluate_profile(profile, n);
    }
}

std::vector<long> predict_sign_changes(const AsymptoticProfile& profile, long n_max) {
    if (profile.kind != ProfileKind::cosine_single || profile.parity != ParityFactor::none)
        throw std::invalid_argument("predict_sign_changes: requires a plain cosine-single profile");
    if (profile.lambda2 == 0.0)
        throw std::domain_error("predict_sign_changes: lambda2 = 0, no oscillation");
    // cos is even: a negative drift is the mirrored profile.
    double lambda2 = profile.lambda2;
    double phase = profile.phase;
    if (lambda2 < 0.0) {
        lambda2 = -lambda2;
        phase = wrap_2pi(-phase);
    }
    std::vector<long> out;
    for (long k = 0;; ++k) {
        const double root = (kPi / 2.0 + k * kPi - phase) / (2.0 * lambda2);
        if (root <= 0.0) continue;
        const double crossing = root * root;
        if (crossing > static_cast<double>(n_max)) break;
        const double fl = std::floor(crossing);
        long index = static_cast<long>(fl);
        if (crossing == fl) --index;  // integral crossing: last index before the flip
        if (index >= 1) out.push_back(index);
    }
    return out;
}

}  // namespace partosc::asym
