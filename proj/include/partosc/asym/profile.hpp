#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <vector>

namespace partosc::asym {

// Which main-term shape applies.
enum class ProfileKind {
    equidistribution_main,  // coeff * p(n), exact series substituted
    cosine_single,          // A n^p e^{2 l1 sqrt n} cos(phase [+ pi n] + 2 l2 sqrt n)
    cosine_pair_omega,      // two cosines carrying zeta_3^{-n} / zeta_3^{-2n} and omega_{1,3}, omega_{2,3}
    zeta3_special,          // A n^{-2/3} e^{2 l1 sqrt n} cos(phase - 4 pi n / 3)
    qn_minus_one,           // coeff * Q_n(-1) = coeff * (-1)^n p_DO(n), exact series substituted
};

const char* kind_name(ProfileKind kind);

// Discrete per-n oscillation attached to the main term.
enum class ParityFactor {
    none,
    alternating,  // (-1)^n, i.e. extra phase pi*n
    zeta3,        // zeta_3^{-2n}, i.e. extra phase -4 pi n / 3
};

struct OmegaTerm {
    double amplitude = 0.0;  // >= 0
    double phase = 0.0;      // [0, 2 pi)
};

// The two arc constants of the pair regime.  rot1 is carried by the
// zeta_3^{-n} rotation and holds omega_{2,3}(zeta_b^{a0}); rot2 is carried
// by zeta_3^{-2n} and holds omega_{1,3}(zeta_b^{a0}).  (Checked against
// exact coefficients; the h = 1 arc contributes the omega_{2,3} product.)
struct OmegaPair {
    OmegaTerm rot1;
    OmegaTerm rot2;
};

// Complete evaluable prediction for one sequence: dominant root of unity,
// envelope A n^p exp(2 lambda1 sqrt n), and the oscillating factor.
struct AsymptoticProfile {
    ProfileKind kind = ProfileKind::cosine_single;
    int b = 0;          // modulus of the underlying family
    int dominant = 0;   // index a0 of the dominant root zeta_b^{a0}, 0 <= a0 <= b/2
    bool complex_valued = false;  // Q_n profile rather than a real combination
    bool conjugated = false;      // complex profile reduced from a > b/2
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double amplitude = 0.0;       // A >= 0
    double phase = 0.0;           // [0, 2 pi)
    double envelope_power = -0.75;
    ParityFactor parity = ParityFactor::none;
    std::optional<OmegaPair> omega_terms;  // pair regime only
    mpq_class main_coeff = 0;  // signed exact coefficient for the two exact-backed kinds

    // Order of the dominant root of unity, b / gcd(dominant, b).
    int dominant_order() const;
};

// Exact series backing the equidistribution and Q_n(-1) main terms.
class ExactBackdrop {
public:
    explicit ExactBackdrop(int n_max);
    int n_max() const { return static_cast<int>(partitions_.size()) - 1; }
    const mpz_class& partitions(int n) const { return partitions_.at(static_cast<std::size_t>(n)); }
    const mpz_class& distinct_odd(int n) const { return distinct_odd_.at(static_cast<std::size_t>(n)); }

private:
    std::vector<mpz_class> partitions_;
    std::vector<mpz_class> distinct_odd_;
};

// Regime of an angle theta = 2 pi a / b in (0, pi) relative to the crossing
// angles; throws boundary_error within 1e-12 of theta13 or theta23.
enum class AngleRegime { one, pair, two };
AngleRegime classify_angle(double theta);

// Main-term profile of Q_n(zeta_b^a) for 0 <= a <= b-1.  a = 0 and a = b/2
// route to the exact p(n) and Q_n(-1) profiles; a > b/2 is reduced to b - a
// by conjugation.
AsymptoticProfile qn_profile(int b, int a);

// Profile of p(a1,b,n) - p(a2,b,n).
AsymptoticProfile difference_profile(int a1, int a2, int b);

// Profile of sum_a v[a] p(a,b,n).  The rational overload detects roots of
// P_v among the b-th roots of unity exactly (cyclotomic divisibility); the
// double overload uses |P_v(zeta)| < 1e-9 and logs a warning to stderr.
AsymptoticProfile generic_profile(const std::vector<mpq_class>& v, int b);
AsymptoticProfile generic_profile(const std::vector<double>& v, int b);

// Difference over two disjoint residue sets S1, S2.
struct SetDifferenceSpec {
    int b = 0;
    std::vector<int> s1;
    std::vector<int> s2;

    // Weight vector with +1 on S1, -1 on S2.
    std::vector<mpq_class> weights() const;
};

AsymptoticProfile set_difference_profile(const SetDifferenceSpec& spec);

// Largest divisor d of b such that Phi_d does not divide the weight
// polynomial (exact integer test); the d0 of the set-difference case split.
int largest_unkilled_divisor(const std::vector<mpq_class>& v, int b);

// Same profile with the cosine phase decreased by 2 pi r / d0, the effect of
// shifting both residue sets by r.  Requires a plain cosine_single profile.
AsymptoticProfile shift_profile(const AsymptoticProfile& profile, int r);

// Envelope A n^p e^{2 lambda1 sqrt n}; the exact-backed kinds use p(n) or
// p_DO(n) from the backdrop instead.
double envelope(const AsymptoticProfile& profile, int n);
double envelope(const AsymptoticProfile& profile, int n, const ExactBackdrop& exact);

// The bounded oscillating factor of a real-combination profile at n:
// cos(...), the two-cosine sum, or the discrete factor of the exact kinds.
double predicted_oscillation(const AsymptoticProfile& profile, int n);

// Full main-term value at n (complex for Q_n profiles).  Profiles backed by
// exact series require the backdrop overload.
std::complex<double> evaluate_profile(const AsymptoticProfile& profile, int n);
std::complex<double> evaluate_profile(const AsymptoticProfile& profile, int n,
                                      const ExactBackdrop& exact);

// Indices n <= n_max just before cos(phase + 2 lambda2 sqrt n) crosses zero:
// floor of the crossing position, or crossing - 1 when it is integral;
// indices < 1 are dropped.  Requires kind cosine_single without parity.
std::vector<long> predict_sign_changes(const AsymptoticProfile& profile, long n_max);

}  // namespace partosc::asym
